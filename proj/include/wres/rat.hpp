#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace wres {

/// Arbitrary-precision integers and rationals. cpp_rational keeps values
/// canonical: reduced fraction, denominator >= 1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::string to_string(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline long to_long(const Rat& r) {
    if (!is_integer(r)) throw Error("expected integer, got " + to_string(r));
    return static_cast<long>(rat_num(r));
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline Int factorial(long n) {
    if (n < 0) throw Error("factorial of negative number");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace wres
