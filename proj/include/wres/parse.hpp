#pragma once

#include <string>

#include "wres/ideal.hpp"

namespace wres {

struct ParseError : Error {
    size_t offset;
    ParseError(const std::string& what, size_t off)
        : Error(what + " at offset " + std::to_string(off)), offset(off) {}
};

/// Grammar: rationals ("2", "3/5"), variable names, `+ - * ^`, parentheses,
/// unary minus. `^` binds tighter than `*`, which binds tighter than `+`/`-`.
/// No implicit multiplication; exponents are nonnegative integers.
Polynomial parse_poly(const std::string& src, const RingPtr& ring);

} // namespace wres
