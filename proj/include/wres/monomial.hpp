#pragma once

#include <cstdint>
#include <vector>

namespace wres {

/// Exponent vector, indexed by the chart's variables.
struct Monomial {
    std::vector<uint32_t> e;

    Monomial() = default;
    explicit Monomial(size_t nvars) : e(nvars, 0) {}

    size_t nvars() const { return e.size(); }

    long degree() const {
        long d = 0;
        for (uint32_t x : e) d += x;
        return d;
    }

    bool is_one() const {
        for (uint32_t x : e)
            if (x) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / o, assuming o divides this.
    Monomial quotient(const Monomial& o) const {
        Monomial r(*this);
        for (size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t i = 0; i < r.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    static bool coprime(const Monomial& a, const Monomial& b) {
        for (size_t i = 0; i < a.e.size(); ++i)
            if (a.e[i] && b.e[i]) return false;
        return true;
    }
};

enum class OrderKind { Degrevlex, Lex, Block };

/// Total order on monomials compatible with multiplication. Block orders
/// compare the first `split` variables degrevlex-first, then the rest.
struct MonomialOrder {
    OrderKind kind = OrderKind::Degrevlex;
    size_t split = 0;

    static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder block(size_t split) { return {OrderKind::Block, split}; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    bool operator==(const MonomialOrder& o) const {
        return kind == o.kind && (kind != OrderKind::Block || split == o.split);
    }
};

} // namespace wres
