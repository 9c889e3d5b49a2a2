#include "wres/monomial.hpp"

namespace wres {

namespace {

long deg_range(const Monomial& m, size_t lo, size_t hi) {
    long d = 0;
    for (size_t i = lo; i < hi; ++i) d += m.e[i];
    return d;
}

// degrevlex on the variable range [lo, hi): higher degree wins; ties broken
// by the last differing exponent, smaller exponent winning.
int degrevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    long da = deg_range(a, lo, hi), db = deg_range(b, lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    }
    return 0;
}

int lex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    size_t n = a.e.size();
    switch (kind) {
    case OrderKind::Degrevlex:
        return degrevlex_range(a, b, 0, n);
    case OrderKind::Lex:
        return lex_range(a, b, 0, n);
    case OrderKind::Block: {
        size_t s = split < n ? split : n;
        if (int c = degrevlex_range(a, b, 0, s)) return c;
        return degrevlex_range(a, b, s, n);
    }
    }
    return 0;
}

} // namespace wres
