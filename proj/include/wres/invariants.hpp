#pragma once

#include "wres/contact.hpp"

namespace wres {

/// One entry of an invariant vector: a nonnegative rational, or omega plus a
/// nonnegative rational (omega-entries dominate every finite entry).
struct InvariantEntry {
    Rat finite;
    bool omega = false;

    bool operator==(const InvariantEntry& o) const {
        return omega == o.omega && finite == o.finite;
    }
};

/// inv / loginv / loginv* value. A raw loginv may end with infinity instead
/// of carrying omega-entries.
struct InvariantVector {
    std::vector<InvariantEntry> entries;
    bool trailing_infinity = false;

    std::string to_string() const; // "(2, 3)", "(2, w+3)", "(2, inf)"
    bool operator==(const InvariantVector& o) const {
        return entries == o.entries && trailing_infinity == o.trailing_infinity;
    }
};

enum class Cmp { LT, EQ, GT };

/// Lexicographic with omega-entries larger than every rational and a proper
/// truncation larger than any of its extensions. Total order.
Cmp compare(const InvariantVector& u, const InvariantVector& v);

struct CenterParam {
    Polynomial param;
    Rat exponent;
};

struct ReducedWeights {
    Rat ell;
    std::vector<long> weights; // positive integers, gcd 1; exponent_i = ell / w_i
};

/// Blow-up center (x_1^{a_1}, ..., x_k^{a_k}) with an optional monomial tail.
/// In a raw loginv center the tail is Q^{1/d}; in a loginv* center the last
/// `monomial_param_count` parameters are the monomial parameters y_i^{b_i}.
struct Center {
    std::vector<CenterParam> params;
    size_t monomial_param_count = 0;
    std::optional<std::pair<Ideal, long>> monomial_part; // (Q, d) meaning Q^{1/d}
    std::optional<ReducedWeights> reduced;

    std::string to_string() const; // "(x^2, y^3)" or "(x^2, (y^3)^(1/2))"
};

struct InvariantResult {
    InvariantVector inv;
    Center center;
};

struct InvOptions {
    long order_cap = 8;    // coefficient-ideal order cap
    long jet_bound = 0;    // 0 = per-call default
    std::optional<size_t> force_contact; // top-stage candidate override (tests)
};

/// The §-invariant recursion with plain derivatives.
InvariantResult inv_at(const Ideal& I, const LogChart& chart, const InvOptions& opts = {});

/// loginv: same recursion with logarithmic order, derivatives and coefficient
/// ideals; an infinite log order terminates the vector with infinity and a
/// monomial part (M, d), d the product of (a_i - 1)! over the finite stages.
InvariantResult loginv_at(const Ideal& I, const LogChart& chart, const InvOptions& opts = {});

/// Plain invariant of a monomial ideal in divisor variables; verifies the
/// center parameters are associates of single divisor variables and rewrites
/// them to those variables.
InvariantResult monomial_inv_at(const Ideal& Q, const LogChart& chart,
                                const InvOptions& opts = {});

/// loginv*: loginv when finite; otherwise the finite prefix followed by
/// omega + inv(Q)/d, with the monomial center parameters appended.
InvariantResult loginv_star_at(const Ideal& I, const LogChart& chart,
                               const InvOptions& opts = {});

/// Fills in reduced weights: w_i = N/a_i cleared to integers with gcd 1 and
/// ell = a_i * w_i.
Center reduce_center(Center c);

} // namespace wres
