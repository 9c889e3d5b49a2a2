#pragma once

#include "wres/derivations.hpp"

namespace wres {

/// Maximal contact element: a member of D^{<= a-1}(I) vanishing at the base
/// point whose linear part has a nonzero coefficient on an eligible
/// (non-divisor) variable. Elements are normalized monic.
struct MaximalContact {
    Polynomial element;
    size_t gen_index;                 // which generator it was derived from
    std::vector<uint32_t> multi_index; // derivative multi-index, one entry per variable
    long order_context;               // the a with element in D^{<= a-1}(I)
    size_t unit_var;                  // eligible variable carrying the unit derivative
};

/// Deterministic selection: smallest generator index, then lexicographically
/// smallest derivative multi-index, then smallest variable index for the
/// unit derivative. Requires 1 <= order_at(I) < infinity.
MaximalContact maximal_contact(const Ideal& I, const LogChart& chart, DerivationKind kind);

/// All admissible candidates in selection order (distinct elements only);
/// used by the choice-independence checks.
std::vector<MaximalContact> maximal_contact_candidates(const Ideal& I, const LogChart& chart,
                                                       DerivationKind kind);

/// Coefficient ideal: sum over componentwise-minimal exponent vectors
/// (b_1..b_a) with sum(i*b_i) >= a! of products D^{<=a-1}(I)^{b_1} ... I^{b_a},
/// where D^{<=a-i}(I) carries weight i. Requires a = order_at(I).
/// Orders above `order_cap` are rejected: a! makes the enumeration explode.
Ideal coefficient_ideal(const Ideal& I, long a, DerivationKind kind, const LogChart& chart,
                        long order_cap = 8);

/// C(I,a) restricted to V(var), assembled from the restricted derivative
/// stages (restriction is a ring map, so it commutes with the stage
/// products); much cheaper than restricting the ambient coefficient ideal.
Ideal coefficient_ideal_restricted(const Ideal& I, long a, DerivationKind kind,
                                   const LogChart& chart, size_t var, const RingPtr& target,
                                   long order_cap = 8);

/// The exponent vectors the sum ranges over, exposed for tests.
std::vector<std::vector<long>> coefficient_exponent_vectors(long a);

/// Both internal routes, exposed so tests can check they generate the same
/// ideal: the minimal-cover enumeration, and the exact-weight recursion that
/// exploits the nesting of the derivative stages.
Ideal coefficient_ideal_enumerated(const Ideal& I, long a, DerivationKind kind,
                                   const LogChart& chart);
Ideal coefficient_ideal_weighted(const Ideal& I, long a, DerivationKind kind,
                                 const LogChart& chart);

} // namespace wres
