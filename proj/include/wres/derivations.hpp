#pragma once

#include "wres/chart.hpp"

namespace wres {

/// Plain derivations are d/dx_j for every chart variable; logarithmic ones
/// replace d/dx_j by x_j * d/dx_j on divisor variables.
enum class DerivationKind { Plain, Logarithmic };

/// Applies the basic derivation for `var` of the given kind.
Polynomial apply_derivation(const Polynomial& f, size_t var, DerivationKind kind,
                            const LogChart& chart);

/// D^{<= a}(I): the ideal generated by compositions of at most `a` basic
/// derivations applied to the generators. Computed incrementally, with the
/// generator set re-minimalized at every stage.
Ideal derivative_ideal(const Ideal& I, long a, DerivationKind kind, const LogChart& chart);

/// Order of I at a point: a value in N ∪ {∞}.
struct OrderResult {
    std::optional<long> value; // nullopt = infinity
    bool zero_ideal = false;

    bool is_finite() const { return value.has_value(); }
    long finite() const { return *value; }
};

/// Least a such that D^{<= a}(I) contains a unit at the chart's base point.
/// Infinite for the zero ideal (flagged) and, in the logarithmic case, when
/// the saturation stays proper at the point.
OrderResult order_at(const Ideal& I, const LogChart& chart, DerivationKind kind);

/// max over all points of the order: least a with D^{<= a}(I) = (1), or
/// infinity when the (log) chain stabilizes at a proper ideal.
OrderResult max_order(const Ideal& I, const LogChart& chart, DerivationKind kind);

/// Stable value of the ascending chain of logarithmic derivative ideals.
Ideal monomial_saturation(const Ideal& I, const LogChart& chart);

/// Incremental chain D^{<=0} ⊆ D^{<=1} ⊆ ..., shared by the operations above
/// so one invariant stage computes each level once.
class DerivChain {
public:
    DerivChain(Ideal I, DerivationKind kind, const LogChart& chart);

    /// Stages are minimalized (reduced Groebner generators).
    const Ideal& upto(long a);
    /// True when stage a equals stage a-1 (the chain has stabilized by a).
    bool stabilized_at(long a);

private:
    DerivationKind kind_;
    LogChart chart_;
    std::vector<Ideal> stages_;
    long stable_from_ = -1; // first index whose stage equals its predecessor
};

} // namespace wres
