#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/ideal.hpp"

namespace wres {

/// Substitution map: image polynomial per source variable, all images in one
/// target ring.
using SubstMap = std::vector<Polynomial>;

/// Provenance of a blow-up chart: how the parent's coordinates express in
/// this chart, which variable is exceptional, and the order of the residual
/// cyclic stabilizer.
struct ParentLink {
    std::string parent_name;
    SubstMap subst; // parent var -> polynomial in this chart's variables
    std::string exceptional_var;
    long cyclic_weight = 1;
};

/// Affine coordinate chart with a simple-normal-crossings divisor given by a
/// subset of the variables, and a marked rational base point. All invariant
/// computations happen at the base point after re-centering to the origin.
struct LogChart {
    std::string name;
    RingPtr ring;
    std::vector<bool> divisor;   // per variable
    std::vector<Rat> base_point; // per variable; defaults to the origin
    std::optional<ParentLink> parent;
    long jet_bound = 0; // 0 = exact data; otherwise data is a jet truncated here

    static LogChart make(std::string name, std::vector<std::string> vars,
                         std::vector<std::string> divisor_vars = {});

    size_t nvars() const { return ring->size(); }
    bool base_is_origin() const;
    std::vector<std::string> divisor_vars() const;
    bool in_divisor(size_t var) const { return divisor[var]; }
};

/// A coordinate change between two charts on the same variable list.
/// `forward` carries polynomials of the old chart into the new one (old
/// variable -> its expression in new coordinates); `inverse` goes back.
/// When `exact` is false the inverse direction is only a jet: compositions
/// are the identity modulo terms of total degree > jet_bound.
struct CoordinateChange {
    SubstMap forward;
    SubstMap inverse;
    bool exact = true;
    long jet_bound = 0; // meaningful when !exact

    Polynomial apply(const Polynomial& f) const;
    Ideal apply(const Ideal& I) const;
    Polynomial lift(const Polynomial& f) const; // inverse direction, always polynomial
};

/// Translation taking p to the origin. Every divisor variable must vanish
/// at p: the log structure at p only sees divisor components through p.
std::pair<LogChart, CoordinateChange> recenter(const LogChart& chart, const std::vector<Rat>& p);

/// Coordinate change after which x *is* the designated chart variable.
/// Requires x(0) = 0 and a nonzero linear coefficient on a non-divisor
/// variable outside `excluded`. Triangular changes are exact; otherwise the
/// forward map is a power-series reversion truncated at the chart's jet
/// bound (or `jet_hint` when the chart is exact).
struct StraightenResult {
    LogChart chart;
    CoordinateChange change;
    size_t var; // the designated variable
};
StraightenResult straighten(const LogChart& chart, const Polynomial& x,
                            const std::vector<bool>& excluded = {}, long jet_hint = 0);

/// Chart with `var` removed (restriction to V(var)); ideals push forward by
/// setting var = 0.
struct RestrictResult {
    LogChart chart;
    size_t dropped_var;
};
RestrictResult restrict_to_hyperplane(const LogChart& chart, size_t var);

Polynomial restrict_poly(const Polynomial& f, size_t var, const RingPtr& target);
Ideal restrict_ideal(const Ideal& I, size_t var, const RingPtr& target);

/// Embeds a polynomial of the restricted chart back into the ambient chart
/// (the canonical lift through V(var)).
Polynomial embed_poly(const Polynomial& f, size_t var, const RingPtr& ambient);

/// Chart with one extra unused variable appended (for functoriality checks).
LogChart adjoin_dummy_variable(const LogChart& chart, const std::string& name);

} // namespace wres
