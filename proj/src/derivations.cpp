#include "wres/derivations.hpp"

namespace wres {

Polynomial apply_derivation(const Polynomial& f, size_t var, DerivationKind kind,
                            const LogChart& chart) {
    bool log = kind == DerivationKind::Logarithmic && chart.divisor[var];
    return f.derivative(var, log);
}

DerivChain::DerivChain(Ideal I, DerivationKind kind, const LogChart& chart)
    : kind_(kind), chart_(chart) {
    stages_.push_back(minimalize(std::move(I)));
}

const Ideal& DerivChain::upto(long a) {
    if (a < 0) throw Error("derivative_ideal: negative order");
    while (static_cast<long>(stages_.size()) <= a) {
        long k = static_cast<long>(stages_.size());
        if (stable_from_ >= 0) {
            stages_.push_back(stages_.back());
            continue;
        }
        const Ideal& prev = stages_.back();
        std::vector<Polynomial> gens = prev.generators();
        if (prev.is_zero_ideal()) {
            stages_.push_back(prev);
            stable_from_ = k;
            continue;
        }
        for (auto& g : prev.generators()) {
            for (size_t v = 0; v < chart_.nvars(); ++v) {
                Polynomial d = apply_derivation(g, v, kind_, chart_);
                if (!d.is_zero()) gens.push_back(std::move(d));
            }
        }
        Ideal next = minimalize(Ideal(prev.ring(), std::move(gens)));
        if (next.generators() == prev.generators()) stable_from_ = k;
        stages_.push_back(std::move(next));
    }
    return stages_[a];
}

bool DerivChain::stabilized_at(long a) {
    upto(a);
    return stable_from_ >= 0 && a >= stable_from_;
}

Ideal derivative_ideal(const Ideal& I, long a, DerivationKind kind, const LogChart& chart) {
    DerivChain chain(I, kind, chart);
    return chain.upto(a);
}

namespace {

bool unit_at_base(const Ideal& I, const LogChart& chart) {
    for (auto& g : I.generators())
        if (evaluate(g, chart.base_point) != 0) return true;
    return false;
}

OrderResult order_scan(const Ideal& I, const LogChart& chart, DerivationKind kind,
                       bool global) {
    if (I.is_zero_ideal()) return {std::nullopt, true};
    DerivChain chain(I, kind, chart);
    for (long a = 0;; ++a) {
        const Ideal& D = chain.upto(a);
        bool unit = global ? is_trivial(D) : unit_at_base(D, chart);
        if (unit) return {a, false};
        if (a > 0 && chain.stabilized_at(a)) return {std::nullopt, false};
    }
}

} // namespace

OrderResult order_at(const Ideal& I, const LogChart& chart, DerivationKind kind) {
    return order_scan(I, chart, kind, false);
}

OrderResult max_order(const Ideal& I, const LogChart& chart, DerivationKind kind) {
    return order_scan(I, chart, kind, true);
}

Ideal monomial_saturation(const Ideal& I, const LogChart& chart) {
    long maxdeg = 0;
    for (auto& g : I.generators()) maxdeg = std::max(maxdeg, g.total_degree());
    long cap = static_cast<long>(chart.nvars()) * maxdeg + 1;
    DerivChain chain(I, DerivationKind::Logarithmic, chart);
    for (long a = 1; a <= cap + 1; ++a) {
        chain.upto(a);
        if (!chain.stabilized_at(a)) continue;
        const Ideal& M = chain.upto(a);
        if (!is_trivial(M) && !M.is_zero_ideal()) {
            for (auto& g : M.generators()) {
                bool monomial = g.terms().size() == 1;
                if (monomial)
                    for (size_t v = 0; v < chart.nvars(); ++v)
                        if (g.terms()[0].m.e[v] > 0 && !chart.divisor[v]) monomial = false;
                if (!monomial)
                    throw Error("internal error: monomial saturation stabilized at a "
                                "non-monomial ideal " + M.to_string());
            }
        }
        return M;
    }
    throw Error("internal error: logarithmic derivative chain did not stabilize within " +
                std::to_string(cap) + " stages");
}

} // namespace wres
