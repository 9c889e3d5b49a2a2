#include "wres/contact.hpp"

#include <algorithm>
#include <functional>

namespace wres {

namespace {

// multi-indices of total degree <= bound over nvars variables, lexicographic
void enumerate_multiindices(size_t nvars, long bound, std::vector<uint32_t>& cur, size_t pos,
                            std::vector<std::vector<uint32_t>>& out) {
    if (pos == nvars) {
        out.push_back(cur);
        return;
    }
    long used = 0;
    for (size_t i = 0; i < pos; ++i) used += cur[i];
    for (long k = 0; k <= bound - used; ++k) {
        cur[pos] = static_cast<uint32_t>(k);
        enumerate_multiindices(nvars, bound, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

Polynomial apply_multi_derivation(Polynomial f, const std::vector<uint32_t>& alpha,
                                  DerivationKind kind, const LogChart& chart) {
    for (size_t v = 0; v < alpha.size() && !f.is_zero(); ++v)
        for (uint32_t k = 0; k < alpha[v]; ++k) f = apply_derivation(f, v, kind, chart);
    return f;
}

std::vector<MaximalContact> collect_candidates(const Ideal& I, const LogChart& chart,
                                               DerivationKind kind, bool first_only) {
    if (!chart.base_is_origin())
        throw Error("maximal_contact: chart base point must be the origin");
    OrderResult ord = order_at(I, chart, kind);
    if (!ord.is_finite())
        throw Error("maximal_contact: order is infinite");
    long a = ord.finite();
    if (a < 1) throw Error("maximal_contact: ideal is a unit at the base point");

    std::vector<std::vector<uint32_t>> alphas;
    std::vector<uint32_t> cur(chart.nvars(), 0);
    enumerate_multiindices(chart.nvars(), a - 1, cur, 0, alphas);

    std::vector<MaximalContact> found;
    for (size_t gi = 0; gi < I.generators().size(); ++gi) {
        for (auto& alpha : alphas) {
            Polynomial h = apply_multi_derivation(I.generators()[gi], alpha, kind, chart);
            if (h.is_zero()) continue;
            if (h.constant_term() != 0) continue;
            auto lin = h.linear_coefficients();
            long uv = -1;
            for (size_t v = 0; v < lin.size(); ++v) {
                if (lin[v] != 0 && !chart.divisor[v]) {
                    uv = static_cast<long>(v);
                    break;
                }
            }
            if (uv < 0) continue;
            Polynomial elem = h.monic();
            bool dup = false;
            for (auto& c : found)
                if (c.element == elem) dup = true;
            if (dup) continue;
            found.push_back({std::move(elem), gi, alpha, a, static_cast<size_t>(uv)});
            if (first_only) return found;
        }
    }
    if (found.empty())
        throw Error("contact collides with divisor: no candidate has a non-divisor "
                    "linear part");
    return found;
}

} // namespace

MaximalContact maximal_contact(const Ideal& I, const LogChart& chart, DerivationKind kind) {
    return collect_candidates(I, chart, kind, true).front();
}

std::vector<MaximalContact> maximal_contact_candidates(const Ideal& I, const LogChart& chart,
                                                       DerivationKind kind) {
    return collect_candidates(I, chart, kind, false);
}

std::vector<std::vector<long>> coefficient_exponent_vectors(long a) {
    // minimal vectors for sum(i*b_i) >= a!: every vector with value in
    // [a!, a!+a-1] such that no single coordinate can be lowered
    Int target = factorial(a);
    std::vector<std::vector<long>> out;
    std::vector<long> b(static_cast<size_t>(a), 0);
    // depth-first over coordinates with pruning on the weighted sum
    std::function<void(size_t, Int)> rec = [&](size_t pos, Int sum) {
        if (sum >= target + a) return; // beyond the minimal window
        if (pos == b.size()) {
            if (sum < target) return;
            for (size_t i = 0; i < b.size(); ++i) {
                if (b[i] == 0) continue;
                if (sum - Int(static_cast<long>(i) + 1) >= target) return; // reducible
            }
            out.push_back(b);
            return;
        }
        long w = static_cast<long>(pos) + 1;
        Int room = target + a - 1 - sum;
        long maxb = static_cast<long>(room / w);
        for (long k = 0; k <= maxb; ++k) {
            b[pos] = k;
            rec(pos + 1, sum + Int(w) * k);
        }
        b[pos] = 0;
    };
    rec(0, Int(0));
    return out;
}

namespace {

// direct sum over the componentwise-minimal exponent vectors;
// stages[i] carries weight i+1
Ideal coefficient_by_enumeration(const std::vector<Ideal>& stages, const RingPtr& ring, long a) {
    std::vector<std::vector<long>> vectors = coefficient_exponent_vectors(a);
    std::vector<long> max_power(static_cast<size_t>(a), 0);
    for (auto& v : vectors)
        for (size_t i = 0; i < v.size(); ++i) max_power[i] = std::max(max_power[i], v[i]);

    std::vector<std::vector<Ideal>> powers(static_cast<size_t>(a));
    for (size_t i = 0; i < powers.size(); ++i) {
        powers[i].push_back(Ideal::unit(ring));
        for (long k = 1; k <= max_power[i]; ++k)
            powers[i].push_back(minimalize(ideal_product(powers[i].back(), stages[i])));
    }

    std::vector<Polynomial> gens;
    for (auto& v : vectors) {
        Ideal prod = Ideal::unit(ring);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            prod = minimalize(ideal_product(prod, powers[i][v[i]]));
        }
        for (auto& g : prod.generators())
            if (!g.is_zero()) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(),
              [](const Polynomial& x, const Polynomial& y) { return Polynomial::compare(x, y) < 0; });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return minimalize(Ideal(ring, std::move(gens)));
}

// The stages are nested (D^{<= a-1}(I) contains ... contains I), so any
// product of weighted degree > a! sits inside one of weighted degree exactly
// a!: demoting a factor to a lower stage enlarges the product while lowering
// the weight. The sum therefore equals the exact-weight-a! piece, and that
// piece satisfies G[w] = sum_i T_i * G[w-i], which stays tractable where the
// vector enumeration blows up.
Ideal coefficient_by_weight_recursion(const std::vector<Ideal>& stages, const RingPtr& ring,
                                      long a) {
    long target = to_long(Rat(factorial(a)));
    std::vector<Ideal> window; // G[w - a] .. G[w - 1]
    for (long i = 0; i < a; ++i) window.push_back(Ideal::unit(ring));

    Ideal current = Ideal::unit(ring);
    for (long w = 1; w <= target; ++w) {
        std::vector<Polynomial> gens;
        for (long i = 1; i <= a && i <= w; ++i) {
            const Ideal& prev = window[static_cast<size_t>(a - i)]; // G[w - i]
            Ideal prod = ideal_product(stages[static_cast<size_t>(i - 1)], prev);
            for (auto& p : prod.generators())
                if (!p.is_zero()) gens.push_back(p);
        }
        current = minimalize(Ideal(ring, std::move(gens)));
        window.erase(window.begin());
        window.push_back(current);
    }
    return current;
}

std::vector<Ideal> ambient_stages(const Ideal& I, long a, DerivationKind kind,
                                  const LogChart& chart) {
    DerivChain chain(I, kind, chart);
    std::vector<Ideal> stages;
    for (long i = 0; i < a; ++i) stages.push_back(chain.upto(a - i - 1));
    return stages;
}

Ideal combine_stages(const std::vector<Ideal>& stages, const RingPtr& ring, long a) {
    if (a <= 3) return coefficient_by_enumeration(stages, ring, a);
    return coefficient_by_weight_recursion(stages, ring, a);
}

void check_order(const Ideal& I, long a, DerivationKind kind, const LogChart& chart,
                 long order_cap) {
    OrderResult ord = order_at(I, chart, kind);
    if (!ord.is_finite() || ord.finite() != a)
        throw Error("coefficient_ideal: a does not match the order at the base point");
    if (a < 1) throw Error("coefficient_ideal: order must be at least 1");
    if (a > order_cap)
        throw Error("coefficient_ideal: order " + std::to_string(a) +
                    " exceeds the cap " + std::to_string(order_cap) +
                    " (a! is out of desk-scale reach)");
}

} // namespace

Ideal coefficient_ideal_enumerated(const Ideal& I, long a, DerivationKind kind,
                                   const LogChart& chart) {
    return coefficient_by_enumeration(ambient_stages(I, a, kind, chart), I.ring(), a);
}

Ideal coefficient_ideal_weighted(const Ideal& I, long a, DerivationKind kind,
                                 const LogChart& chart) {
    return coefficient_by_weight_recursion(ambient_stages(I, a, kind, chart), I.ring(), a);
}

Ideal coefficient_ideal(const Ideal& I, long a, DerivationKind kind, const LogChart& chart,
                        long order_cap) {
    check_order(I, a, kind, chart, order_cap);
    if (a == 1) return minimalize(I);
    return combine_stages(ambient_stages(I, a, kind, chart), I.ring(), a);
}

Ideal coefficient_ideal_restricted(const Ideal& I, long a, DerivationKind kind,
                                   const LogChart& chart, size_t var, const RingPtr& target,
                                   long order_cap) {
    check_order(I, a, kind, chart, order_cap);
    if (a == 1) return minimalize(restrict_ideal(I, var, target));
    std::vector<Ideal> stages;
    for (auto& s : ambient_stages(I, a, kind, chart))
        stages.push_back(minimalize(restrict_ideal(s, var, target)));
    return combine_stages(stages, target, a);
}

} // namespace wres
