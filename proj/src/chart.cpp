#include "wres/chart.hpp"

#include <algorithm>

namespace wres {

LogChart LogChart::make(std::string name, std::vector<std::string> vars,
                        std::vector<std::string> divisor_vars) {
    LogChart c;
    c.name = std::move(name);
    c.ring = make_ring(std::move(vars));
    c.divisor.assign(c.ring->size(), false);
    for (auto& d : divisor_vars) {
        long idx = c.ring->index_of(d);
        if (idx < 0) throw Error("divisor variable '" + d + "' not in chart");
        c.divisor[idx] = true;
    }
    c.base_point.assign(c.ring->size(), Rat(0));
    return c;
}

bool LogChart::base_is_origin() const {
    for (auto& c : base_point)
        if (c != 0) return false;
    return true;
}

std::vector<std::string> LogChart::divisor_vars() const {
    std::vector<std::string> out;
    for (size_t i = 0; i < divisor.size(); ++i)
        if (divisor[i]) out.push_back(ring->vars[i]);
    return out;
}

Polynomial CoordinateChange::apply(const Polynomial& f) const {
    return f.substitute(forward, exact ? -1 : jet_bound);
}

Ideal CoordinateChange::apply(const Ideal& I) const {
    std::vector<Polynomial> gens;
    for (auto& g : I.generators()) gens.push_back(apply(g));
    return Ideal(forward.empty() ? I.ring() : forward[0].ring(), std::move(gens));
}

Polynomial CoordinateChange::lift(const Polynomial& f) const {
    return f.substitute(inverse);
}

std::pair<LogChart, CoordinateChange> recenter(const LogChart& chart, const std::vector<Rat>& p) {
    if (p.size() != chart.nvars()) throw Error("recenter: point dimension mismatch");
    for (size_t i = 0; i < p.size(); ++i)
        if (chart.divisor[i] && p[i] != 0)
            throw Error("point off the divisor stratum: divisor variable '" +
                        chart.ring->vars[i] + "' nonzero at the point");
    LogChart out = chart;
    out.base_point.assign(chart.nvars(), Rat(0));
    CoordinateChange ch;
    ch.exact = true;
    for (size_t i = 0; i < p.size(); ++i) {
        Polynomial v = Polynomial::variable(chart.ring, i);
        ch.forward.push_back(v + Polynomial::constant(chart.ring, p[i]));
        ch.inverse.push_back(v - Polynomial::constant(chart.ring, p[i]));
    }
    return {std::move(out), std::move(ch)};
}

StraightenResult straighten(const LogChart& chart, const Polynomial& x,
                            const std::vector<bool>& excluded, long jet_hint) {
    if (!same_ring(x.ring(), chart.ring)) throw Error("straighten: ring mismatch");
    if (x.constant_term() != 0) throw Error("straighten: element does not vanish at the origin");
    auto lin = x.linear_coefficients();
    if (std::all_of(lin.begin(), lin.end(), [](const Rat& c) { return c == 0; }))
        throw Error("maximal contact not straightenable: zero linear part");
    long var = -1;
    for (size_t i = 0; i < lin.size(); ++i) {
        bool blocked = chart.divisor[i] || (i < excluded.size() && excluded[i]);
        if (lin[i] != 0 && !blocked) {
            var = static_cast<long>(i);
            break;
        }
    }
    if (var < 0) throw Error("contact collides with divisor: linear part supported only on "
                             "divisor or consumed variables");
    size_t j = static_cast<size_t>(var);
    const Rat c = lin[j];
    const RingPtr& R = chart.ring;
    Polynomial vj = Polynomial::variable(R, j);
    // x = c*x_j + r
    Polynomial r = x - vj * c;

    CoordinateChange ch;
    ch.forward.reserve(R->size());
    ch.inverse.reserve(R->size());
    for (size_t i = 0; i < R->size(); ++i) {
        ch.forward.push_back(Polynomial::variable(R, i));
        ch.inverse.push_back(Polynomial::variable(R, i));
    }
    ch.inverse[j] = x; // the new coordinate equals x in old coordinates

    bool triangular = true;
    for (auto& t : r.terms())
        if (t.m.e[j] > 0) triangular = false;

    LogChart out = chart;
    if (triangular) {
        ch.forward[j] = (vj - r) * (Rat(1) / c);
        ch.exact = true;
    } else {
        long bound = chart.jet_bound > 0 ? chart.jet_bound : jet_hint;
        if (bound <= 0) bound = 2 * (1 + std::max<long>(x.total_degree(), 1));
        // solve x_j = (v_j - r(x_1..x_n))/c by fixed-point iteration on jets
        std::vector<Polynomial> images;
        for (size_t i = 0; i < R->size(); ++i) images.push_back(Polynomial::variable(R, i));
        Polynomial phi = vj * (Rat(1) / c);
        long it = 0;
        for (;; ++it) {
            images[j] = phi;
            Polynomial next = (vj - r.substitute(images, bound)) * (Rat(1) / c);
            next = next.truncate(bound);
            if (next == phi) break;
            if (it > bound + 1) throw Error("straighten: jet inversion did not stabilize");
            phi = std::move(next);
        }
        ch.forward[j] = phi;
        ch.exact = false;
        ch.jet_bound = bound;
        out.jet_bound = bound;
    }
    return {std::move(out), std::move(ch), j};
}

RestrictResult restrict_to_hyperplane(const LogChart& chart, size_t var) {
    if (var >= chart.nvars()) throw Error("restrict: no such variable");
    if (chart.divisor[var]) throw Error("restrict: cannot restrict to a divisor variable");
    LogChart out;
    std::vector<std::string> vars;
    for (size_t i = 0; i < chart.nvars(); ++i)
        if (i != var) vars.push_back(chart.ring->vars[i]);
    out.name = chart.name;
    out.ring = make_ring(std::move(vars));
    for (size_t i = 0; i < chart.nvars(); ++i) {
        if (i == var) continue;
        out.divisor.push_back(chart.divisor[i]);
        out.base_point.push_back(chart.base_point[i]);
    }
    out.jet_bound = chart.jet_bound;
    return {std::move(out), var};
}

Polynomial restrict_poly(const Polynomial& f, size_t var, const RingPtr& target) {
    std::vector<Term> terms;
    for (auto& t : f.terms()) {
        if (t.m.e[var] > 0) continue;
        Monomial m(target->size());
        size_t k = 0;
        for (size_t i = 0; i < t.m.e.size(); ++i)
            if (i != var) m.e[k++] = t.m.e[i];
        terms.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(target, std::move(terms));
}

Ideal restrict_ideal(const Ideal& I, size_t var, const RingPtr& target) {
    std::vector<Polynomial> gens;
    for (auto& g : I.generators()) {
        Polynomial r = restrict_poly(g, var, target);
        if (!r.is_zero()) gens.push_back(std::move(r));
    }
    return Ideal(target, std::move(gens));
}

Polynomial embed_poly(const Polynomial& f, size_t var, const RingPtr& ambient) {
    std::vector<Term> terms;
    for (auto& t : f.terms()) {
        Monomial m(ambient->size());
        size_t k = 0;
        for (size_t i = 0; i < ambient->size(); ++i)
            m.e[i] = (i == var) ? 0 : t.m.e[k++];
        terms.push_back({std::move(m), t.c});
    }
    return Polynomial::from_terms(ambient, std::move(terms));
}

LogChart adjoin_dummy_variable(const LogChart& chart, const std::string& name) {
    if (chart.ring->index_of(name) >= 0) throw Error("dummy variable name already in use");
    LogChart out = chart;
    auto vars = chart.ring->vars;
    vars.push_back(name);
    out.ring = make_ring(std::move(vars));
    out.divisor.push_back(false);
    out.base_point.push_back(Rat(0));
    return out;
}

} // namespace wres
