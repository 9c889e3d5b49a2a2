#include "wres/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace wres {

std::string InvariantVector::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& e : entries) {
        if (!first) os << ", ";
        if (e.omega) os << "w+";
        os << wres::to_string(e.finite);
        first = false;
    }
    if (trailing_infinity) {
        if (!first) os << ", ";
        os << "inf";
    }
    os << ")";
    return os.str();
}

std::string Center::to_string() const {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (auto& p : params) {
        if (!first) os << ", ";
        os << "(" << p.param.to_string() << ")^" << wres::to_string(p.exponent);
        first = false;
    }
    if (monomial_part) {
        if (!first) os << ", ";
        os << monomial_part->first.to_string() << "^(1/" << monomial_part->second << ")";
    }
    os << ")";
    return os.str();
}

namespace {
// entry ranks: finite < omega+finite < infinity
int compare_entry(const InvariantEntry& a, const InvariantEntry& b) {
    if (a.omega != b.omega) return a.omega ? 1 : -1;
    if (a.finite != b.finite) return a.finite < b.finite ? -1 : 1;
    return 0;
}
} // namespace

Cmp compare(const InvariantVector& u, const InvariantVector& v) {
    size_t nu = u.entries.size() + (u.trailing_infinity ? 1 : 0);
    size_t nv = v.entries.size() + (v.trailing_infinity ? 1 : 0);
    size_t n = std::max(nu, nv);
    for (size_t i = 0; i < n; ++i) {
        bool endu = i >= nu, endv = i >= nv;
        if (endu && endv) return Cmp::EQ;
        // a proper truncation is larger than its extensions
        if (endu) return Cmp::GT;
        if (endv) return Cmp::LT;
        bool infu = u.trailing_infinity && i == u.entries.size();
        bool infv = v.trailing_infinity && i == v.entries.size();
        if (infu != infv) return infu ? Cmp::GT : Cmp::LT;
        if (infu) continue;
        if (int c = compare_entry(u.entries[i], v.entries[i])) return c < 0 ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

namespace {

struct StageResult {
    std::vector<Rat> entries;
    bool infinity = false;
    std::vector<CenterParam> params;
    std::optional<Ideal> saturation; // in this stage's chart coordinates
    Int dfactor = 1;
};

long max_gen_degree(const Ideal& I) {
    long d = 0;
    for (auto& g : I.generators()) d = std::max(d, g.total_degree());
    return d;
}

bool ideal_vanishes_at(const Ideal& I, const std::vector<Rat>& p) {
    for (auto& g : I.generators())
        if (evaluate(g, p) != 0) return false;
    return true;
}

// I = (v^a) in the stalk at the origin, decided on jets: both inclusions are
// exact once the jet carries every generator degree.
bool is_principal_power_locally(const Ideal& I, size_t var, long a, long chart_jet,
                                const LogChart& chart) {
    long bound = std::max<long>(a, max_gen_degree(I));
    if (chart_jet > 0) bound = std::min(bound, chart_jet);
    // quick containment I within (v^a) + m^{bound+1}, term by term
    for (auto& g : I.generators())
        for (auto& t : g.terms())
            if (t.m.degree() <= bound && t.m.e[var] < static_cast<uint32_t>(a)) return false;
    auto jb = jet_basis(I, bound);
    if (jb.size() != 1) return false;
    Monomial m(I.ring()->size());
    m.e[var] = static_cast<uint32_t>(a);
    return jb[0] == Polynomial::monomial(I.ring(), m, Rat(1));
}

StageResult recurse(const Ideal& I, const LogChart& chart, DerivationKind kind,
                    const InvOptions& opts, long depth) {
    if (depth > static_cast<long>(chart.nvars()) + 1)
        throw Error("internal error: invariant recursion deeper than the variable count");

    OrderResult ord = order_at(I, chart, kind);
    if (ord.zero_ideal)
        throw Error("invariant recursion reached the zero ideal (stage " +
                    std::to_string(depth) + ")");
    if (!ord.is_finite()) {
        if (kind != DerivationKind::Logarithmic)
            throw Error("internal error: infinite plain order on a nonzero ideal");
        StageResult r;
        r.infinity = true;
        r.saturation = monomial_saturation(I, chart);
        return r;
    }
    long a = ord.finite();
    if (a == 0) throw Error("invariant recursion: ideal is a unit at the base point");

    MaximalContact mc;
    if (depth == 0 && opts.force_contact) {
        auto cands = maximal_contact_candidates(I, chart, kind);
        if (*opts.force_contact >= cands.size())
            throw Error("force_contact index out of range");
        mc = cands[*opts.force_contact];
    } else {
        mc = maximal_contact(I, chart, kind);
    }

    long jet_hint = opts.jet_bound;
    if (jet_hint <= 0) {
        long fa = a <= opts.order_cap ? to_long(Rat(factorial(a))) : 0;
        jet_hint = 2 * (fa + std::max<long>(max_gen_degree(I), 1));
    }
    auto st = straighten(chart, mc.element, {}, jet_hint);
    Ideal IS = minimalize(st.change.apply(I));

    if (is_principal_power_locally(IS, st.var, a, st.chart.jet_bound, st.chart)) {
        StageResult r;
        r.entries.push_back(Rat(a));
        r.params.push_back({mc.element, Rat(a)});
        return r;
    }

    Ideal C = coefficient_ideal(IS, a, kind, st.chart, opts.order_cap);
    auto restricted = restrict_to_hyperplane(st.chart, st.var);
    Ideal CR = restrict_ideal(C, st.var, restricted.chart.ring);

    StageResult inner = recurse(CR, restricted.chart, kind, opts, depth + 1);

    StageResult r;
    Rat scale = Rat(1) / Rat(factorial(a - 1));
    r.entries.push_back(Rat(a));
    for (auto& e : inner.entries) r.entries.push_back(e * scale);
    r.infinity = inner.infinity;
    r.dfactor = factorial(a - 1) * inner.dfactor;
    r.params.push_back({mc.element, Rat(a)});
    for (auto& p : inner.params) {
        Polynomial lifted = st.change.lift(embed_poly(p.param, st.var, st.chart.ring));
        r.params.push_back({std::move(lifted), p.exponent * scale});
    }
    if (inner.saturation) {
        std::vector<Polynomial> gens;
        for (auto& g : inner.saturation->generators())
            gens.push_back(st.change.lift(embed_poly(g, st.var, st.chart.ring)));
        r.saturation = Ideal(st.chart.ring, std::move(gens));
    }

    // a_1 <= a_2 <= ... along the recursion
    for (size_t i = 0; i + 1 < r.entries.size(); ++i)
        if (r.entries[i] > r.entries[i + 1])
            throw Error("internal error: invariant entries are not monotone: " +
                        wres::to_string(r.entries[i]) + " > " + wres::to_string(r.entries[i + 1]));
    return r;
}

InvariantResult run_recursion(const Ideal& I, const LogChart& chart, DerivationKind kind,
                              const InvOptions& opts) {
    if (I.is_zero_ideal()) throw Error("invariant of the zero ideal");
    if (!same_ring(I.ring(), chart.ring)) throw Error("invariant: chart/ideal ring mismatch");
    if (!ideal_vanishes_at(I, chart.base_point))
        throw Error("invariant: ideal does not vanish at the base point");

    Ideal I0 = I;
    LogChart c0 = chart;
    std::optional<CoordinateChange> recentering;
    if (!chart.base_is_origin()) {
        auto [cc, ch] = recenter(chart, chart.base_point);
        I0 = ch.apply(I);
        c0 = std::move(cc);
        recentering = std::move(ch);
    }

    StageResult sr = recurse(I0, c0, kind, opts, 0);

    InvariantResult out;
    for (auto& e : sr.entries) out.inv.entries.push_back({e, false});
    out.inv.trailing_infinity = sr.infinity;
    for (auto& p : sr.params) {
        Polynomial param = recentering ? recentering->lift(p.param) : p.param;
        out.center.params.push_back({std::move(param), p.exponent});
    }
    if (sr.infinity) {
        Ideal Q = *sr.saturation;
        if (recentering) {
            std::vector<Polynomial> gens;
            for (auto& g : Q.generators()) gens.push_back(recentering->lift(g));
            Q = Ideal(chart.ring, std::move(gens));
        }
        out.center.monomial_part = {minimalize(Q), to_long(Rat(sr.dfactor))};
    }
    return out;
}

} // namespace

InvariantResult inv_at(const Ideal& I, const LogChart& chart, const InvOptions& opts) {
    InvariantResult r = run_recursion(I, chart, DerivationKind::Plain, opts);
    if (r.inv.trailing_infinity) throw Error("internal error: plain invariant hit infinity");
    return r;
}

InvariantResult loginv_at(const Ideal& I, const LogChart& chart, const InvOptions& opts) {
    return run_recursion(I, chart, DerivationKind::Logarithmic, opts);
}

InvariantResult monomial_inv_at(const Ideal& Q, const LogChart& chart, const InvOptions& opts) {
    for (auto& g : Q.generators()) {
        if (g.terms().size() != 1)
            throw Error("monomial_inv_at: generator is not a monomial: " + g.to_string());
        for (size_t v = 0; v < chart.nvars(); ++v)
            if (g.terms()[0].m.e[v] > 0 && !chart.divisor[v])
                throw Error("monomial_inv_at: generator leaves the divisor variables: " +
                            g.to_string());
    }
    if (is_trivial(Q)) throw Error("monomial_inv_at: ideal is not proper");

    // plain invariant theory knows nothing of the divisor; forget it so the
    // divisor variables can serve as maximal contacts
    LogChart forgot = chart;
    forgot.divisor.assign(chart.nvars(), false);
    InvariantResult r = run_recursion(Q, forgot, DerivationKind::Plain, opts);

    // §-monomiality: each parameter must be an associate of one divisor variable
    std::vector<bool> used(chart.nvars(), false);
    for (auto& p : r.center.params) {
        long var = -1;
        for (size_t v = 0; v < chart.nvars() && var < 0; ++v) {
            if (!chart.divisor[v] || used[v]) continue;
            if (!p.param.divisible_by_var_power(v, 1)) continue;
            Polynomial q = p.param.divide_by_var_power(v, 1);
            if (q.constant_term() != 0) var = static_cast<long>(v);
        }
        if (var < 0)
            throw Error("monomiality violated: center parameter " + p.param.to_string() +
                        " is not an associate of a divisor variable");
        used[var] = true;
        p.param = Polynomial::variable(chart.ring, var);
    }
    return r;
}

InvariantResult loginv_star_at(const Ideal& I, const LogChart& chart, const InvOptions& opts) {
    InvariantResult base = loginv_at(I, chart, opts);
    if (!base.inv.trailing_infinity) return base;

    const Ideal& Q = base.center.monomial_part->first;
    long d = base.center.monomial_part->second;
    InvariantResult mon = monomial_inv_at(Q, chart, opts);

    InvariantResult out;
    out.inv.entries = base.inv.entries;
    out.center.params = base.center.params;
    for (size_t i = 0; i < mon.inv.entries.size(); ++i) {
        Rat b = mon.inv.entries[i].finite / Rat(d);
        out.inv.entries.push_back({b, true});
        out.center.params.push_back({mon.center.params[i].param, b});
    }
    out.center.monomial_param_count = mon.inv.entries.size();
    return out;
}

Center reduce_center(Center c) {
    if (c.params.empty()) throw Error("reduce_center: no parameters");
    // w_i proportional to 1/a_i, cleared to integers with gcd 1
    Int num_lcm = 1, den_gcd = 0;
    for (auto& p : c.params) {
        if (p.exponent <= 0) throw Error("reduce_center: exponents must be positive");
        num_lcm = int_lcm(num_lcm, rat_num(p.exponent));
        den_gcd = den_gcd == 0 ? rat_den(p.exponent) : int_gcd(den_gcd, rat_den(p.exponent));
    }
    Rat L(num_lcm, den_gcd);
    std::vector<Int> w;
    for (auto& p : c.params) {
        Rat wi = L / p.exponent;
        if (!is_integer(wi)) throw Error("internal error: weight clearing failed");
        w.push_back(rat_num(wi));
    }
    Int g = 0;
    for (auto& x : w) g = int_gcd(g, x);
    ReducedWeights rw;
    for (auto& x : w) rw.weights.push_back(static_cast<long>(x / g));
    rw.ell = c.params[0].exponent * Rat(rw.weights[0]);
    for (size_t i = 0; i < w.size(); ++i)
        if (c.params[i].exponent * Rat(rw.weights[i]) != rw.ell)
            throw Error("internal error: ell is not constant across parameters");
    c.reduced = std::move(rw);
    return c;
}

} // namespace wres
