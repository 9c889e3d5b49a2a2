#include "wres/ideal.hpp"

#include <algorithm>
#include <set>

namespace wres {

namespace {

bool is_monomial(const Polynomial& p) { return p.terms().size() == 1; }

// all monomials of total degree exactly d
void enumerate_monomials(size_t nvars, long d, Monomial& cur, size_t var,
                         std::vector<Monomial>& out) {
    if (var + 1 == nvars) {
        cur.e[var] = static_cast<uint32_t>(d);
        out.push_back(cur);
        cur.e[var] = 0;
        return;
    }
    for (long k = 0; k <= d; ++k) {
        cur.e[var] = static_cast<uint32_t>(k);
        enumerate_monomials(nvars, d - k, cur, var + 1, out);
    }
    cur.e[var] = 0;
}

std::vector<Monomial> monomials_of_degree(size_t nvars, long d) {
    std::vector<Monomial> out;
    Monomial cur(nvars);
    if (nvars == 0) return out;
    enumerate_monomials(nvars, d, cur, 0, out);
    return out;
}

struct Pair {
    size_t i, j;
    Monomial lcm;
};

} // namespace

Polynomial reduce(const Polynomial& f, const GroebnerBasis& basis, long jet) {
    const MonomialOrder& ord = basis.order;
    Polynomial rem = Polynomial::zero(f.ring());
    Polynomial cur = jet >= 0 ? f.truncate(jet) : f;
    while (!cur.is_zero()) {
        const Term& lt = cur.lead(ord);
        bool reduced = false;
        for (auto& b : basis.polys) {
            const Term& bl = b.lead(ord);
            if (!bl.m.divides(lt.m)) continue;
            Polynomial q = Polynomial::monomial(cur.ring(), lt.m.quotient(bl.m), lt.c / bl.c);
            cur = cur - q * b;
            if (jet >= 0) cur = cur.truncate(jet);
            reduced = true;
            break;
        }
        if (!reduced) {
            // move the lead into the remainder and continue with the tail
            rem = rem + Polynomial::monomial(cur.ring(), lt.m, lt.c);
            cur = cur - Polynomial::monomial(cur.ring(), lt.m, lt.c);
        }
    }
    return rem;
}

GroebnerBasis buchberger(const RingPtr& ring, std::vector<Polynomial> gens,
                         const MonomialOrder& ord, long jet) {
    GroebnerBasis out{ord, {}};
    std::vector<Polynomial> basis;
    for (auto& g : gens) {
        Polynomial p = jet >= 0 ? g.truncate(jet) : g;
        if (!p.is_zero()) basis.push_back(p.monic());
    }
    if (jet >= 0) {
        for (auto& m : monomials_of_degree(ring->size(), jet + 1))
            basis.push_back(Polynomial::monomial(ring, m, Rat(1)));
    }
    std::sort(basis.begin(), basis.end(),
              [](const Polynomial& a, const Polynomial& b) { return Polynomial::compare(a, b) < 0; });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());

    auto pair_less = [&](const Pair& a, const Pair& b) {
        if (int c = ord.compare(a.lcm, b.lcm)) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };

    std::vector<Pair> queue;
    auto push_pairs = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (is_monomial(basis[i]) && is_monomial(basis[j])) continue; // S-poly is 0
            const Monomial& a = basis[i].lead(ord).m;
            const Monomial& b = basis[j].lead(ord).m;
            if (Monomial::coprime(a, b)) continue; // product criterion
            queue.push_back({i, j, Monomial::lcm(a, b)});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) push_pairs(j);

    std::set<std::pair<size_t, size_t>> pending;
    auto rebuild_pending = [&]() {
        pending.clear();
        for (auto& p : queue) pending.insert({p.i, p.j});
    };
    rebuild_pending();

    while (!queue.empty()) {
        auto it = std::min_element(queue.begin(), queue.end(), pair_less);
        Pair p = *it;
        queue.erase(it);
        pending.erase({p.i, p.j});

        // chain criterion: some k with lead(k) | lcm(i,j) and both cross
        // pairs already handled
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!basis[k].lead(ord).m.divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (!pending.count({key1.first, key1.second}) &&
                !pending.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        const Term& fi = basis[p.i].lead(ord);
        const Term& fj = basis[p.j].lead(ord);
        Polynomial s =
            Polynomial::monomial(ring, p.lcm.quotient(fi.m), Rat(1) / fi.c) * basis[p.i] -
            Polynomial::monomial(ring, p.lcm.quotient(fj.m), Rat(1) / fj.c) * basis[p.j];
        GroebnerBasis view{ord, basis};
        Polynomial r = reduce(s, view, jet);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        push_pairs(basis.size() - 1);
        rebuild_pending();
    }

    // minimalize: drop elements whose lead is divisible by another lead
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].lead(ord).m;
            const Monomial& mj = basis[j].lead(ord).m;
            if (mj.divides(mi) && (mi != mj || j < i)) keep = false;
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        GroebnerBasis others{ord, {}};
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.polys.push_back(minimal[j]);
        Polynomial r = reduce(minimal[i], others, jet);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }

    if (jet >= 0) {
        // drop the implicit m^(jet+1) part: pure monomials of degree jet+1
        std::vector<Polynomial> kept;
        for (auto& p : reduced)
            if (!(is_monomial(p) && p.lead(ord).m.degree() == jet + 1)) kept.push_back(p);
        reduced = std::move(kept);
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (int c = ord.compare(a.lead(ord).m, b.lead(ord).m)) return c < 0;
        return Polynomial::compare(a, b) < 0;
    });
    out.polys = std::move(reduced);
    return out;
}

std::vector<Polynomial> jet_basis(const Ideal& I, long jet) {
    return buchberger(I.ring(), I.generators(), MonomialOrder::degrevlex(), jet).polys;
}

bool jet_contains(const std::vector<Polynomial>& jbasis, const Polynomial& f, long jet) {
    GroebnerBasis view{MonomialOrder::degrevlex(), jbasis};
    return reduce(f, view, jet).is_zero();
}

} // namespace wres
