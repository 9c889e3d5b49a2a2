#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wres/derivations.hpp"
#include "wres/parse.hpp"

using namespace wres;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

Ideal I(const std::vector<std::string>& gens, const RingPtr& r) {
    std::vector<Polynomial> ps;
    for (auto& s : gens) ps.push_back(P(s, r));
    return Ideal(r, std::move(ps));
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& r, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> dterm(1, nterms), dexp(0, maxdeg), dc(-3, 3);
    std::vector<Term> ts;
    int n = dterm(rng);
    for (int t = 0; t < n; ++t) {
        Monomial m(r->size());
        long total = 0;
        for (size_t i = 0; i < r->size(); ++i) {
            int e = dexp(rng);
            if (total + e > maxdeg) e = 0;
            m.e[i] = e;
            total += e;
        }
        int c = dc(rng);
        if (c == 0) c = 1;
        ts.push_back({m, Rat(c)});
    }
    return Polynomial::from_terms(r, std::move(ts));
}

} // namespace

TEST_CASE("derivative ideals, plain and logarithmic") {
    LogChart c = LogChart::make("c", {"x", "y"});
    Ideal cusp = I({"x^2 - y^3"}, c.ring);
    Ideal d1 = derivative_ideal(cusp, 1, DerivationKind::Plain, c);
    CHECK(ideal_equal(d1, I({"x", "y^2"}, c.ring)));
    CHECK(ideal_equal(derivative_ideal(cusp, 0, DerivationKind::Plain, c), cusp));

    LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
    Ideal d1l = derivative_ideal(cusp, 1, DerivationKind::Logarithmic, cl);
    CHECK(ideal_equal(d1l, I({"x", "y^3"}, cl.ring)));
}

TEST_CASE("derivative chain properties") {
    LogChart c = LogChart::make("c", {"x", "y"});
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial f = random_poly(rng, c.ring, 4, 3);
        if (f.is_zero()) continue;
        Ideal id(c.ring, {f});
        // chain monotone: D^{<=a} contains D^{<=a-1}
        for (long a = 1; a <= 2; ++a) {
            CHECK(ideal_contains(derivative_ideal(id, a, DerivationKind::Plain, c),
                                 derivative_ideal(id, a - 1, DerivationKind::Plain, c)));
        }
        // composition: D^{<=1}(D^{<=1}(I)) = D^{<=2}(I)
        Ideal once = derivative_ideal(id, 1, DerivationKind::Plain, c);
        CHECK(ideal_equal(derivative_ideal(once, 1, DerivationKind::Plain, c),
                          derivative_ideal(id, 2, DerivationKind::Plain, c)));
        // log derivative ideal sits inside the plain one
        LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
        CHECK(ideal_contains(derivative_ideal(id, 1, DerivationKind::Plain, cl),
                             derivative_ideal(id, 1, DerivationKind::Logarithmic, cl)));
    }
}

TEST_CASE("order at the base point") {
    LogChart c = LogChart::make("c", {"x", "y"});
    CHECK(order_at(I({"x^2 - y^3"}, c.ring), c, DerivationKind::Plain).finite() == 2);
    CHECK(order_at(I({"x"}, c.ring), c, DerivationKind::Plain).finite() == 1);
    LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
    OrderResult inf = order_at(I({"y^3"}, cl.ring), cl, DerivationKind::Logarithmic);
    CHECK(!inf.is_finite());
    CHECK(!inf.zero_ideal);
    OrderResult z = order_at(Ideal::zero(c.ring), c, DerivationKind::Plain);
    CHECK(!z.is_finite());
    CHECK(z.zero_ideal);
    // order away from the origin
    LogChart moved = c;
    moved.base_point = {Rat(1), Rat(1)};
    CHECK(order_at(I({"x^2 - y^3"}, c.ring), moved, DerivationKind::Plain).finite() == 1);
}

TEST_CASE("maximal order over the chart") {
    LogChart c = LogChart::make("c", {"x", "y"});
    CHECK(max_order(I({"x*y"}, c.ring), c, DerivationKind::Plain).finite() == 2);
    CHECK(max_order(I({"x"}, c.ring), c, DerivationKind::Plain).finite() == 1);
    LogChart cl = LogChart::make("cl", {"x", "y"}, {"x", "y"});
    CHECK(!max_order(I({"x*y"}, cl.ring), cl, DerivationKind::Logarithmic).is_finite());
    // a unit ideal has maximal order 0
    CHECK(max_order(I({"x", "x + 1"}, c.ring), c, DerivationKind::Plain).finite() == 0);
}

TEST_CASE("monomial saturation") {
    LogChart cy = LogChart::make("c", {"x", "y"}, {"y"});
    CHECK(ideal_equal(monomial_saturation(I({"x^2 * y^3"}, cy.ring), cy), I({"y^3"}, cy.ring)));
    CHECK(is_trivial(monomial_saturation(I({"x"}, cy.ring), cy)));
    LogChart cxy = LogChart::make("c", {"x", "y"}, {"x", "y"});
    CHECK(ideal_equal(monomial_saturation(I({"x^2 * y^3"}, cxy.ring), cxy),
                      I({"x^2 * y^3"}, cxy.ring)));
    // saturation strips unit factors
    CHECK(ideal_equal(monomial_saturation(I({"y + x*y"}, cy.ring), cy), I({"y"}, cy.ring)));
}

TEST_CASE("functoriality under dummy variables") {
    LogChart c = LogChart::make("c", {"x", "y"}, {"y"});
    LogChart d = adjoin_dummy_variable(c, "zz");
    for (auto kind : {DerivationKind::Plain, DerivationKind::Logarithmic}) {
        for (const char* src : {"x^2 - y^3", "x*y", "y^3"}) {
            Ideal small = I({src}, c.ring);
            Ideal big = I({src}, d.ring);
            auto o1 = order_at(small, c, kind), o2 = order_at(big, d, kind);
            CHECK(o1.value == o2.value);
            auto m1 = max_order(small, c, kind), m2 = max_order(big, d, kind);
            CHECK(m1.value == m2.value);
        }
    }
}
