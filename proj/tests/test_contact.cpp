#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "wres/contact.hpp"
#include "wres/parse.hpp"

using namespace wres;

namespace {

Polynomial P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

Ideal I(const std::vector<std::string>& gens, const RingPtr& r) {
    std::vector<Polynomial> ps;
    for (auto& s : gens) ps.push_back(P(s, r));
    return Ideal(r, std::move(ps));
}

} // namespace

TEST_CASE("maximal contact selection") {
    LogChart c = LogChart::make("c", {"x", "y"});
    SUBCASE("cusp selects x") {
        auto mc = maximal_contact(I({"x^2 - y^3"}, c.ring), c, DerivationKind::Plain);
        CHECK(mc.element == P("x", c.ring));
        CHECK(mc.order_context == 2);
        CHECK(mc.unit_var == 0);
        CHECK(mc.multi_index == std::vector<uint32_t>{1, 0});
    }
    SUBCASE("a hyperplane is its own contact") {
        auto mc = maximal_contact(I({"x"}, c.ring), c, DerivationKind::Plain);
        CHECK(mc.element == P("x", c.ring));
        CHECK(mc.order_context == 1);
    }
    SUBCASE("log case rejects the divisor candidate") {
        LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
        auto mc = maximal_contact(I({"x^2 - y^3"}, cl.ring), cl, DerivationKind::Logarithmic);
        CHECK(mc.element == P("x", cl.ring));
    }
    SUBCASE("infinite order is a precondition error") {
        LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
        CHECK_THROWS_WITH_AS(
            maximal_contact(I({"y^3"}, cl.ring), cl, DerivationKind::Logarithmic),
            doctest::Contains("infinite"), Error);
    }
    SUBCASE("divisor collision in the plain case") {
        LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
        CHECK_THROWS_WITH_AS(maximal_contact(I({"y^3"}, cl.ring), cl, DerivationKind::Plain),
                             doctest::Contains("collides with divisor"), Error);
    }
    SUBCASE("symmetric ideal has two candidates") {
        auto cands = maximal_contact_candidates(I({"x*y"}, c.ring), c, DerivationKind::Plain);
        REQUIRE(cands.size() == 2);
        CHECK(cands[0].element == P("x", c.ring)); // from the d/dy derivative
        CHECK(cands[1].element == P("y", c.ring));
    }
    SUBCASE("contact elements are monic") {
        auto mc = maximal_contact(I({"y^2 * x^2"}, c.ring), c, DerivationKind::Plain);
        CHECK(mc.element.lead().c == 1);
    }
}

TEST_CASE("minimal exponent vectors") {
    auto v2 = coefficient_exponent_vectors(2);
    REQUIRE(v2.size() == 2);
    CHECK(v2[0] == std::vector<long>{0, 1});
    CHECK(v2[1] == std::vector<long>{2, 0});
    auto v3 = coefficient_exponent_vectors(3);
    CHECK(v3.size() == 8);
    // every vector satisfies the weighted constraint and is minimal
    for (auto& b : v3) {
        long s = 0;
        for (size_t i = 0; i < b.size(); ++i) s += static_cast<long>(i + 1) * b[i];
        CHECK(s >= 6);
        CHECK(s <= 8);
        for (size_t i = 0; i < b.size(); ++i)
            if (b[i] > 0) CHECK(s - static_cast<long>(i + 1) < 6);
    }
}

TEST_CASE("coefficient ideals") {
    LogChart c = LogChart::make("c", {"x", "y"});
    Ideal cusp = I({"x^2 - y^3"}, c.ring);
    SUBCASE("plain cusp") {
        Ideal C = coefficient_ideal(cusp, 2, DerivationKind::Plain, c);
        CHECK(ideal_equal(C, I({"x^2", "x*y^2", "y^4", "y^3"}, c.ring)));
    }
    SUBCASE("log cusp restricts to (y^3) on V(x)") {
        LogChart cl = LogChart::make("cl", {"x", "y"}, {"y"});
        Ideal C = coefficient_ideal(cusp, 2, DerivationKind::Logarithmic, cl);
        auto res = restrict_to_hyperplane(cl, 0);
        Ideal Cr = restrict_ideal(C, 0, res.chart.ring);
        CHECK(ideal_equal(Cr, I({"y^3"}, res.chart.ring)));
    }
    SUBCASE("order one returns the ideal") {
        Ideal id = I({"x"}, c.ring);
        CHECK(ideal_equal(coefficient_ideal(id, 1, DerivationKind::Plain, c), id));
    }
    SUBCASE("order mismatch is an error") {
        CHECK_THROWS_WITH_AS(coefficient_ideal(cusp, 3, DerivationKind::Plain, c),
                             doctest::Contains("does not match"), Error);
    }
    SUBCASE("cap on the order") {
        Ideal big = I({"x^9"}, c.ring);
        CHECK_THROWS_WITH_AS(coefficient_ideal(big, 9, DerivationKind::Plain, c),
                             doctest::Contains("exceeds the cap"), Error);
    }
    SUBCASE("containment of the power") {
        // I^{(a-1)!} sits inside C(I, a)
        Ideal C = minimalize(coefficient_ideal(cusp, 2, DerivationKind::Plain, c));
        CHECK(ideal_contains(C, ideal_power(cusp, 1)));
        Ideal umb = I({"x^2 - y^2"}, c.ring);
        // order of x^2 - y^2 is 2; (a-1)! = 1
        CHECK(ideal_contains(minimalize(coefficient_ideal(umb, 2, DerivationKind::Plain, c)), umb));
    }
    SUBCASE("functorial under dummy variables") {
        LogChart d = adjoin_dummy_variable(c, "zz");
        Ideal up = I({"x^2 - y^3"}, d.ring);
        Ideal Cd = coefficient_ideal(up, 2, DerivationKind::Plain, d);
        Ideal Cc = coefficient_ideal(cusp, 2, DerivationKind::Plain, c);
        // extension of C equals C of the extension
        std::vector<Polynomial> ext;
        for (auto& g : Cc.generators()) {
            std::vector<Term> ts;
            for (auto& t : g.terms()) {
                Monomial m(3);
                m.e[0] = t.m.e[0];
                m.e[1] = t.m.e[1];
                ts.push_back({m, t.c});
            }
            ext.push_back(Polynomial::from_terms(d.ring, ts));
        }
        CHECK(ideal_equal(Cd, Ideal(d.ring, ext)));
    }
    SUBCASE("the chosen contact stays maximal contact for C") {
        // x has a unit first derivative and lies in D^{<= a!-1}(C(I,a))
        Ideal C = coefficient_ideal(cusp, 2, DerivationKind::Plain, c);
        auto mc = maximal_contact(cusp, c, DerivationKind::Plain);
        Ideal D = derivative_ideal(C, 1, DerivationKind::Plain, c); // a! - 1 = 1
        Ideal Dg = groebner(D);
        CHECK(normal_form(mc.element, Dg).is_zero());
        OrderResult oc = order_at(C, c, DerivationKind::Plain);
        CHECK(oc.finite() == 2); // a! = 2 here
    }
}
