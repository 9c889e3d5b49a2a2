#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wres/ideal.hpp"
#include "wres/parse.hpp"

using namespace wres;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Polynomial P(const std::string& s, const RingPtr& r) { return parse_poly(s, r); }

Ideal I(const std::vector<std::string>& gens, const RingPtr& r) {
    std::vector<Polynomial> ps;
    for (auto& s : gens) ps.push_back(P(s, r));
    return Ideal(r, std::move(ps));
}

// deterministic small random polynomials for the property checks
Polynomial random_poly(std::mt19937& rng, const RingPtr& r, int maxdeg, int nterms) {
    std::uniform_int_distribution<int> dterm(1, nterms), dexp(0, maxdeg), dc(-4, 4);
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

TEST_CASE("rationals are canonical") {
    Rat a(6, 4);
    CHECK(to_string(a) == "3/2");
    CHECK(rat_den(Rat(-3, 6)) == 2);
    CHECK(to_string(Rat(-3, 6)) == "-1/2");
    CHECK(factorial(5) == 120);
}

TEST_CASE("monomial orders") {
    auto r = xy();
    auto drl = MonomialOrder::degrevlex();
    Monomial x2(2), y3(2);
    x2.e = {2, 0};
    y3.e = {0, 3};
    CHECK(drl.compare(x2, y3) < 0); // lower degree
    auto lex = MonomialOrder::lex();
    CHECK(lex.compare(x2, y3) > 0);
    // degrevlex tie-break: x*y^2 vs x^2*y
    Monomial a(2), b(2);
    a.e = {1, 2};
    b.e = {2, 1};
    CHECK(drl.compare(a, b) < 0);
}

TEST_CASE("polynomial arithmetic and printing") {
    auto r = make_ring({"x", "y", "z"});
    Polynomial p = P("2*x^2*y - 3/5*z", r);
    CHECK(p.to_string() == "2*x^2*y - 3/5*z");
    CHECK(P("x^2 - y^3", r).to_string() == "x^2 - y^3");
    CHECK(P("0", r).is_zero());
    CHECK(P("x + 1", r).to_string() == "x + 1");
    CHECK((P("x + y", r) * P("x - y", r)).to_string() == "x^2 - y^2");
    CHECK(P("x + y", r).pow(2).to_string() == "x^2 + 2*x*y + y^2");
    CHECK((P("x", r) - P("x", r)).is_zero());
}

TEST_CASE("parse and print round-trip") {
    auto r = make_ring({"x", "y", "z"});
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, r, 5, 6);
        CHECK(parse_poly(p.to_string(), r) == p);
    }
}

TEST_CASE("parser errors") {
    auto r = xy();
    CHECK_THROWS_WITH_AS(parse_poly("x**2", r), "syntax error at offset 2", ParseError);
    CHECK_THROWS_AS(parse_poly("x^-2", r), ParseError);
    CHECK_THROWS_AS(parse_poly("2x", r), ParseError);          // no implicit multiplication
    CHECK_THROWS_AS(parse_poly("w + 1", r), ParseError);       // unknown variable
    CHECK_THROWS_AS(parse_poly("(x + y", r), ParseError);
    CHECK(parse_poly("-x^2 + 1/3", r).to_string() == "-x^2 + 1/3");
    CHECK(parse_poly("-(x - y)", r) == parse_poly("y - x", r));
}

TEST_CASE("derivatives and evaluation") {
    auto r = xy();
    Polynomial f = P("x^2 - y^3", r);
    CHECK(f.derivative(0) == P("2*x", r));
    CHECK(f.derivative(1) == P("-3*y^2", r));
    CHECK(f.derivative(1, true) == P("-3*y^3", r)); // y * d/dy
    CHECK(evaluate(f, {Rat(2), Rat(1)}) == 3);
    CHECK(*vanishing_order_at(f, {Rat(0), Rat(0)}) == 2);
    CHECK(*vanishing_order_at(f, {Rat(1), Rat(1)}) == 1);
    CHECK(!vanishing_order_at(Polynomial::zero(r), {Rat(0), Rat(0)}));
    // multiplicativity of vanishing order
    std::mt19937 rng(11);
    for (int i = 0; i < 20; ++i) {
        Polynomial a = random_poly(rng, r, 4, 4), b = random_poly(rng, r, 4, 4);
        if (a.is_zero() || b.is_zero()) continue;
        std::vector<Rat> p{Rat(0), Rat(0)};
        CHECK(*vanishing_order_at(a * b, p) == *vanishing_order_at(a, p) + *vanishing_order_at(b, p));
    }
}

TEST_CASE("substitution") {
    auto r = xy();
    auto ruv = make_ring({"u", "y'"});
    Polynomial f = P("x^2 - y^3", r);
    std::vector<Polynomial> sigma{P("u^3", ruv), P("u^2 * y'", ruv)};
    Polynomial g = f.substitute(sigma);
    CHECK(g == P("u^6 - u^6 * y'^3", ruv));
    // identity map
    std::vector<Polynomial> id{P("x", r), P("y", r)};
    CHECK(f.substitute(id) == f);
    CHECK(P("x*y", r).substitute({P("u", ruv), P("u*y'", ruv)}) == P("u^2*y'", ruv));
}

TEST_CASE("groebner bases") {
    auto r = xy();
    SUBCASE("cusp plus maximal contact") {
        Ideal id = I({"x^2 - y^3", "x"}, r);
        auto& b = groebner(id).basis();
        REQUIRE(b.polys.size() == 2);
        CHECK(b.polys[0] == P("x", r));
        CHECK(b.polys[1] == P("y^3", r));
    }
    SUBCASE("already a basis") {
        Ideal id = I({"x"}, r);
        auto& b = id.basis();
        REQUIRE(b.polys.size() == 1);
        CHECK(b.polys[0] == P("x", r));
    }
    SUBCASE("contains a unit") {
        Ideal id = I({"x", "x + 1"}, r);
        auto& b = id.basis();
        REQUIRE(b.polys.size() == 1);
        CHECK(b.polys[0] == P("1", r));
    }
    SUBCASE("zero ideal") {
        Ideal z = Ideal::zero(r);
        CHECK(z.basis().polys.empty());
    }
    SUBCASE("idempotent and grouping-stable") {
        Ideal a = I({"x^2 - y^3", "x"}, r);
        Ideal b = I({"x", "x^2 - y^3"}, r);
        Ideal c(r, a.basis().polys);
        CHECK(a.basis().polys == b.basis().polys);
        CHECK(a.basis().polys == c.basis().polys);
    }
}

TEST_CASE("normal forms") {
    auto r = xy();
    Ideal id = groebner(I({"x^2 - y^3", "x"}, r));
    CHECK(normal_form(P("y^3", r), id).is_zero());
    Ideal ix = groebner(I({"x"}, r));
    CHECK(normal_form(P("1", r), ix) == P("1", r));
    CHECK(normal_form(P("x^2", r), ix).is_zero());
    Ideal fresh = I({"x"}, r);
    CHECK_THROWS_AS(normal_form(P("x", r), fresh), Error);
    // membership consistency: f in I implies nf(f*g + h) = nf(h)
    std::mt19937 rng(3);
    for (int i = 0; i < 20; ++i) {
        Polynomial f = P("x^2 - y^3", r) * random_poly(rng, r, 3, 3);
        Polynomial g = random_poly(rng, r, 3, 3), h = random_poly(rng, r, 3, 3);
        Ideal cusp = groebner(I({"x^2 - y^3"}, r));
        CHECK(normal_form(f * g + h, cusp) == normal_form(h, cusp));
    }
}

TEST_CASE("ideal operations") {
    auto r = xy();
    CHECK(ideal_equal(ideal_product(I({"x"}, r), I({"y"}, r)), I({"x*y"}, r)));
    CHECK(ideal_equal(ideal_power(I({"x", "y"}, r), 2), I({"x^2", "x*y", "y^2"}, r)));
    CHECK(ideal_equal(ideal_sum(I({"x"}, r), I({"y"}, r)), I({"x", "y"}, r)));
    CHECK(ideal_equal(ideal_power(I({"x", "y"}, r), 0), Ideal::unit(r)));
    auto rz = make_ring({"z"});
    CHECK_THROWS_AS(ideal_sum(I({"x"}, r), I({"z"}, rz)), Error);
}

TEST_CASE("triviality") {
    auto r = xy();
    CHECK(is_trivial(I({"x", "x + 1"}, r)));
    auto r1 = make_ring({"x"});
    CHECK(!is_trivial(I({"x^2 + 1"}, r1)));
    CHECK(!is_trivial(I({"x^2 - y^3"}, r)));
    // is_trivial(I) agrees with normal_form(1, I) reducing to zero
    for (auto& gens : {std::vector<std::string>{"x", "x + 1"}, {"x^2 - y^3"}, {"x", "y"}}) {
        Ideal id = groebner(I(gens, r));
        CHECK(is_trivial(id) == normal_form(P("1", r), id).is_zero());
    }
}

TEST_CASE("jet bases see local units") {
    auto r1 = make_ring({"x"});
    // (x^2 + x^3) agrees with (x^2) in the local ring at 0
    auto jb = jet_basis(I({"x^2 + x^3"}, r1), 8);
    REQUIRE(jb.size() == 1);
    CHECK(jb[0] == P("x^2", r1));
    auto r = xy();
    auto jb2 = jet_basis(I({"x^2 + 2*x"}, r), 6);
    REQUIRE(jb2.size() == 1);
    CHECK(jb2[0] == P("x", r));
    CHECK(jet_contains(jet_basis(I({"x^2 + x^3"}, r1), 8), P("x^2", r1), 8));
    CHECK(!jet_contains(jet_basis(I({"x^3"}, r1), 8), P("x^2", r1), 8));
}
