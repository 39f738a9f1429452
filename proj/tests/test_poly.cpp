#include "ppgf/poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace ppgf;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

Poly random_poly(std::mt19937_64& rng, const std::vector<Var>& vars, int max_deg,
                 int terms, int coeff_range) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
    Poly p;
    for (int i = 0; i < terms; ++i) {
        ExpVec e;
        for (Var v : vars) e = e + ExpVec::unit(v, deg(rng));
        p += Poly::monomial(e, Integer(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic matches hand expansions") {
    Var t = var_t(), u = var_u();
    Poly one_plus_t = Poly(1) + Poly::variable(t);

    CHECK(one_plus_t * one_plus_t == P("t^2 + 2*t + 1"));
    CHECK(P("2 + 3*t + 2*t^2") + Poly(0) == P("2 + 3*t + 2*t^2"));
    CHECK((Poly(1) + Poly::variable(t)) * (Poly(1) + Poly::variable(u)) ==
          P("1 + t + u + t*u"));
    CHECK(P("1 - t") - P("1") == -Poly::variable(t));
}

TEST_CASE("canonical text order and rendering") {
    CHECK(P("2*t^2 + 3*t + 2").to_string() == "2 + 3*t + 2*t^2");
    CHECK(P("t*u^2 + t^2*u + t*u + u + t + 1 + t^2*u^2").to_string() ==
          "1 + t + u + t*u + t^2*u + t*u^2 + t^2*u^2");
    CHECK(P("t - 1").to_string() == "-1 + t");
    CHECK(Poly().to_string() == "0");
    CHECK(P("0").is_zero());

    // round trip
    Poly p = P("3 - 2*t + t^2*u - 7*eps^3");
    CHECK(parse_poly(p.to_string()) == p);
}

TEST_CASE("substitution") {
    Var t = var_t(), u = var_u();
    CHECK(P("1 + t + t^2").substitute(t, Poly(1)) == Poly(3));
    CHECK(P("t*u").substitute(u, Poly(1)) == Poly::variable(t));
    CHECK(P("2 + 3*t + 2*t^2").substitute(t, Poly(-1)) == Poly(1));

    // identity substitution
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
        Poly p = random_poly(rng, {t, u}, 4, 6, 9);
        CHECK(p.substitute(t, Poly::variable(t)) == p);
    }
}

TEST_CASE("coefficient extraction") {
    Var t = var_t(), e = var_eps();
    Poly p = P("2 + 2*t + t^2 + t*eps + t^2*eps");
    CHECK(p.coeff_of(e, 1) == P("t + t^2"));
    CHECK(p.coeff_of(e, 0) == P("2 + 2*t + t^2"));
    Poly q = P("1 + t + t^2");
    CHECK(q.coeff_of(e, 0) == q);
    CHECK(P("t^3").coeff_of(t, 2).is_zero());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(42);
    Var t = var_t(), u = var_u(), e = var_eps();
    for (int i = 0; i < 30; ++i) {
        Poly a = random_poly(rng, {t, u, e}, 3, 5, 20);
        Poly b = random_poly(rng, {t, u, e}, 3, 5, 20);
        Poly c = random_poly(rng, {t, u, e}, 3, 5, 20);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("interpolation") {
    Var t = var_t();
    std::vector<std::pair<Integer, Rational>> pts = {
        {Integer(0), Rational(2)}, {Integer(1), Rational(7)}, {Integer(-1), Rational(1)}};
    CHECK(interpolate(pts, t) == P("2 + 3*t + 2*t^2"));

    CHECK(interpolate({{Integer(0), Rational(5)}}, t) == Poly(5));
    CHECK(interpolate({{Integer(0), Rational(0)}, {Integer(1), Rational(1)},
                       {Integer(2), Rational(2)}},
                      t) == Poly::variable(t));

    // evaluate-then-interpolate round trip on random polynomials
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 20; ++rep) {
        Poly p = random_poly(rng, {t}, 5, 4, 50);
        int d = p.degree(t);
        std::vector<std::pair<Integer, Rational>> samples;
        for (int x = 0; x <= d; ++x) {
            Integer y = p.evaluate({{t, Integer(x)}});
            samples.emplace_back(Integer(x), Rational(y));
        }
        CHECK(interpolate(samples, t) == p);
    }

    // fractional data must be rejected
    CHECK_THROWS_AS(interpolate({{Integer(0), Rational(1, 2)}}, t), std::domain_error);
}

TEST_CASE("multivariate evaluation") {
    Var t = var_t(), u = var_u();
    Poly p = P("1 + 2*t*u + u^2");
    CHECK(p.evaluate({{t, Integer(3)}, {u, Integer(2)}}) == Integer(17));
    CHECK_THROWS(p.evaluate({{t, Integer(1)}}));
}
