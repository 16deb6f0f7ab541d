#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpair/poly.hpp"
#include "test_util.hpp"

using namespace hpair;
using testutil::randomPoly;
using testutil::zVars;

namespace {
MultiPoly P(const std::string& text, const std::vector<std::string>& vars) {
    return parsePoly(text, vars);
}
}  // namespace

TEST_CASE("multiplication basics") {
    auto vars = zVars(1, 2);
    CHECK(P("z1+z2", vars) * P("z1-z2", vars) == P("z1^2-z2^2", vars));
    CHECK((P("z1+z2", vars) * MultiPoly::zero(vars)).isZero());
    MultiPoly s = P("z1+z2", vars);
    CHECK(s * s * s == P("z1^3+3*z1^2*z2+3*z1*z2^2+z2^3", vars));
    // repeated-addition oracle for the cube
    MultiPoly sq = s * s;
    MultiPoly byAdd = MultiPoly::zero(vars);
    for (const auto& [m, c] : s.terms()) byAdd = byAdd + MultiPoly::term(vars, m, c) * sq;
    CHECK(byAdd == s * s * s);
}

TEST_CASE("derivative basics") {
    auto vars = zVars(1, 3);
    CHECK(derivative(P("z1^2*z2", vars), 0) == P("2*z1*z2", vars));
    CHECK(derivative(P("z1^5", vars), 0) == P("5*z1^4", vars));
    CHECK(derivative(P("z1^2*z2", vars), 2).isZero());
}

TEST_CASE("gcd examples") {
    auto vars = zVars(1, 3);
    CHECK(gcd(P("z1^2*z2", vars), P("z1*z2^2", vars)) == P("z1*z2", vars));
    CHECK(gcd(P("z1+z2", vars), P("z1-z2", vars)) == P("1", vars));
    MultiPoly f = P("z1+z2", vars) * P("z1+z2", vars) * P("z3", vars);
    MultiPoly g = P("z1+z2", vars) * P("z3", vars) * P("z3", vars);
    MultiPoly d = gcd(f, g);
    CHECK(d == P("z1*z3+z2*z3", vars));
    CHECK(tryDivideExact(f, d).has_value());
    CHECK(tryDivideExact(g, d).has_value());
}

TEST_CASE("squarefree quotient examples") {
    auto vars = zVars(1, 3);
    CHECK(squarefreeQuotient(P("z1^3*z2", vars)) == P("z1^2", vars));
    CHECK(squarefreeQuotient(P("z1*z2-z3^2", vars)) == P("1", vars));
    MultiPoly f = P("z1+z2", vars) * P("z1+z2", vars) * P("z1-z2", vars);
    MultiPoly q = squarefreeQuotient(f);
    CHECK(q == P("z1+z2", vars));
    MultiPoly rest = *tryDivideExact(f, q);
    CHECK(squarefreeQuotient(rest) == P("1", vars));
}

TEST_CASE("multinomial") {
    CHECK(multinomial({2, 1}) == 3);
    CHECK(multinomial({0, 0, 0}) == 1);
    CHECK(multinomial({1, 1, 1}) == 6);
    CHECK(multinomial({3, 1}) == 4);
}

TEST_CASE("parse examples") {
    auto vars = zVars(0, 5);
    MultiPoly f = P("z0^4*z5 - z0^3*z1*z4", vars);
    CHECK(f.terms().size() == 2);
    Monomial a{{4, 0, 0, 0, 0, 1}}, b{{3, 1, 0, 0, 1, 0}};
    CHECK(f.coeff(a) == 1);
    CHECK(f.coeff(b) == -1);
    MultiPoly g = P("1/5*z1^5", vars);
    CHECK(g.terms().size() == 1);
    CHECK(g.coeff(Monomial{{0, 5, 0, 0, 0, 0}}) == Rational(1, 5));
    CHECK(P("0", vars).isZero());
    CHECK_THROWS_AS(P("z9", vars), PolyParseError);
    CHECK_THROWS_AS(P("z1 +", vars), PolyParseError);
}

TEST_CASE("render examples") {
    auto vars = zVars(0, 5);
    CHECK(renderPoly(MultiPoly::zero(vars)) == "0");
    std::string printed =
        "z0^4*z5 - z0^3*z1*z4 - z0^3*z2*z3 + z0^2*z1^2*z3 + z0^2*z1*z2^2 - z0*z1^3*z2 + "
        "1/5*z1^5";
    CHECK(renderPoly(P(printed, vars)) == printed);
}

TEST_CASE("embedPoly") {
    auto small = zVars(1, 2);
    auto big = zVars(1, 4);
    CHECK(embedPoly(P("z1*z2", small), big) == P("z1*z2", big));
    CHECK_THROWS_AS(embedPoly(P("z1*z2", small), zVars(3, 4)), std::invalid_argument);
}

TEST_CASE("randomized ring axioms and gcd properties") {
    std::mt19937 rng(20240811);
    auto vars = zVars(1, 3);
    for (int i = 0; i < 300; ++i) {
        MultiPoly f = randomPoly(rng, vars, 4, 4);
        MultiPoly g = randomPoly(rng, vars, 4, 4);
        MultiPoly h = randomPoly(rng, vars, 3, 3);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        if (!f.isZero() && !g.isZero()) {
            MultiPoly d = gcd(f, g);
            CHECK(tryDivideExact(f, d).has_value());
            CHECK(tryDivideExact(g, d).has_value());
            CHECK(gcd(g, f) == d);
            if (!h.isZero()) {
                // gcd(fh, gh) = h * gcd(f, g) up to canonical scaling
                CHECK(gcd(f * h, g * h) == canonical(h * d));
            }
        }
        // parse-render round trip
        CHECK(parsePoly(renderPoly(f), vars) == f);
    }
}

TEST_CASE("homogeneous operations keep homogeneity") {
    std::mt19937 rng(7);
    auto vars = zVars(1, 3);
    for (int i = 0; i < 100; ++i) {
        MultiPoly f = testutil::randomHomogeneous(rng, vars, 3, 4);
        MultiPoly g = testutil::randomHomogeneous(rng, vars, 2, 4);
        CHECK(isHomogeneous(f * g));
        if (!(f * g).isZero()) CHECK((f * g).degree() == 5);
        CHECK(isHomogeneous(derivative(f, 1)));
    }
}

TEST_CASE("gcd with zero and canonical scaling") {
    auto vars = zVars(1, 2);
    CHECK(gcd(P("2*z1^2", vars), MultiPoly::zero(vars)) == P("z1^2", vars));
    CHECK(canonical(P("3*z1+3*z2", vars)) == P("z1+z2", vars));
    CHECK(canonical(MultiPoly::zero(vars)).isZero());
}
