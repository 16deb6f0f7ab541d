#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpair/equation.hpp"
#include "hpair/young.hpp"
#include "test_util.hpp"

using namespace hpair;
using testutil::zVars;

TEST_CASE("segment quadric") {
    HypersurfaceReport r = hypersurfaceEquation(familySegment(2));
    CHECK(r.d == 2);
    CHECK(r.f == parsePoly("z0*z2 - 1/2*z1^2", zVars(0, 2)));
    CHECK(r.layer(1) == parsePoly("z2", zVars(1, 2)));
    CHECK(r.layer(2) == parsePoly("-1/2*z1^2", zVars(1, 2)));
    CHECK(r.boundary() == r.layer(2));
}

TEST_CASE("degree-5 segment matches the printed equation") {
    HypersurfaceReport r = hypersurfaceEquation(familySegment(5));
    CHECK(r.d == 5);
    CHECK(renderPoly(canonical(r.f)) ==
          "z0^4*z5 - z0^3*z1*z4 - z0^3*z2*z3 + z0^2*z1^2*z3 + z0^2*z1*z2^2 - z0*z1^3*z2 + "
          "1/5*z1^5");
    CHECK(r.layer(5) == parsePoly("1/5*z1^5", zVars(1, 5)));
    CHECK(r.layer(4) == parsePoly("-z1^3*z2", zVars(1, 5)));
}

TEST_CASE("two-ray quadric surface") {
    auto [diag, b] = familyRays({2, 2});
    HypersurfaceReport r = hypersurfaceEquation(buildHPair(diag, b));
    CHECK(r.d == 2);
    CHECK(r.f == parsePoly("z0*z3 - 1/2*z1^2 - 1/2*z2^2", zVars(0, 3)));
}

TEST_CASE("structure of every report") {
    std::vector<HPair> pairs;
    pairs.push_back(familySegment(4));
    {
        auto [d1, b1] = familyRays({3, 2});
        pairs.push_back(buildHPair(d1, b1));
        auto [d2, b2] = familyParallelepiped({2, 2});
        pairs.push_back(buildHPair(d2, b2));
        BData b;
        b.values[Cell{3, 1}] = 1;
        b.values[Cell{1, 2}] = 1;
        pairs.push_back(buildHPair(makeDiagram(2, {Cell{3, 1}, Cell{1, 2}}), b));
    }
    for (const auto& h : pairs) {
        HypersurfaceReport r = hypersurfaceEquation(h);
        size_t n = h.algebra.dim - 1;
        CHECK(r.d == hpairDegree(h));
        CHECK(isHomogeneous(r.f));
        CHECK(r.f.degree() == static_cast<int>(r.d));

        // no z0^d term
        Monomial z0d{std::vector<int>(n + 1, 0)};
        z0d.exps[0] = static_cast<int>(r.d);
        CHECK(r.f.coeff(z0d) == 0);

        // exact reconstruction f = sum z0^{d-k} f_k
        MultiPoly rebuilt = MultiPoly::zero(r.varNames);
        for (size_t k = 1; k <= r.d; ++k) {
            const MultiPoly& fk = r.layer(k);
            CHECK(isHomogeneous(fk));
            if (!fk.isZero()) CHECK(fk.degree() == static_cast<int>(k));
            Monomial z0pow{std::vector<int>(n + 1, 0)};
            z0pow.exps[0] = static_cast<int>(r.d - k);
            rebuilt = rebuilt + embedPoly(fk, r.varNames) *
                                    MultiPoly::term(r.varNames, z0pow, 1);
        }
        CHECK(rebuilt == r.f);
    }
}

TEST_CASE("invalid pairs are rejected") {
    HPair bad = familySegment(2);
    bad.hyperplane.basis = {VectorQ{0, 1}};
    bad.complementWitness = VectorQ{1, 0};
    CHECK_THROWS_AS(hypersurfaceEquation(bad), std::invalid_argument);
}
