#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpair/equation.hpp"
#include "hpair/geometry.hpp"
#include "hpair/young.hpp"
#include "test_util.hpp"

using namespace hpair;
using testutil::zVars;

namespace {
GeometryVerdict verdictFor(const HPair& h) { return isNormal(hypersurfaceEquation(h)); }
}  // namespace

TEST_CASE("normality of the segment family") {
    CHECK(verdictFor(familySegment(2)).normal);
    CHECK(!verdictFor(familySegment(3)).normal);

    GeometryVerdict v5 = verdictFor(familySegment(5));
    CHECK(!v5.normal);
    // f~_5 = z1^4 and f_4 = -z1^3 z2 share the factor z1^3
    CHECK(v5.witness == parsePoly("z1^3", zVars(1, 5)));
}

TEST_CASE("square-free boundary implies normal") {
    auto [diag, b] = familyRays({2, 2});
    GeometryVerdict v = verdictFor(buildHPair(diag, b));
    CHECK(v.normal);
    CHECK(v.witness.isConstant());

    auto [d32, b32] = familyRays({3, 2});
    CHECK(verdictFor(buildHPair(d32, b32)).normal);
    auto [d42, b42] = familyRays({4, 2});
    CHECK(!verdictFor(buildHPair(d42, b42)).normal);
}

TEST_CASE("essential variable count") {
    CHECK(essentialVariableCount(parsePoly("z0*z3 - 1/2*z1^2 - 1/2*z2^2", zVars(0, 3))) == 4);
    CHECK(essentialVariableCount(parsePoly("z0*z3 - 1/2*z1^2 - 1/2*z2^2", zVars(0, 4))) == 4);
    MultiPoly s = parsePoly("z1+z2", zVars(1, 2));
    CHECK(essentialVariableCount(s * s) == 1);
    CHECK_THROWS_AS(essentialVariableCount(MultiPoly::zero(zVars(1, 2))),
                    std::invalid_argument);
    CHECK_THROWS_AS(essentialVariableCount(parsePoly("z1^2+z2", zVars(1, 2))),
                    std::invalid_argument);
}

TEST_CASE("cone report") {
    HypersurfaceReport r5 = hypersurfaceEquation(familySegment(5));
    GeometryVerdict cone = coneReport(r5.boundary());
    CHECK(cone.essentialCount == 1);
    CHECK(cone.coneApexDim == 4);

    GeometryVerdict flat = coneReport(parsePoly("z0*z3 - 1/2*z1^2 - 1/2*z2^2", zVars(0, 3)));
    CHECK(flat.coneApexDim == 0);
}

TEST_CASE("criterion only sees the two top layers") {
    // appending an unused variable leaves the verdict unchanged
    HypersurfaceReport r = hypersurfaceEquation(familySegment(3));
    GeometryVerdict before = isNormal(r);

    HypersurfaceReport padded = r;
    auto pad = [&](const MultiPoly& f) {
        auto vars = f.vars();
        vars.push_back("zx");
        return embedPoly(f, vars);
    };
    for (auto& layer : padded.layers) layer = pad(layer);
    padded.f = pad(padded.f);
    GeometryVerdict after = isNormal(padded);
    CHECK(before.normal == after.normal);
}

TEST_CASE("square-free top layer is decisive") {
    auto [diag, b] = familyParallelepiped({1, 1});
    HypersurfaceReport r = hypersurfaceEquation(buildHPair(diag, b));
    CHECK(squarefreeQuotient(r.boundary()).isConstant());
    CHECK(isNormal(r).normal);
}
