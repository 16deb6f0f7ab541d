#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hpair/corpus.hpp"
#include "hpair/equation.hpp"
#include "hpair/young.hpp"
#include "test_util.hpp"

using namespace hpair;
using testutil::zVars;

namespace {
YoungDiagram twoCorner() { return makeDiagram(2, {Cell{3, 1}, Cell{1, 2}}); }
BData ones(const YoungDiagram& d) {
    BData b;
    for (const auto& c : d.corners) b.values[c] = 1;
    return b;
}
}  // namespace

TEST_CASE("diagram validation") {
    CHECK_THROWS_AS(makeDiagram(2, {}), std::invalid_argument);
    CHECK_THROWS_AS(makeDiagram(2, {Cell{2, 1}, Cell{1, 1}}), std::invalid_argument);  // comparable
    CHECK_THROWS_AS(makeDiagram(2, {Cell{3, 0}}), std::invalid_argument);  // coord 2 unused
    CHECK(makeDiagram(2, {Cell{3, 1}, Cell{1, 2}}).corners ==
          std::vector<Cell>{Cell{1, 2}, Cell{3, 1}});
}

TEST_CASE("cells") {
    CHECK(diagramCells(twoCorner()).size() == 10);
    CHECK(diagramCells(makeDiagram(1, {Cell{4}})).size() == 5);
    CHECK(diagramCells(makeDiagram(2, {Cell{1, 1}})).size() == 4);
    CHECK_THROWS_AS(diagramCells(twoCorner(), 5), std::runtime_error);
}

TEST_CASE("precorners") {
    std::vector<Cell> pre = precornerCells(twoCorner());
    CHECK(pre == std::vector<Cell>{Cell{0, 2}, Cell{3, 0}, Cell{2, 1}});

    CHECK(precornerCells(makeDiagram(2, {Cell{3, 2}})).size() == 2);
    CHECK(precornerCells(makeDiagram(1, {Cell{4}})) == std::vector<Cell>{Cell{3}});
}

TEST_CASE("exceptional coordinates") {
    CHECK(exceptionalCoords(makeDiagram(2, {Cell{6, 0}, Cell{0, 1}})) ==
          std::vector<int>{1});
    CHECK(exceptionalCoords(twoCorner()).empty());
    CHECK(exceptionalCoords(makeDiagram(2, {Cell{1, 1}})).empty());
}

TEST_CASE("buildHPair") {
    YoungDiagram d = twoCorner();
    HPair h = buildHPair(d, ones(d));
    CHECK(h.algebra.dim == 9);
    CHECK(validateAlgebra(h.algebra).ok);
    CHECK(validateHPair(h).ok);

    // exceptional diagrams rejected with a hint
    BData eb;
    eb.values[Cell{6, 0}] = 1;
    CHECK_THROWS_WITH_AS(buildHPair(makeDiagram(2, {Cell{6, 0}, Cell{0, 1}}), eb),
                         doctest::Contains("exceptional"), std::invalid_argument);

    // all corner constants zero rejected
    BData zero;
    CHECK_THROWS_AS(buildHPair(d, zero), std::invalid_argument);

    // segment corner (n) gives K[x]/(x^{n+1})
    HPair seg = familySegment(4);
    CHECK(seg.algebra.dim == 5);
    FiniteLocalAlgebra trunc = truncatedPolynomialAlgebra(4);
    CHECK(seg.algebra.table == trunc.table);
}

TEST_CASE("gorenstein system") {
    YoungDiagram d = twoCorner();
    MatrixQ sys = gorensteinSystem(d, ones(d));
    CHECK(sys.rows == 2);
    CHECK(sys.cols == 3);
    Subspace null = nullspace(sys);
    REQUIRE(null.dim() == 1);
    // columns ordered (0,2), (3,0), (2,1): solutions are alpha * (-1, 0, 1)
    CHECK(null.basis[0][1] == 0);
    CHECK(null.basis[0][0] == -null.basis[0][2]);
    CHECK(null.basis[0][2] != 0);

    auto [rd, rb] = familyRays({3, 2});
    CHECK(nullspace(gorensteinSystem(rd, rb)).dim() == 0);
    auto [pd, pb] = familyParallelepiped({2, 2});
    CHECK(nullspace(gorensteinSystem(pd, pb)).dim() == 0);
}

TEST_CASE("closed form layers match the pipeline") {
    auto checkAgainstPipeline = [](const YoungDiagram& d, const BData& b) {
        ClosedFormLayers cf = closedFormLayers(d, b);
        HypersurfaceReport r = hypersurfaceEquation(buildHPair(d, b));
        REQUIRE(cf.d == r.d);
        CHECK(cf.fd == r.boundary());
        CHECK(cf.fdm1 == r.layer(r.d - 1));
    };
    YoungDiagram tc = twoCorner();
    checkAgainstPipeline(tc, ones(tc));

    ClosedFormLayers cf = closedFormLayers(tc, ones(tc));
    CHECK(cf.d == 4);
    CHECK(cf.fd == parsePoly("-z1^3*z2", zVars(1, 8)));

    for (auto lengths : std::vector<std::vector<int>>{{2, 2}, {3, 2}, {4, 2}, {3, 3}}) {
        auto [d, b] = familyRays(lengths);
        checkAgainstPipeline(d, b);
    }
    for (auto sides : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {3, 1}, {2, 1, 1}}) {
        auto [d, b] = familyParallelepiped(sides);
        checkAgainstPipeline(d, b);
    }
    // degree-2 case: f_{d-1} is the coordinate dual to x^corn
    auto [d22, b22] = familyRays({2, 2});
    ClosedFormLayers q = closedFormLayers(d22, b22);
    CHECK(q.d == 2);
    CHECK(q.fdm1 == parsePoly("z3", zVars(1, 3)));
    checkAgainstPipeline(d22, b22);
}

TEST_CASE("ray family") {
    auto [d, b] = familyRays({3, 2});
    CHECK(d.corners == std::vector<Cell>{Cell{0, 2}, Cell{3, 0}});
    CHECK(b.at(Cell{3, 0}) == 1);
    CHECK_THROWS_AS(familyRays({2, 3}), std::invalid_argument);   // not sorted
    CHECK_THROWS_AS(familyRays({2, 1}), std::invalid_argument);   // too short
    CHECK_THROWS_AS(familyRays({3, 2}, {Rational(0), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("parallelepiped family") {
    auto [d, b] = familyParallelepiped({3, 1});
    CHECK(d.corners == std::vector<Cell>{Cell{3, 1}});
    CHECK(b.at(Cell{3, 1}) == 1);
    CHECK_THROWS_AS(familyParallelepiped({1}), std::invalid_argument);
    CHECK(buildHPair(d, b).algebra.dim == 8);
}

TEST_CASE("simplex family from a prescribed boundary") {
    auto vars2 = zVars(1, 2);
    SimplexFamily xy = familySimplexFromPolynomial(parsePoly("z1*z2", vars2));
    CHECK(xy.lambda0 == Cell{1, 1});
    CHECK(xy.b.at(Cell{1, 1}) == 1);
    CHECK(xy.b.at(Cell{2, 0}) == 0);
    CHECK(xy.b.at(Cell{0, 2}) == 0);

    SimplexFamily circ = familySimplexFromPolynomial(parsePoly("z1^2+z2^2", vars2));
    CHECK(circ.lambda0 == Cell{2, 0});
    CHECK(circ.b.at(Cell{2, 0}) == 1);
    CHECK(circ.b.at(Cell{0, 2}) == 1);
    CHECK(circ.b.at(Cell{1, 1}) == 0);
    // reduced pair is the two-ray quadric algebra
    HPair built = buildHPair(circ.diagram, circ.b);
    HPair reduced = quotientHPair(built, reductionIdeal(built));
    auto [rd, rb] = familyRays({2, 2});
    CHECK(reduced.algebra.dim == 4);
    CHECK(reduced.algebra.table == buildHPair(rd, rb).algebra.table);

    // single-variable g = z1^d reduces to the maximal-degree segment
    SimplexFamily cube = familySimplexFromPolynomial(parsePoly("z1^3", {"z1"}));
    HPair cb = buildHPair(cube.diagram, cube.b);
    HPair cr = quotientHPair(cb, reductionIdeal(cb));
    CHECK(cr.algebra.dim == 4);
    CHECK(cr.algebra.table == familySegment(3).algebra.table);

    CHECK_THROWS_AS(familySimplexFromPolynomial(parsePoly("z1^2+z2", vars2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(familySimplexFromPolynomial(parsePoly("z1", {"z1"})),
                    std::invalid_argument);
}

TEST_CASE("two-corner shapes and the precorner bound") {
    for (const auto& shape : twoCornerShapes()) {
        YoungDiagram d = makeDiagram(2, shape.corners);
        CHECK(precornerCells(d) == shape.precorners);
        CHECK(exceptionalCoords(d).empty() == !shape.exceptional);
        if (!shape.exceptional) CHECK(precornerCells(d).size() >= 2);
    }
}

TEST_CASE("gorenstein agreement on small random diagrams") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-3, 3);
    for (const auto& ideal : testutil::orderIdeals(2, 8)) {
        if (ideal.size() < 2 || !testutil::coversAllCoords(ideal, 2)) continue;
        YoungDiagram d = makeDiagram(2, testutil::cornersOf(ideal));
        if (!exceptionalCoords(d).empty()) continue;
        for (int trial = 0; trial < 3; ++trial) {
            BData b;
            for (const auto& c : d.corners) b.values[c] = num(rng);
            bool anyNonzero = false;
            for (const auto& c : d.corners) anyNonzero = anyNonzero || b.at(c) != 0;
            if (!anyNonzero) b.values[d.corners.front()] = 1;
            bool viaSystem = nullspace(gorensteinSystem(d, b)).dim() == 0;
            bool viaSocle = isGorenstein(buildHPair(d, b).algebra);
            CHECK(viaSystem == viaSocle);
        }
    }
}
