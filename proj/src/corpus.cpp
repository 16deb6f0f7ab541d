#include "hpair/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpair {

FiniteLocalAlgebra truncatedPolynomialAlgebra(int n) {
    if (n < 1) throw std::invalid_argument("truncatedPolynomialAlgebra: n must be at least 1");
    FiniteLocalAlgebra a;
    a.dim = static_cast<size_t>(n) + 1;
    a.labels.push_back("1");
    for (int i = 1; i <= n; ++i)
        a.labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    a.table.assign(a.dim, std::vector<VectorQ>(a.dim, VectorQ(a.dim, Rational(0))));
    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = 0; j < a.dim; ++j)
            if (i + j < a.dim) a.table[i][j][i + j] = 1;
    return a;
}

std::vector<CatalogueEntry> gorensteinCatalogue() {
    std::vector<CatalogueEntry> out;
    auto direct = [&](int no, size_t dim, std::string pres, FiniteLocalAlgebra alg) {
        out.push_back({no, dim, std::move(pres), std::move(alg), std::nullopt});
    };
    auto fromPair = [&](int no, size_t dim, std::string pres, HPair p) {
        CatalogueEntry e{no, dim, std::move(pres), p.algebra, std::move(p)};
        out.push_back(std::move(e));
    };
    auto rays = [](std::vector<int> lengths) {
        auto [diag, b] = familyRays(lengths);
        return buildHPair(diag, b);
    };

    FiniteLocalAlgebra base;
    base.dim = 1;
    base.labels = {"1"};
    base.table = {{VectorQ{Rational(1)}}};
    direct(1, 1, "K", std::move(base));
    direct(2, 2, "K[x1]/(x1^2)", truncatedPolynomialAlgebra(1));
    fromPair(3, 3, "K[x1]/(x1^3)", familySegment(2));
    fromPair(5, 4, "K[x1]/(x1^4)", familySegment(3));
    fromPair(6, 4, "K[x1,x2]/(x1x2, x1^2-x2^2)", rays({2, 2}));
    fromPair(9, 5, "K[x1]/(x1^5)", familySegment(4));
    fromPair(10, 5, "K[x1,x2]/(x1x2, x1^3-x2^2)", rays({3, 2}));
    fromPair(14, 5, "K[x1,x2,x3]/(x1x2, x1x3, x2x3, x1^2-x2^2, x1^2-x3^2)", rays({2, 2, 2}));
    fromPair(18, 6, "K[x1]/(x1^6)", familySegment(5));
    fromPair(19, 6, "K[x1,x2]/(x1x2, x1^4-x2^2)", rays({4, 2}));
    fromPair(20, 6, "K[x1,x2]/(x1x2, x1^3-x2^3)", rays({3, 3}));
    {
        auto [diag, b] = familyParallelepiped({2, 1});
        fromPair(21, 6, "K[x1,x2]/(x1^3, x2^2)", buildHPair(diag, b));
    }
    {
        BData b;
        b.values[Cell{1, 1, 0}] = 1;
        b.values[Cell{0, 0, 3}] = 1;
        YoungDiagram diag = makeDiagram(3, {Cell{1, 1, 0}, Cell{0, 0, 3}});
        fromPair(30, 6, "K[x1,x2,x3]/(x1^2, x2^2, x1x3, x2x3, x1x2-x3^3)",
                 buildHPair(diag, b));
    }
    fromPair(38, 6, "K[x1,x2,x3,x4]/(xi^2-xj^2, xixj, i!=j)", rays({2, 2, 2, 2}));
    return out;
}

std::vector<TwoCornerShape> twoCornerShapes() {
    auto cellSort = [](std::vector<Cell> v) {
        std::sort(v.begin(), v.end(), CellBefore{});
        return v;
    };
    std::vector<TwoCornerShape> out;
    auto add = [&](std::string label, std::vector<Cell> corners, std::vector<Cell> precorners,
                   bool exceptional = false) {
        out.push_back({std::move(label), cellSort(std::move(corners)),
                       cellSort(std::move(precorners)), exceptional});
    };
    add("a", {{4, 3}}, {{4, 2}, {3, 3}});
    add("b", {{4, 3}, {0, 4}}, {{4, 2}, {3, 3}});
    add("c", {{4, 3}, {5, 0}}, {{4, 2}, {3, 3}});
    add("d", {{5, 0}, {0, 4}}, {{4, 0}, {0, 3}});
    add("e", {{6, 0}, {3, 1}}, {{5, 0}, {2, 1}});
    add("e'", {{6, 0}, {0, 1}}, {{5, 0}}, true);
    add("f", {{0, 6}, {1, 3}}, {{0, 5}, {1, 2}});
    add("f'", {{0, 6}, {1, 0}}, {{0, 5}}, true);
    add("g", {{5, 0}, {0, 4}, {1, 1}}, {{4, 0}, {0, 3}});
    add("h", {{4, 3}, {5, 0}, {0, 4}}, {{4, 2}, {3, 3}});
    add("i", {{6, 0}, {3, 1}, {0, 2}}, {{5, 0}, {2, 1}});
    add("j", {{0, 6}, {1, 3}, {2, 0}}, {{0, 5}, {1, 2}});
    return out;
}

bool raysOracleNormal(const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("raysOracleNormal: empty family");
    if (lengths[0] == 2) return true;
    return lengths.size() >= 2 && lengths[1] >= lengths[0] - 1;
}

bool parallelepipedOracleNormal(const std::vector<int>& sides) {
    for (int s : sides)
        if (s > 2) return false;
    return true;
}

bool segmentOracleNormal(int n) { return n <= 2; }

}  // namespace hpair
