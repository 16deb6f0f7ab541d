#ifndef HPAIR_YOUNG_HPP
#define HPAIR_YOUNG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpair/algebra.hpp"
#include "hpair/poly.hpp"

namespace hpair {

// Exponent vector of a diagram cell.
using Cell = std::vector<int>;

// Cells compare by total degree first, then lexicographically with
// earlier coordinates greater; this puts 0 first and e_1, ..., e_k in
// order, and fixes the basis layout of the built algebras.
bool cellBefore(const Cell& a, const Cell& b);

struct CellBefore {
    bool operator()(const Cell& a, const Cell& b) const { return cellBefore(a, b); }
};

// Finite order-ideal of Z^k_{>=0} given by its corner cells (the maximal
// elements, a nonempty antichain covering every coordinate).
struct YoungDiagram {
    int k = 0;
    std::vector<Cell> corners;
};

// Validates and normalizes (sorts corners). Throws on an empty corner
// set, comparable corners, or a coordinate no corner uses.
YoungDiagram makeDiagram(int k, std::vector<Cell> corners);

constexpr size_t kDefaultCellBudget = 10000;

// All cells below some corner, sorted by cellBefore; includes 0.
// Throws when the cell count exceeds the budget.
std::vector<Cell> diagramCells(const YoungDiagram& d, size_t budget = kDefaultCellBudget);

bool diagramContains(const YoungDiagram& d, const Cell& c);
bool isCorner(const YoungDiagram& d, const Cell& c);

// Non-corner cells all of whose upward neighbors are corners or outside.
std::vector<Cell> precornerCells(const YoungDiagram& d, size_t budget = kDefaultCellBudget);

// Coordinates i (0-based) such that every cell has lambda_i = 0 except
// possibly e_i itself. Empty iff the diagram is non-exceptional.
std::vector<int> exceptionalCoords(const YoungDiagram& d, size_t budget = kDefaultCellBudget);

// The scalar family b_mu on corner cells; at least one must be nonzero.
// Corners missing from the map count as zero.
struct BData {
    std::map<Cell, Rational, CellBefore> values;

    Rational at(const Cell& c) const {
        auto it = values.find(c);
        return it == values.end() ? Rational(0) : it->second;
    }
};

// The algebra with basis {x^lambda : lambda non-corner} plus x^corn,
// products by exponent addition with corner identification
// x^mu = b_mu x^corn, and U spanned by the non-corner cells of positive
// degree. Throws on exceptional diagrams (with a normalization hint) and
// when every b_mu vanishes.
HPair buildHPair(const YoungDiagram& d, const BData& b, size_t budget = kDefaultCellBudget);

// The k x |precorn| matrix of the Gorenstein linear system: row i,
// column lambda carries b_{lambda+e_i} when lambda+e_i is a corner.
// Columns follow the order of precornerCells. The algebra is Gorenstein
// iff the nullspace is zero.
MatrixQ gorensteinSystem(const YoungDiagram& d, const BData& b, size_t budget = kDefaultCellBudget);

// Closed forms of the top two layers, over the same variables z1..zn as
// the built H-pair's equation (z_i dual to the i-th basis cell).
struct ClosedFormLayers {
    size_t d = 0;
    MultiPoly fd;
    MultiPoly fdm1;
};
ClosedFormLayers closedFormLayers(const YoungDiagram& d, const BData& b,
                                  size_t budget = kDefaultCellBudget);

// Corner cells d_i e_i with d_1 >= ... >= d_k >= 2 and nonzero constants;
// the associated hypersurface is normal iff d_1 = 2 or d_2 >= d_1 - 1.
std::pair<YoungDiagram, BData> familyRays(const std::vector<int>& lengths,
                                          const std::vector<Rational>& b = {});

// Single corner (d_1, ..., d_k), b = 1; normal iff all d_i <= 2.
// The one-dimensional side-1 case is rejected (a point in P^1).
std::pair<YoungDiagram, BData> familyParallelepiped(const std::vector<int>& sides);

// The simplex construction realizing a prescribed boundary polynomial:
// Lambda = {|lambda| <= d}, b_lambda = a_lambda c_{lambda0} / (c_lambda a_{lambda0})
// for the graded-lex-first monomial lambda0 of g.
struct SimplexFamily {
    YoungDiagram diagram;
    BData b;
    Cell lambda0;
};
SimplexFamily familySimplexFromPolynomial(const MultiPoly& g);

// The maximal-degree pair: K[x]/(x^{n+1}) with U = <x, ..., x^{n-1}>, w = x^n.
HPair familySegment(int n);

}  // namespace hpair

#endif
