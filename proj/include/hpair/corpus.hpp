#ifndef HPAIR_CORPUS_HPP
#define HPAIR_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hpair/algebra.hpp"
#include "hpair/young.hpp"

namespace hpair {

// The shipped regression corpus: the catalogue of local Gorenstein
// algebras of dimension up to 6, the two-corner diagram shapes, and the
// closed-form normality oracles for the ray/box/segment families.

struct CatalogueEntry {
    int number = 0;                 // catalogue row
    size_t expectedDim = 0;         // listed dimension
    std::string presentation;      // human-readable K[x..]/(...) form
    FiniteLocalAlgebra algebra;
    // the generating pair when the algebra has dim >= 3 and a canonical
    // hyperplane; absent for the two smallest rows
    std::optional<HPair> pair;
};

// All 14 catalogue rows, in order.
std::vector<CatalogueEntry> gorensteinCatalogue();

// K[x]/(x^{n+1}) as a bare algebra (n >= 1), basis 1, x, ..., x^n.
FiniteLocalAlgebra truncatedPolynomialAlgebra(int n);

struct TwoCornerShape {
    std::string label;            // "a".."j", "e'", "f'"
    std::vector<Cell> corners;
    std::vector<Cell> precorners;  // expected, in cellBefore order
    bool exceptional = false;
};

// The twelve listed 2-dimensional shapes with at most two corner cells.
std::vector<TwoCornerShape> twoCornerShapes();

// Closed-form normality oracles for the shipped families.
bool raysOracleNormal(const std::vector<int>& lengths);           // d1=2 or d2>=d1-1
bool parallelepipedOracleNormal(const std::vector<int>& sides);   // all sides <= 2
bool segmentOracleNormal(int n);                                  // n <= 2

}  // namespace hpair

#endif
