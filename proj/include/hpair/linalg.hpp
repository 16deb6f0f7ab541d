#ifndef HPAIR_LINALG_HPP
#define HPAIR_LINALG_HPP

#include <optional>
#include <vector>

#include "hpair/rational.hpp"

namespace hpair {

using VectorQ = std::vector<Rational>;

struct MatrixQ {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<VectorQ> a;  // rows x cols

    MatrixQ() = default;
    MatrixQ(size_t r, size_t c) : rows(r), cols(c), a(r, VectorQ(c, Rational(0))) {}
};

struct Subspace {
    size_t ambientDim = 0;
    std::vector<VectorQ> basis;  // linearly independent rows

    size_t dim() const { return basis.size(); }
};

// Reduced row echelon form in place; returns pivot column indices.
// Pivoting is deterministic: columns left to right, first nonzero row.
std::vector<size_t> rref(MatrixQ& m);

size_t rank(MatrixQ m);

// Basis of the right kernel; dimension = cols - rank. Basis vectors are
// indexed by the free columns in ascending order.
Subspace nullspace(const MatrixQ& m);

// Row-reduces the given spanning vectors to an independent basis (RREF rows).
Subspace spanOf(size_t ambientDim, const std::vector<VectorQ>& vectors);

bool spanContains(const Subspace& s, const VectorQ& v);

bool subspaceContains(const Subspace& outer, const Subspace& inner);

// A complement C with within = S (+) C. Candidates are taken greedily
// from the ambient standard basis vectors lying in `within` first, then
// from the basis of `within`, so coordinate subspaces keep coordinate
// complements whenever possible.
Subspace complementBasis(const Subspace& s, const Subspace& within);

// Solves sum_i x_i basis_i = v; empty when v is outside the span.
std::vector<VectorQ> stackRows(const std::vector<Subspace>& parts);

// Coordinates of v in the given (independent) spanning set, if any.
std::optional<VectorQ> coordinatesIn(const std::vector<VectorQ>& basis, const VectorQ& v);

}  // namespace hpair

#endif
