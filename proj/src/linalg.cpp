#include "hpair/linalg.hpp"

#include <stdexcept>

namespace hpair {

std::vector<size_t> rref(MatrixQ& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t p = row;
        while (p < m.rows && m.a[p][col] == 0) ++p;
        if (p == m.rows) continue;
        std::swap(m.a[p], m.a[row]);
        Rational inv = Rational(1) / m.a[row][col];
        for (size_t j = col; j < m.cols; ++j) m.a[row][j] *= inv;
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.a[i][col] == 0) continue;
            Rational factor = m.a[i][col];
            for (size_t j = col; j < m.cols; ++j) m.a[i][j] -= factor * m.a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t rank(MatrixQ m) { return rref(m).size(); }

Subspace nullspace(const MatrixQ& m) {
    MatrixQ r = m;
    std::vector<size_t> pivots = rref(r);
    std::vector<bool> isPivot(m.cols, false);
    for (size_t c : pivots) isPivot[c] = true;

    Subspace ker;
    ker.ambientDim = m.cols;
    for (size_t freeCol = 0; freeCol < m.cols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        VectorQ v(m.cols, Rational(0));
        v[freeCol] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.a[i][freeCol];
        ker.basis.push_back(std::move(v));
    }
    return ker;
}

Subspace spanOf(size_t ambientDim, const std::vector<VectorQ>& vectors) {
    MatrixQ m(vectors.size(), ambientDim);
    for (size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambientDim)
            throw std::invalid_argument("spanOf: vector length mismatch");
        m.a[i] = vectors[i];
    }
    std::vector<size_t> pivots = rref(m);
    Subspace s;
    s.ambientDim = ambientDim;
    for (size_t i = 0; i < pivots.size(); ++i) s.basis.push_back(m.a[i]);
    return s;
}

namespace {

// Incremental independence checker: keeps a row-reduced copy of the
// vectors accepted so far.
struct Reducer {
    size_t cols;
    std::vector<VectorQ> rows;       // each row normalized, pivot 1
    std::vector<size_t> pivotCols;

    explicit Reducer(size_t c) : cols(c) {}

    VectorQ reduce(VectorQ v) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            const Rational& f = v[pivotCols[i]];
            if (f == 0) continue;
            Rational factor = f;
            for (size_t j = 0; j < cols; ++j) v[j] -= factor * rows[i][j];
        }
        return v;
    }

    // Adds v if independent from the accepted rows; returns whether added.
    bool tryAdd(const VectorQ& v) {
        VectorQ r = reduce(v);
        size_t p = 0;
        while (p < cols && r[p] == 0) ++p;
        if (p == cols) return false;
        Rational inv = Rational(1) / r[p];
        for (size_t j = 0; j < cols; ++j) r[j] *= inv;
        rows.push_back(std::move(r));
        pivotCols.push_back(p);
        return true;
    }
};

}  // namespace

bool spanContains(const Subspace& s, const VectorQ& v) {
    if (v.size() != s.ambientDim)
        throw std::invalid_argument("spanContains: ambient dimension mismatch");
    Reducer red(s.ambientDim);
    for (const auto& b : s.basis) red.tryAdd(b);
    return !red.tryAdd(v);
}

bool subspaceContains(const Subspace& outer, const Subspace& inner) {
    for (const auto& b : inner.basis)
        if (!spanContains(outer, b)) return false;
    return true;
}

Subspace complementBasis(const Subspace& s, const Subspace& within) {
    if (s.ambientDim != within.ambientDim)
        throw std::invalid_argument("complementBasis: ambient dimension mismatch");
    if (!subspaceContains(within, s))
        throw std::invalid_argument("complementBasis: subspace not contained in ambient space");

    Reducer red(s.ambientDim);
    for (const auto& b : s.basis) red.tryAdd(b);

    Subspace c;
    c.ambientDim = s.ambientDim;
    size_t target = within.dim();
    for (size_t i = 0; i < s.ambientDim && s.dim() + c.dim() < target; ++i) {
        VectorQ e(s.ambientDim, Rational(0));
        e[i] = 1;
        if (!spanContains(within, e)) continue;
        if (red.tryAdd(e)) c.basis.push_back(std::move(e));
    }
    for (size_t i = 0; i < within.basis.size() && s.dim() + c.dim() < target; ++i) {
        if (red.tryAdd(within.basis[i])) c.basis.push_back(within.basis[i]);
    }
    return c;
}

std::vector<VectorQ> stackRows(const std::vector<Subspace>& parts) {
    std::vector<VectorQ> rows;
    for (const auto& p : parts)
        for (const auto& b : p.basis) rows.push_back(b);
    return rows;
}

std::optional<VectorQ> coordinatesIn(const std::vector<VectorQ>& basis, const VectorQ& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return std::nullopt;
        return VectorQ{};
    }
    size_t n = basis[0].size();
    MatrixQ m(n, basis.size() + 1);
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < n; ++i) m.a[i][j] = basis[j][i];
    for (size_t i = 0; i < n; ++i) m.a[i][basis.size()] = v[i];

    std::vector<size_t> pivots = rref(m);
    VectorQ coords(basis.size(), Rational(0));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == basis.size()) return std::nullopt;  // inconsistent
        coords[pivots[i]] = m.a[i][basis.size()];
    }
    return coords;
}

}  // namespace hpair
