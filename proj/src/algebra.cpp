#include "hpair/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hpair {

VectorQ FiniteLocalAlgebra::multiply(const VectorQ& u, const VectorQ& v) const {
    if (u.size() != dim || v.size() != dim)
        throw std::invalid_argument("multiply: coordinate length mismatch");
    VectorQ out(dim, Rational(0));
    for (size_t i = 0; i < dim; ++i) {
        if (u[i] == 0) continue;
        for (size_t j = 0; j < dim; ++j) {
            if (v[j] == 0) continue;
            Rational c = u[i] * v[j];
            const VectorQ& t = table[i][j];
            for (size_t k = 0; k < dim; ++k)
                if (t[k] != 0) out[k] += c * t[k];
        }
    }
    return out;
}

Subspace liftToAlgebra(const Subspace& s, size_t dim) {
    Subspace out;
    out.ambientDim = dim;
    for (const auto& b : s.basis) out.basis.push_back(liftToAlgebra(b));
    return out;
}

VectorQ liftToAlgebra(const VectorQ& v) {
    VectorQ out(v.size() + 1, Rational(0));
    for (size_t i = 0; i < v.size(); ++i) out[i + 1] = v[i];
    return out;
}

namespace {

std::string tripleStr(size_t i, size_t j, size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

using SparseRow = std::vector<std::pair<size_t, Rational>>;  // sorted by index

// Gaussian elimination over sparse rows, pivots keyed by column.
struct SparseElim {
    std::map<size_t, SparseRow> pivots;
    SparseRow merged;

    void add(SparseRow row) {
        while (!row.empty()) {
            auto it = pivots.find(row.front().first);
            if (it == pivots.end()) {
                Rational inv = Rational(1) / row.front().second;
                for (auto& [k, c] : row) c *= inv;
                pivots.emplace(row.front().first, std::move(row));
                return;
            }
            // row -= leading coefficient * pivot row
            const Rational f = row.front().second;
            const SparseRow& p = it->second;
            merged.clear();
            size_t x = 0, y = 0;
            while (x < row.size() || y < p.size()) {
                if (y == p.size() || (x < row.size() && row[x].first < p[y].first)) {
                    merged.push_back(std::move(row[x++]));
                } else if (x == row.size() || p[y].first < row[x].first) {
                    merged.emplace_back(p[y].first, -f * p[y].second);
                    ++y;
                } else {
                    Rational c = row[x].second - f * p[y].second;
                    if (c != 0) merged.emplace_back(row[x].first, std::move(c));
                    ++x;
                    ++y;
                }
            }
            row.swap(merged);
        }
    }

    Subspace toSubspace(size_t ambientDim) const {
        std::vector<VectorQ> basis;
        for (const auto& [col, r] : pivots) {
            VectorQ dense(ambientDim, Rational(0));
            for (const auto& [k, c] : r) dense[k] = c;
            basis.push_back(std::move(dense));
        }
        // normalize to reduced row echelon form like every other Subspace
        return spanOf(ambientDim, basis);
    }
};

// Chain m = m^1, m^2, ... in m-coordinates, computed on sparse rows with the
// sparse structure constants prepared once. Stops after the zero level, or
// after dim+2 levels when m is not nilpotent (signalled through `nilpotent`).
std::vector<Subspace> mPowerLevels(const FiniteLocalAlgebra& a, bool& nilpotent) {
    size_t n = a.dim - 1;
    std::vector<std::vector<SparseRow>> spm(n, std::vector<SparseRow>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const VectorQ& t = a.table[i + 1][j + 1];
            for (size_t k = 1; k <= n; ++k)
                if (t[k] != 0) spm[i][j].emplace_back(k - 1, t[k]);
        }

    std::vector<Subspace> chain;
    std::vector<SparseRow> cur;
    {
        Subspace level;
        level.ambientDim = n;
        for (size_t i = 0; i < n; ++i) {
            VectorQ e(n, Rational(0));
            e[i] = 1;
            level.basis.push_back(std::move(e));
            cur.push_back({{i, Rational(1)}});
        }
        chain.push_back(std::move(level));
    }
    nilpotent = true;
    std::map<size_t, Rational> acc;
    while (chain.back().dim() > 0) {
        if (chain.size() > a.dim + 2) {
            nilpotent = false;
            return chain;
        }
        SparseElim elim;
        for (const auto& r : cur) {
            for (size_t j = 0; j < n; ++j) {
                acc.clear();
                for (const auto& [i, c] : r)
                    for (const auto& [k, t] : spm[i][j]) acc[k] += c * t;
                SparseRow row;
                for (auto& [k, c] : acc)
                    if (c != 0) row.emplace_back(k, std::move(c));
                if (!row.empty()) elim.add(std::move(row));
            }
        }
        cur.assign(elim.pivots.size(), {});
        size_t at = 0;
        for (const auto& [col, r] : elim.pivots) cur[at++] = r;
        chain.push_back(elim.toSubspace(n));
    }
    return chain;
}

}  // namespace

ValidationReport validateAlgebra(const FiniteLocalAlgebra& a) {
    ValidationReport rep;
    if (a.dim == 0) {
        rep.fail("algebra dimension must be positive");
        return rep;
    }
    if (a.labels.size() != a.dim) rep.fail("label count does not match dimension");
    if (!a.labels.empty() && a.labels[0] != "1") rep.fail("basis[0] must be labeled \"1\"");
    if (a.table.size() != a.dim) {
        rep.fail("structure constant table has wrong shape");
        return rep;
    }
    for (size_t i = 0; i < a.dim; ++i) {
        if (a.table[i].size() != a.dim) {
            rep.fail("structure constant table has wrong shape");
            return rep;
        }
        for (size_t j = 0; j < a.dim; ++j)
            if (a.table[i][j].size() != a.dim) {
                rep.fail("structure constant table has wrong shape");
                return rep;
            }
    }

    // e_0 is the unit
    for (size_t j = 0; j < a.dim; ++j) {
        for (size_t k = 0; k < a.dim; ++k) {
            Rational expect = (k == j) ? 1 : 0;
            if (a.table[0][j][k] != expect) {
                rep.fail("e_0 is not the unit: e_0*e_" + std::to_string(j) + " wrong");
                break;
            }
        }
    }

    for (size_t i = 0; i < a.dim; ++i)
        for (size_t j = i + 1; j < a.dim; ++j)
            if (a.table[i][j] != a.table[j][i]) {
                rep.fail("commutativity fails at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            }

    // associativity on all basis triples: (e_i e_j) e_k == e_i (e_j e_k).
    // Work with the nonzero table entries only; by the commutativity just
    // checked, the triple (i, j, k) is equivalent to (k, j, i), so i <= k.
    if (rep.ok) {
        using Sparse = std::vector<std::pair<size_t, Rational>>;
        std::vector<std::vector<Sparse>> sp(a.dim, std::vector<Sparse>(a.dim));
        for (size_t i = 0; i < a.dim; ++i)
            for (size_t j = 0; j < a.dim; ++j)
                for (size_t k = 0; k < a.dim; ++k)
                    if (a.table[i][j][k] != 0) sp[i][j].emplace_back(k, a.table[i][j][k]);

        // entries per product are few; accumulate in a reused flat buffer
        Sparse buf;
        auto product = [&](const Sparse& left, size_t right, Sparse& out) {
            buf.clear();
            for (const auto& [p, c] : left)
                for (const auto& [m, t] : sp[p][right]) {
                    size_t at = 0;
                    while (at < buf.size() && buf[at].first != m) ++at;
                    if (at == buf.size()) buf.emplace_back(m, c * t);
                    else buf[at].second += c * t;
                }
            out.clear();
            for (auto& [m, c] : buf)
                if (c != 0) out.emplace_back(m, std::move(c));
            std::sort(out.begin(), out.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        };
        Sparse lhs, rhs;
        for (size_t i = 0; i < a.dim && rep.ok; ++i)
            for (size_t j = 0; j < a.dim && rep.ok; ++j)
                for (size_t k = i; k < a.dim; ++k) {
                    product(sp[i][j], k, lhs);
                    product(sp[j][k], i, rhs);
                    if (lhs != rhs) {
                        rep.fail("associativity fails at " + tripleStr(i, j, k));
                        break;
                    }
                }
    }

    // m is an ideal: products of non-unit basis vectors stay in m
    for (size_t i = 1; i < a.dim; ++i)
        for (size_t j = 1; j < a.dim; ++j)
            if (a.table[i][j][0] != 0) {
                rep.fail("m is not an ideal: e_" + std::to_string(i) + "*e_" + std::to_string(j) +
                         " has a unit component");
            }

    if (!rep.ok) return rep;

    // nilpotency of m
    if (a.dim == 1) {
        rep.nilpotencyIndex = 1;  // m = 0
        return rep;
    }
    bool nilpotent = false;
    std::vector<Subspace> levels = mPowerLevels(a, nilpotent);
    if (!nilpotent) {
        rep.fail("m is not nilpotent");
        return rep;
    }
    rep.nilpotencyIndex = levels.size();
    return rep;
}

std::vector<Subspace> powerChain(const FiniteLocalAlgebra& a) {
    if (a.dim == 1) {
        Subspace zero;
        zero.ambientDim = 0;
        return {zero};
    }
    bool nilpotent = false;
    std::vector<Subspace> chain = mPowerLevels(a, nilpotent);
    if (!nilpotent) throw std::logic_error("powerChain: maximal ideal is not nilpotent");
    return chain;
}

Subspace socle(const FiniteLocalAlgebra& a) {
    size_t n = a.dim - 1;
    MatrixQ m(n * a.dim, a.dim);
    for (size_t i = 1; i <= n; ++i)
        for (size_t k = 0; k < a.dim; ++k)
            for (size_t s = 0; s < a.dim; ++s)
                m.a[(i - 1) * a.dim + k][s] = a.table[s][i][k];
    return nullspace(m);
}

bool isGorenstein(const FiniteLocalAlgebra& a) { return socle(a).dim() == 1; }

ValidationReport validateHPair(const HPair& h) {
    ValidationReport rep = validateAlgebra(h.algebra);
    if (!rep.ok) return rep;
    size_t n = h.algebra.maxIdealDim();
    if (n == 0) {
        rep.fail("no hyperplane exists: maximal ideal is zero");
        return rep;
    }
    if (h.hyperplane.ambientDim != n) {
        rep.fail("U not inside m: wrong ambient dimension");
        return rep;
    }
    if (spanOf(n, h.hyperplane.basis).dim() != h.hyperplane.dim()) {
        rep.fail("U basis is linearly dependent");
        return rep;
    }
    if (h.hyperplane.dim() != n - 1) {
        rep.fail("U does not have codimension 1 in m");
        return rep;
    }
    if (h.complementWitness.size() != n) {
        rep.fail("w has wrong coordinate length");
        return rep;
    }
    if (spanContains(h.hyperplane, h.complementWitness)) {
        rep.fail("w lies in U");
        return rep;
    }

    // generation: span(1, U, U^2, ...) must stabilize at A
    size_t dim = h.algebra.dim;
    std::vector<VectorQ> gens;
    {
        VectorQ unit(dim, Rational(0));
        unit[0] = 1;
        gens.push_back(std::move(unit));
    }
    Subspace uLift = liftToAlgebra(h.hyperplane, dim);
    for (const auto& b : uLift.basis) gens.push_back(b);
    Subspace acc = spanOf(dim, gens);
    std::vector<VectorQ> cur = uLift.basis;
    while (acc.dim() < dim) {
        std::vector<VectorQ> next;
        for (const auto& u : cur)
            for (const auto& v : uLift.basis) next.push_back(h.algebra.multiply(u, v));
        Subspace nextSpan = spanOf(dim, next);
        Subspace grown = spanOf(dim, stackRows({acc, nextSpan}));
        if (grown.dim() == acc.dim()) break;
        acc = grown;
        // carry a basis, not the raw products, to the next round
        cur = std::move(nextSpan.basis);
    }
    if (acc.dim() != dim) rep.fail("U does not generate the algebra");
    return rep;
}

VectorQ dualFunctional(const HPair& h) {
    size_t n = h.algebra.maxIdealDim();
    // equations: pi(u) = 0 for u in U-basis, pi(w) = 1
    MatrixQ m(h.hyperplane.dim() + 1, n + 1);
    for (size_t r = 0; r < h.hyperplane.dim(); ++r)
        for (size_t i = 0; i < n; ++i) m.a[r][i] = h.hyperplane.basis[r][i];
    for (size_t i = 0; i < n; ++i) m.a[h.hyperplane.dim()][i] = h.complementWitness[i];
    m.a[h.hyperplane.dim()][n] = 1;

    std::vector<size_t> pivots = rref(m);
    VectorQ pi(n, Rational(0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) throw std::logic_error("dualFunctional: inconsistent system");
        pi[pivots[r]] = m.a[r][n];
    }
    return pi;
}

size_t hpairDegree(const HPair& h) {
    std::vector<Subspace> chain = powerChain(h.algebra);
    size_t d = 0;
    for (size_t k = 0; k < chain.size(); ++k) {
        if (!subspaceContains(h.hyperplane, chain[k])) d = k + 1;
    }
    if (d == 0) throw std::logic_error("hpairDegree: every power of m lies in U");
    return d;
}

Subspace reductionIdeal(const HPair& h) {
    size_t dim = h.algebra.dim;
    size_t n = dim - 1;
    VectorQ pi = dualFunctional(h);

    // rows: a_0 = 0, and pi(a * e_j) = 0 for every basis vector e_j
    MatrixQ m(1 + dim, dim);
    m.a[0][0] = 1;
    for (size_t j = 0; j < dim; ++j)
        for (size_t s = 0; s < dim; ++s) {
            Rational val = 0;
            for (size_t i = 1; i <= n; ++i) val += pi[i - 1] * h.algebra.table[s][j][i];
            m.a[1 + j][s] = val;
        }
    return nullspace(m);
}

HPair quotientHPair(const HPair& h, const Subspace& j) {
    size_t dim = h.algebra.dim;
    if (j.ambientDim != dim)
        throw std::invalid_argument("quotientHPair: J has wrong ambient dimension");

    Subspace uLift = liftToAlgebra(h.hyperplane, dim);
    if (!subspaceContains(uLift, j))
        throw std::invalid_argument("quotientHPair: J is not contained in U");
    for (const auto& b : j.basis)
        for (size_t s = 0; s < dim; ++s) {
            VectorQ es(dim, Rational(0));
            es[s] = 1;
            if (!spanContains(j, h.algebra.multiply(b, es)))
                throw std::invalid_argument("quotientHPair: J is not an ideal");
        }

    Subspace full;
    full.ambientDim = dim;
    for (size_t i = 0; i < dim; ++i) {
        VectorQ e(dim, Rational(0));
        e[i] = 1;
        full.basis.push_back(std::move(e));
    }
    Subspace comp = complementBasis(j, full);
    size_t q = comp.dim();

    // identify the surviving original basis indices (greedy picks standard vectors)
    std::vector<size_t> survivors;
    for (const auto& b : comp.basis) {
        size_t idx = dim;
        for (size_t i = 0; i < dim; ++i) {
            if (b[i] == 1) {
                idx = i;
                break;
            }
        }
        survivors.push_back(idx);
    }
    if (survivors.empty() || survivors[0] != 0)
        throw std::logic_error("quotientHPair: unit did not survive the quotient");

    std::vector<VectorQ> combined = comp.basis;
    for (const auto& b : j.basis) combined.push_back(b);

    auto reduceModJ = [&](const VectorQ& v) {
        std::optional<VectorQ> coords = coordinatesIn(combined, v);
        if (!coords) throw std::logic_error("quotientHPair: vector outside combined basis span");
        VectorQ out(q);
        for (size_t i = 0; i < q; ++i) out[i] = (*coords)[i];
        return out;
    };

    FiniteLocalAlgebra qa;
    qa.dim = q;
    for (size_t s : survivors) qa.labels.push_back(h.algebra.labels[s]);
    qa.table.assign(q, std::vector<VectorQ>(q));
    for (size_t x = 0; x < q; ++x)
        for (size_t y = 0; y < q; ++y)
            qa.table[x][y] = reduceModJ(h.algebra.multiply(comp.basis[x], comp.basis[y]));

    auto toNewMaxIdeal = [&](const VectorQ& liftedVec) {
        VectorQ reduced = reduceModJ(liftedVec);
        if (reduced[0] != 0)
            throw std::logic_error("quotientHPair: m-vector acquired a unit component");
        VectorQ out(q - 1);
        for (size_t i = 1; i < q; ++i) out[i - 1] = reduced[i];
        return out;
    };

    std::vector<VectorQ> uVectors;
    for (const auto& b : h.hyperplane.basis) uVectors.push_back(toNewMaxIdeal(liftToAlgebra(b)));

    HPair out;
    out.algebra = std::move(qa);
    out.hyperplane = spanOf(q - 1, uVectors);
    out.complementWitness = toNewMaxIdeal(liftToAlgebra(h.complementWitness));
    return out;
}

}  // namespace hpair
