#include "hpair/young.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hpair {

namespace {

int cellDegree(const Cell& c) {
    int d = 0;
    for (int e : c) d += e;
    return d;
}

bool cellLeq(const Cell& a, const Cell& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::string cellStr(const Cell& c) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << ")";
    return os.str();
}

}  // namespace

bool cellBefore(const Cell& a, const Cell& b) {
    int da = cellDegree(a), db = cellDegree(b);
    if (da != db) return da < db;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

YoungDiagram makeDiagram(int k, std::vector<Cell> corners) {
    if (k <= 0) throw std::invalid_argument("diagram dimension must be positive");
    if (corners.empty()) throw std::invalid_argument("diagram needs at least one corner cell");
    for (const auto& c : corners) {
        if (static_cast<int>(c.size()) != k)
            throw std::invalid_argument("corner " + cellStr(c) + " has wrong dimension");
        for (int e : c)
            if (e < 0) throw std::invalid_argument("corner " + cellStr(c) + " has a negative entry");
    }
    std::sort(corners.begin(), corners.end(), cellBefore);
    corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
    for (size_t i = 0; i < corners.size(); ++i)
        for (size_t j = 0; j < corners.size(); ++j)
            if (i != j && cellLeq(corners[i], corners[j]))
                throw std::invalid_argument("corners " + cellStr(corners[i]) + " and " +
                                            cellStr(corners[j]) + " are comparable");
    for (int i = 0; i < k; ++i) {
        bool used = false;
        for (const auto& c : corners) used = used || c[i] > 0;
        if (!used)
            throw std::invalid_argument("no cell uses coordinate " + std::to_string(i + 1));
    }
    return YoungDiagram{k, std::move(corners)};
}

bool diagramContains(const YoungDiagram& d, const Cell& c) {
    for (int e : c)
        if (e < 0) return false;
    for (const auto& corner : d.corners)
        if (cellLeq(c, corner)) return true;
    return false;
}

bool isCorner(const YoungDiagram& d, const Cell& c) {
    return std::find(d.corners.begin(), d.corners.end(), c) != d.corners.end();
}

std::vector<Cell> diagramCells(const YoungDiagram& d, size_t budget) {
    std::set<Cell, CellBefore> seen;
    std::vector<Cell> queue;
    Cell origin(d.k, 0);
    seen.insert(origin);
    queue.push_back(origin);
    while (!queue.empty()) {
        Cell cur = queue.back();
        queue.pop_back();
        for (int i = 0; i < d.k; ++i) {
            Cell next = cur;
            ++next[i];
            if (!diagramContains(d, next) || seen.count(next)) continue;
            if (seen.size() >= budget)
                throw std::runtime_error("diagram exceeds the cell budget of " +
                                         std::to_string(budget));
            seen.insert(next);
            queue.push_back(std::move(next));
        }
    }
    return std::vector<Cell>(seen.begin(), seen.end());
}

std::vector<Cell> precornerCells(const YoungDiagram& d, size_t budget) {
    std::vector<Cell> out;
    for (const auto& cell : diagramCells(d, budget)) {
        if (isCorner(d, cell)) continue;
        bool pre = true;
        for (int i = 0; i < d.k && pre; ++i) {
            Cell up = cell;
            ++up[i];
            if (diagramContains(d, up) && !isCorner(d, up)) pre = false;
        }
        if (pre) out.push_back(cell);
    }
    return out;
}

std::vector<int> exceptionalCoords(const YoungDiagram& d, size_t budget) {
    std::vector<Cell> cells = diagramCells(d, budget);
    std::vector<int> out;
    for (int i = 0; i < d.k; ++i) {
        bool exceptional = true;
        Cell ei(d.k, 0);
        ei[i] = 1;
        for (const auto& c : cells)
            if (c[i] != 0 && c != ei) {
                exceptional = false;
                break;
            }
        if (exceptional) out.push_back(i);
    }
    return out;
}

namespace {

struct DiagramBasis {
    std::vector<Cell> nonCorner;  // sorted by cellBefore; nonCorner[0] = 0
    std::map<Cell, size_t, CellBefore> indexOf;
    size_t dim;  // |nonCorner| + 1, index dim-1 is x^corn
};

DiagramBasis diagramBasis(const YoungDiagram& d, size_t budget) {
    DiagramBasis b;
    for (const auto& cell : diagramCells(d, budget))
        if (!isCorner(d, cell)) b.nonCorner.push_back(cell);
    for (size_t i = 0; i < b.nonCorner.size(); ++i) b.indexOf.emplace(b.nonCorner[i], i);
    b.dim = b.nonCorner.size() + 1;
    return b;
}

void requireBuildable(const YoungDiagram& d, const BData& b, size_t budget) {
    std::vector<int> exc = exceptionalCoords(d, budget);
    if (!exc.empty()) {
        std::ostringstream os;
        os << "diagram is exceptional with respect to coordinate";
        for (size_t i = 0; i < exc.size(); ++i) os << (i ? "," : "") << " " << exc[i] + 1;
        os << "; delete the cell e_i and drop that coordinate to normalize";
        throw std::invalid_argument(os.str());
    }
    bool any = false;
    for (const auto& c : d.corners) any = any || b.at(c) != 0;
    if (!any) throw std::invalid_argument("all corner constants vanish");
}

}  // namespace

HPair buildHPair(const YoungDiagram& d, const BData& b, size_t budget) {
    requireBuildable(d, b, budget);
    DiagramBasis basis = diagramBasis(d, budget);
    size_t dim = basis.dim;
    size_t corn = dim - 1;

    FiniteLocalAlgebra a;
    a.dim = dim;
    a.labels.push_back("1");
    for (size_t i = 1; i < basis.nonCorner.size(); ++i)
        a.labels.push_back("x^" + cellStr(basis.nonCorner[i]));
    a.labels.push_back("x^corn");

    a.table.assign(dim, std::vector<VectorQ>(dim, VectorQ(dim, Rational(0))));
    for (size_t i = 0; i < dim; ++i) {
        a.table[0][i][i] = 1;
        a.table[i][0][i] = 1;
    }
    for (size_t i = 1; i < corn; ++i) {
        for (size_t j = i; j < corn; ++j) {
            Cell sum = basis.nonCorner[i];
            for (int t = 0; t < d.k; ++t) sum[t] += basis.nonCorner[j][t];
            VectorQ prod(dim, Rational(0));
            if (auto it = basis.indexOf.find(sum); it != basis.indexOf.end()) {
                prod[it->second] = 1;
            } else if (isCorner(d, sum)) {
                prod[corn] = b.at(sum);
            }
            a.table[i][j] = prod;
            a.table[j][i] = std::move(prod);
        }
    }
    // x^corn annihilates m; products with x^corn stay zero.

    HPair h;
    h.algebra = std::move(a);
    h.hyperplane.ambientDim = dim - 1;
    for (size_t i = 1; i < corn; ++i) {
        VectorQ v(dim - 1, Rational(0));
        v[i - 1] = 1;
        h.hyperplane.basis.push_back(std::move(v));
    }
    h.complementWitness.assign(dim - 1, Rational(0));
    h.complementWitness.back() = 1;
    return h;
}

MatrixQ gorensteinSystem(const YoungDiagram& d, const BData& b, size_t budget) {
    std::vector<Cell> pre = precornerCells(d, budget);
    MatrixQ m(static_cast<size_t>(d.k), pre.size());
    for (int i = 0; i < d.k; ++i)
        for (size_t c = 0; c < pre.size(); ++c) {
            Cell up = pre[c];
            ++up[i];
            if (isCorner(d, up)) m.a[static_cast<size_t>(i)][c] = b.at(up);
        }
    return m;
}

ClosedFormLayers closedFormLayers(const YoungDiagram& d, const BData& b, size_t budget) {
    requireBuildable(d, b, budget);
    DiagramBasis basis = diagramBasis(d, budget);
    size_t n = basis.dim - 1;

    std::vector<std::string> bvars;
    for (size_t i = 1; i <= n; ++i) bvars.push_back("z" + std::to_string(i));
    // variable of the i-th nonzero non-corner cell is z_i; x^corn gets z_n
    auto varOfCell = [&](const Cell& c) -> size_t {
        auto it = basis.indexOf.find(c);
        if (it == basis.indexOf.end() || it->second == 0)
            throw std::logic_error("closedFormLayers: cell has no coordinate");
        return it->second - 1;
    };

    ClosedFormLayers out;
    int deg = 0;
    for (const auto& c : d.corners)
        if (b.at(c) != 0) deg = std::max(deg, cellDegree(c));
    out.d = static_cast<size_t>(deg);

    // monomial z^mu over the degree-1 cells, with an optional extra factor z_nu
    auto monomialFor = [&](const Cell& mu, const Cell* nu) {
        Monomial m{std::vector<int>(n, 0)};
        for (int i = 0; i < d.k; ++i) {
            if (mu[i] == 0) continue;
            Cell ei(d.k, 0);
            ei[i] = 1;
            m.exps[varOfCell(ei)] += mu[i];
        }
        if (nu) m.exps[varOfCell(*nu)] += 1;
        return m;
    };

    out.fd = MultiPoly::zero(bvars);
    Rational sign = (deg % 2 == 1) ? 1 : -1;
    for (const auto& mu : d.corners) {
        if (cellDegree(mu) != deg) continue;
        Rational coeff = sign / Rational(deg) * multinomial(mu) * b.at(mu);
        if (coeff != 0) out.fd.addTerm(monomialFor(mu, nullptr), coeff);
    }

    out.fdm1 = MultiPoly::zero(bvars);
    if (deg == 2) {
        // f_1 = pi(z), the coordinate dual to x^corn
        out.fdm1 = MultiPoly::variable(bvars, n - 1);
        return out;
    }
    Rational sign1 = (deg % 2 == 0) ? 1 : -1;
    for (const auto& mu : d.corners) {
        int dm = cellDegree(mu);
        if (dm == deg - 1) {
            Rational coeff = sign1 / Rational(deg - 1) * multinomial(mu) * b.at(mu);
            if (coeff != 0) out.fdm1.addTerm(monomialFor(mu, nullptr), coeff);
        } else if (dm == deg) {
            Rational bmu = b.at(mu);
            if (bmu == 0) continue;
            // all nu <= mu with |nu| = 2
            for (int i = 0; i < d.k; ++i) {
                for (int j = i; j < d.k; ++j) {
                    Cell nu(d.k, 0);
                    ++nu[i];
                    ++nu[j];
                    if (!cellLeq(nu, mu)) continue;
                    Cell rest = mu;
                    for (int t = 0; t < d.k; ++t) rest[t] -= nu[t];
                    Rational coeff = sign1 * multinomial(rest) * bmu;
                    out.fdm1.addTerm(monomialFor(rest, &nu), coeff);
                }
            }
        }
    }
    return out;
}

std::pair<YoungDiagram, BData> familyRays(const std::vector<int>& lengths,
                                          const std::vector<Rational>& b) {
    if (lengths.empty()) throw std::invalid_argument("rays: need at least one length");
    for (size_t i = 0; i < lengths.size(); ++i) {
        if (lengths[i] < 2)
            throw std::invalid_argument("rays: every length must be at least 2");
        if (i > 0 && lengths[i] > lengths[i - 1])
            throw std::invalid_argument("rays: lengths must be non-increasing");
    }
    if (!b.empty() && b.size() != lengths.size())
        throw std::invalid_argument("rays: constant count does not match ray count");
    int k = static_cast<int>(lengths.size());
    std::vector<Cell> corners;
    BData bd;
    for (int i = 0; i < k; ++i) {
        Cell c(k, 0);
        c[i] = lengths[static_cast<size_t>(i)];
        Rational bi = b.empty() ? Rational(1) : b[static_cast<size_t>(i)];
        if (bi == 0) throw std::invalid_argument("rays: constants must be nonzero");
        bd.values[c] = bi;
        corners.push_back(std::move(c));
    }
    return {makeDiagram(k, std::move(corners)), std::move(bd)};
}

std::pair<YoungDiagram, BData> familyParallelepiped(const std::vector<int>& sides) {
    if (sides.empty()) throw std::invalid_argument("parallelepiped: need at least one side");
    for (int s : sides)
        if (s < 1) throw std::invalid_argument("parallelepiped: sides must be at least 1");
    if (sides.size() == 1 && sides[0] == 1)
        throw std::invalid_argument("parallelepiped: the 1-dimensional side-1 case is a point in P^1");
    Cell corner(sides.begin(), sides.end());
    BData bd;
    bd.values[corner] = 1;
    return {makeDiagram(static_cast<int>(sides.size()), {corner}), std::move(bd)};
}

SimplexFamily familySimplexFromPolynomial(const MultiPoly& g) {
    if (g.isZero()) throw std::invalid_argument("prescribed boundary must be nonzero");
    if (!isHomogeneous(g)) throw std::invalid_argument("prescribed boundary must be homogeneous");
    int deg = g.degree();
    if (deg < 2) throw std::invalid_argument("prescribed boundary must have degree at least 2");
    int k = static_cast<int>(g.varCount());

    Cell lambda0(g.leading().first.exps);
    Rational a0 = g.leading().second;
    Rational c0 = multinomial(lambda0);

    // all exponent vectors of total degree deg
    std::vector<Cell> corners;
    Cell cur(k, 0);
    cur[0] = deg;
    auto rec = [&](auto&& self, int pos, int remaining, Cell& acc) -> void {
        if (pos == k - 1) {
            acc[pos] = remaining;
            corners.push_back(acc);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            acc[pos] = v;
            self(self, pos + 1, remaining - v, acc);
        }
        acc[pos] = 0;
    };
    Cell acc(k, 0);
    rec(rec, 0, deg, acc);

    BData bd;
    for (const auto& mu : corners) {
        Monomial m{std::vector<int>(mu.begin(), mu.end())};
        Rational aMu = g.coeff(m);
        if (aMu == 0) continue;
        bd.values[mu] = aMu * c0 / (multinomial(mu) * a0);
    }
    return SimplexFamily{makeDiagram(k, std::move(corners)), std::move(bd), std::move(lambda0)};
}

HPair familySegment(int n) {
    if (n < 2) throw std::invalid_argument("segment: n must be at least 2");
    BData bd;
    bd.values[Cell{n}] = 1;
    return buildHPair(makeDiagram(1, {Cell{n}}), bd);
}

}  // namespace hpair
