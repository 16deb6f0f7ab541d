#include "hpair/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "hpair/linalg.hpp"

namespace hpair {

size_t essentialVariableCount(const MultiPoly& f) {
    if (f.isZero()) throw std::invalid_argument("essentialVariableCount: zero polynomial");
    if (!isHomogeneous(f)) throw std::invalid_argument("essentialVariableCount: not homogeneous");

    std::vector<MultiPoly> partials;
    std::map<Monomial, size_t, MonomialGreater> columnOf;
    for (size_t v = 0; v < f.varCount(); ++v) {
        MultiPoly p = derivative(f, v);
        for (const auto& [m, c] : p.terms())
            columnOf.emplace(m, columnOf.size());
        partials.push_back(std::move(p));
    }
    if (columnOf.size() <= 4 * partials.size()) {
        MatrixQ m(partials.size(), columnOf.size());
        for (size_t r = 0; r < partials.size(); ++r)
            for (const auto& [mono, c] : partials[r].terms()) m.a[r][columnOf[mono]] = c;
        return rank(std::move(m));
    }
    // wide matrices: rank(M) = rank(M M^T) over the rationals (the kernels
    // agree since x M M^T x^T is a sum of squares); rows stay sparse
    std::vector<std::vector<std::pair<size_t, Rational>>> rows(partials.size());
    for (size_t r = 0; r < partials.size(); ++r)
        for (const auto& [mono, c] : partials[r].terms())
            rows[r].emplace_back(columnOf[mono], c);
    for (auto& row : rows) std::sort(row.begin(), row.end(),
                                     [](const auto& a, const auto& b) { return a.first < b.first; });
    MatrixQ g(rows.size(), rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = i; j < rows.size(); ++j) {
            Rational s = 0;
            for (size_t pi = 0, pj = 0; pi < rows[i].size() && pj < rows[j].size();) {
                if (rows[i][pi].first < rows[j][pj].first) ++pi;
                else if (rows[i][pi].first > rows[j][pj].first) ++pj;
                else { s += rows[i][pi].second * rows[j][pj].second; ++pi; ++pj; }
            }
            g.a[i][j] = s;
            g.a[j][i] = std::move(s);
        }
    return rank(std::move(g));
}

GeometryVerdict isNormal(const HypersurfaceReport& report) {
    if (report.d < 2)
        throw std::invalid_argument("isNormal: degree below 2 cannot arise from a valid H-pair");
    const MultiPoly& fd = report.boundary();
    const MultiPoly& fdm1 = report.layer(report.d - 1);

    GeometryVerdict v;
    v.essentialCount = essentialVariableCount(fd);
    v.coneApexDim = fd.varCount() - v.essentialCount;

    MultiPoly tilde = squarefreeQuotient(fd);
    if (tilde.isConstant()) {
        // f_d square-free
        v.normal = true;
        v.witness = MultiPoly::constant(fd.vars(), 1);
        return v;
    }
    if (fdm1.isZero()) {
        // the zero polynomial is divisible by everything
        v.normal = false;
        v.witness = tilde;
        return v;
    }
    MultiPoly g = gcd(tilde, fdm1);
    v.normal = g.isConstant();
    v.witness = g;
    return v;
}

GeometryVerdict coneReport(const MultiPoly& f) {
    GeometryVerdict v;
    v.essentialCount = essentialVariableCount(f);
    v.coneApexDim = f.varCount() - v.essentialCount;
    v.witness = MultiPoly::zero(f.vars());
    return v;
}

}  // namespace hpair
