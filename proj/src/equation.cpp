#include "hpair/equation.hpp"

#include <map>
#include <stdexcept>

namespace hpair {

HypersurfaceReport hypersurfaceEquation(const HPair& h) {
    ValidationReport check = validateHPair(h);
    if (!check.ok)
        throw std::invalid_argument("hypersurfaceEquation: invalid H-pair: " +
                                    (check.issues.empty() ? std::string("?") : check.issues.front()));

    size_t dim = h.algebra.dim;
    size_t n = dim - 1;
    std::vector<std::string> vars;
    for (size_t i = 0; i <= n; ++i) vars.push_back("z" + std::to_string(i));

    size_t d = hpairDegree(h);
    VectorQ pi = dualFunctional(h);

    // By the multinomial theorem, z^k = sum over |mu| = k of
    // multinomial(mu) z^mu e^mu with e^mu = e_1^{mu_1} ... e_n^{mu_n}.
    // Enumerate the monomials mu with e^mu != 0 once each: every multiset
    // of generators is grown from its largest index, carrying the sparse
    // coordinates of e^mu along. Nilpotency kills the walk by degree d.
    using SparseVec = std::vector<std::pair<size_t, Rational>>;
    std::vector<std::vector<SparseVec>> byGenerator(dim, std::vector<SparseVec>(n));
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 1; j <= n; ++j) {
            const VectorQ& t = h.algebra.table[i][j];
            for (size_t m = 0; m < dim; ++m)
                if (t[m] != 0) byGenerator[i][j - 1].emplace_back(m, t[m]);
        }

    struct State {
        Monomial mu;     // exponents of z_1..z_n; slot 0 reserved for z0
        size_t maxIdx;   // largest generator index used so far
        SparseVec v;     // coordinates of e^mu in the algebra basis
    };
    std::vector<State> frontier;
    for (size_t i = 1; i <= n; ++i) {
        State s;
        s.mu = Monomial{std::vector<int>(n + 1, 0)};
        s.mu.exps[i] = 1;
        s.maxIdx = i;
        s.v = {{i, Rational(1)}};
        frontier.push_back(std::move(s));
    }

    MultiPoly f(vars);
    std::map<size_t, Rational> acc;
    for (size_t k = 1; k <= d; ++k) {
        Rational layerSign = Rational((k % 2 == 1) ? 1 : -1, static_cast<unsigned>(k));
        for (const State& s : frontier) {
            Rational val = 0;
            for (const auto& [idx, c] : s.v)
                if (idx >= 1) val += pi[idx - 1] * c;
            if (val == 0) continue;
            Monomial m = s.mu;
            m.exps[0] = static_cast<int>(d - k);
            f.addTerm(m, layerSign * multinomial(s.mu.exps) * val);
        }
        if (k == d) break;
        std::vector<State> next;
        for (const State& s : frontier) {
            for (size_t j = s.maxIdx; j <= n; ++j) {
                acc.clear();
                for (const auto& [i, c] : s.v)
                    for (const auto& [m, t] : byGenerator[i][j - 1]) acc[m] += c * t;
                SparseVec v;
                for (auto& [m, c] : acc)
                    if (c != 0) v.emplace_back(m, std::move(c));
                if (v.empty()) continue;
                State ns;
                ns.mu = s.mu;
                ++ns.mu.exps[j];
                ns.maxIdx = j;
                ns.v = std::move(v);
                next.push_back(std::move(ns));
            }
        }
        frontier = std::move(next);
    }

    HypersurfaceReport rep;
    rep.varNames = vars;
    rep.d = d;
    rep.f = f;

    // split off the z0 powers; layers live in the boundary variables z1..zn
    std::vector<std::string> bvars(vars.begin() + 1, vars.end());
    rep.layers.assign(d, MultiPoly(bvars));
    for (const auto& [m, c] : f.terms()) {
        size_t k = d - static_cast<size_t>(m.exps[0]);
        Monomial bm{std::vector<int>(m.exps.begin() + 1, m.exps.end())};
        rep.layers[k - 1].addTerm(bm, c);
    }
    return rep;
}

}  // namespace hpair
