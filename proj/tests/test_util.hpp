#ifndef TEST_UTIL_HPP
#define TEST_UTIL_HPP

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hpair/poly.hpp"
#include "hpair/young.hpp"

namespace testutil {

inline std::vector<std::string> zVars(int first, int last) {
    std::vector<std::string> v;
    for (int i = first; i <= last; ++i) v.push_back("z" + std::to_string(i));
    return v;
}

inline hpair::Rational randomRational(std::mt19937& rng, int bound = 5) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, 4);
    return hpair::Rational(num(rng), den(rng));
}

inline hpair::MultiPoly randomPoly(std::mt19937& rng, const std::vector<std::string>& vars,
                                   int maxDeg, int maxTerms) {
    hpair::MultiPoly f(vars);
    std::uniform_int_distribution<int> terms(0, maxTerms);
    std::uniform_int_distribution<int> expo(0, maxDeg);
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
        hpair::Monomial m{std::vector<int>(vars.size(), 0)};
        int left = maxDeg;
        for (size_t v = 0; v < vars.size(); ++v) {
            int e = expo(rng) % (left + 1);
            m.exps[v] = e;
            left -= e;
        }
        f.addTerm(m, randomRational(rng));
    }
    return f;
}

inline hpair::MultiPoly randomHomogeneous(std::mt19937& rng,
                                          const std::vector<std::string>& vars, int deg,
                                          int maxTerms) {
    hpair::MultiPoly f(vars);
    std::uniform_int_distribution<int> terms(1, maxTerms);
    int t = terms(rng);
    for (int i = 0; i < t || f.isZero(); ++i) {
        hpair::Monomial m{std::vector<int>(vars.size(), 0)};
        int left = deg;
        for (size_t v = 0; v + 1 < vars.size(); ++v) {
            std::uniform_int_distribution<int> expo(0, left);
            int e = expo(rng);
            m.exps[v] = e;
            left -= e;
        }
        m.exps[vars.size() - 1] = left;
        hpair::Rational c = randomRational(rng);
        if (c == 0) c = 1;
        f.addTerm(m, c);
        if (i > 4 * maxTerms) break;
    }
    return f;
}

// All downward-closed subsets of Z^k_{>=0} containing 0 with at most
// maxCells cells, as sorted cell lists.
inline std::vector<std::vector<hpair::Cell>> orderIdeals(int k, size_t maxCells) {
    using hpair::Cell;
    std::set<std::vector<Cell>> seen;
    std::vector<std::vector<Cell>> queue;
    std::vector<Cell> start{Cell(k, 0)};
    seen.insert(start);
    queue.push_back(start);
    auto contains = [](const std::vector<Cell>& ideal, const Cell& c) {
        for (int e : c)
            if (e < 0) return true;  // below the orthant counts as present
        for (const auto& x : ideal)
            if (x == c) return true;
        return false;
    };
    for (size_t q = 0; q < queue.size(); ++q) {
        std::vector<Cell> cur = queue[q];
        if (cur.size() == maxCells) continue;
        // addable cells: outside, all lower neighbors inside
        std::set<Cell> candidates;
        for (const auto& c : cur)
            for (int i = 0; i < k; ++i) {
                Cell up = c;
                ++up[i];
                if (!contains(cur, up)) candidates.insert(up);
            }
        for (const auto& cand : candidates) {
            bool addable = true;
            for (int i = 0; i < k && addable; ++i) {
                Cell down = cand;
                --down[i];
                addable = contains(cur, down);
            }
            if (!addable) continue;
            std::vector<Cell> next = cur;
            next.insert(std::lower_bound(next.begin(), next.end(), cand), cand);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return queue;
}

// Maximal cells of a downward-closed cell list.
inline std::vector<hpair::Cell> cornersOf(const std::vector<hpair::Cell>& ideal) {
    using hpair::Cell;
    auto leq = [](const Cell& a, const Cell& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::vector<Cell> out;
    for (const auto& c : ideal) {
        bool maximal = true;
        for (const auto& d : ideal)
            if (c != d && leq(c, d)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(c);
    }
    return out;
}

// Uses every coordinate (so makeDiagram accepts the corner set).
inline bool coversAllCoords(const std::vector<hpair::Cell>& ideal, int k) {
    for (int i = 0; i < k; ++i) {
        bool used = false;
        for (const auto& c : ideal) used = used || c[i] > 0;
        if (!used) return false;
    }
    return true;
}

}  // namespace testutil

#endif
