#ifndef HPAIR_ALGEBRA_HPP
#define HPAIR_ALGEBRA_HPP

#include <string>
#include <vector>

#include "hpair/linalg.hpp"

namespace hpair {

// Finite-dimensional commutative local algebra given by structure
// constants over a distinguished basis: basis[0] is the unit, the
// remaining basis vectors span the maximal ideal m.
struct FiniteLocalAlgebra {
    size_t dim = 0;
    std::vector<std::string> labels;
    // table[i][j] = coordinates of e_i * e_j, a vector of length dim.
    std::vector<std::vector<VectorQ>> table;

    size_t maxIdealDim() const { return dim - 1; }
    VectorQ multiply(const VectorQ& u, const VectorQ& v) const;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
    size_t nilpotencyIndex = 0;  // least N with m^N = 0

    void fail(std::string msg) {
        ok = false;
        issues.push_back(std::move(msg));
    }
};

// Checks unit, commutativity, associativity on all basis triples, the
// ideal property of m and its nilpotency.
ValidationReport validateAlgebra(const FiniteLocalAlgebra& a);

// Bases of m, m^2, ... down to (and including) the zero power, in
// m-coordinates (ambient dimension dim-1).
std::vector<Subspace> powerChain(const FiniteLocalAlgebra& a);

// Soc A = {x in A : x m = 0}, in A-coordinates.
Subspace socle(const FiniteLocalAlgebra& a);

bool isGorenstein(const FiniteLocalAlgebra& a);

// An algebra with a marked generating hyperplane U of m and a
// complement witness w, so that m = U (+) <w>. U and w are in
// m-coordinates (over basis e_1..e_n).
struct HPair {
    FiniteLocalAlgebra algebra;
    Subspace hyperplane;   // U, ambientDim = dim-1
    VectorQ complementWitness;  // w, length dim-1
};

ValidationReport validateHPair(const HPair& h);

// The linear functional pi on m with pi(U) = 0 and pi(w) = 1,
// as the vector of values pi(e_1), ..., pi(e_n).
VectorQ dualFunctional(const HPair& h);

// The greatest d with m^d not contained in U; 2 <= d <= n for valid pairs.
size_t hpairDegree(const HPair& h);

// J = {a in A : a*A subseteq U}, the maximal ideal of A contained in U.
// Returned in A-coordinates.
Subspace reductionIdeal(const HPair& h);

// H-pair on A/J for an ideal J contained in U. The quotient basis is a
// greedy complement of J built from surviving original basis vectors.
HPair quotientHPair(const HPair& h, const Subspace& j);

// m-coordinates -> A-coordinates (prepends a zero unit coordinate).
Subspace liftToAlgebra(const Subspace& s, size_t dim);
VectorQ liftToAlgebra(const VectorQ& v);

}  // namespace hpair

#endif
