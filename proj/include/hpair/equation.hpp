#ifndef HPAIR_EQUATION_HPP
#define HPAIR_EQUATION_HPP

#include "hpair/algebra.hpp"
#include "hpair/poly.hpp"

namespace hpair {

// The hypersurface equation of an H-pair and its homogeneous layers:
// f = sum_{k=1..d} z0^{d-k} f_k with f_k of degree k in z1..zn.
struct HypersurfaceReport {
    std::vector<std::string> varNames;  // z0..zn, z_i dual to basis e_i
    size_t d = 0;
    MultiPoly f;                     // homogeneous of degree d, n+1 variables
    std::vector<MultiPoly> layers;   // f_1..f_d, each over variables z1..zn

    const MultiPoly& layer(size_t k) const { return layers.at(k - 1); }
    // f_d, the equation of the boundary X_0 in {z0 = 0}.
    const MultiPoly& boundary() const { return layers.back(); }
};

// Expands z0^d pi(ln(1 + z/z0)) inside the nilpotent algebra, with
// z = sum Z_i e_i symbolic. The H-pair must be valid.
HypersurfaceReport hypersurfaceEquation(const HPair& h);

}  // namespace hpair

#endif
