#ifndef HPAIR_GEOMETRY_HPP
#define HPAIR_GEOMETRY_HPP

#include "hpair/equation.hpp"
#include "hpair/poly.hpp"

namespace hpair {

struct GeometryVerdict {
    bool normal = false;
    size_t essentialCount = 0;
    // nonconstant exactly when normal is false: the common factor
    // gcd(sq-free quotient of f_d, f_{d-1})
    MultiPoly witness;
    size_t coneApexDim = 0;  // variable count minus essentialCount
};

// Minimal number of variables of f after a linear change of coordinates,
// computed as the rank of the span of all first partial derivatives.
// f must be nonzero and homogeneous.
size_t essentialVariableCount(const MultiPoly& f);

// Normality of the hypersurface: normal iff the square-free quotient of
// f_d and f_{d-1} are coprime. The verdict also carries the cone data of
// the boundary polynomial f_d.
GeometryVerdict isNormal(const HypersurfaceReport& report);

// Cone structure of {f = 0}: essentialCount e and apex dimension
// (#variables - e); f is a cone iff e < #variables. The normal flag and
// witness are not meaningful here.
GeometryVerdict coneReport(const MultiPoly& f);

}  // namespace hpair

#endif
