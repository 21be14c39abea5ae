#pragma once

#include "schurlab/poly.hpp"

namespace schurlab {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Laplace expansion with memoized minors (fine below 6x6).
MultiPoly det_cofactor(const PolyMatrix& m);

// Fraction-free Bareiss elimination; every division is exact by construction.
MultiPoly det_bareiss(const PolyMatrix& m);

// Dispatches on size: cofactor below 6x6, Bareiss from there up.
MultiPoly det_exact(const PolyMatrix& m);

// Gaussian elimination over exact rationals.
Rational det_rational(RationalMatrix m);

}  // namespace schurlab
