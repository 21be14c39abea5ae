#pragma once

#include "schurlab/partition.hpp"
#include "schurlab/poly.hpp"

namespace schurlab {

// Sum of all degree-r monomials in the given variables (complete homogeneous).
MultiPoly complete_h(const ContextPtr& ctx, const std::vector<int>& vars, int r);
// Sum of squarefree degree-r monomials (elementary).
MultiPoly elementary_e(const ContextPtr& ctx, const std::vector<int>& vars, int r);

// Context with series variables x1..xn and no parameters.
ContextPtr x_context(int n);

// Schur polynomial in n variables via the h-determinant, memoized.
// Zero when the partition has more than n rows.
MultiPoly schur(const Partition& lambda, int n);

// Independent route: sum over semistandard tableaux with entries <= n.
MultiPoly schur_tableaux(const Partition& lambda, int n);

// Exact evaluation via the bialternant ratio; needs distinct coordinates.
Rational schur_eval(const Partition& lambda, const std::vector<Rational>& xs);

// Shapes in the expansion of schur(mu) * h_k in n variables (multiplicity
// free): mu plus a horizontal k-strip, at most n rows.
std::vector<Partition> pieri_expand(const Partition& mu, int k, int n);

}  // namespace schurlab
