#pragma once

// Exact determinants of Laurent-polynomial matrices.
//
// det_poly_matrix is the production path: evaluation/interpolation modulo a
// set of 61-bit primes, recombined by CRT. It is exact, not heuristic: the
// number of evaluation points comes from a degree bound (sum over rows of the
// max entry degree) and the prime count from a certified coefficient bound
// (product over rows of entry L1 norms bounds every coefficient of the
// determinant), so the reconstruction is the true integer result. Everything
// stays in integer arithmetic.
//
// det_poly_matrix_bareiss is the direct fraction-free elimination over Z[t],
// quadratically slower; kept as an independent cross-check of the engine.

#include <vector>

#include "lorenz/laurent.hpp"

namespace lorenz {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly det_poly_matrix(const PolyMatrix& m);
LaurentPoly det_poly_matrix_bareiss(const PolyMatrix& m);

}  // namespace lorenz
