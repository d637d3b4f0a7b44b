#pragma once

// Exact invariants of closed braids.
//
// Alexander comes in two independent paths that must agree: the reduced Burau
// determinant and the Seifert-matrix determinant det(V - tV^T). Signature is
// the signature of V + V^T, computed exactly over the integers. Chirality
// conventions are pinned by signature(closure of s1^3) = -2.

#include <vector>

#include "lorenz/braid.hpp"
#include "lorenz/laurent.hpp"

namespace lorenz {

using IntMatrix = std::vector<std::vector<Int>>;

// Delta(t) from det(burau(b) - I) * (1 - t)/(1 - t^l), normalized.
LaurentPoly alexander_burau(const BraidWord& b);

// Delta(t) as normalized det(V - tV^T); the independent cross-check path.
LaurentPoly alexander_seifert(const BraidWord& b);

// Seifert matrix of the closed-braid Seifert surface (l discs, one band per
// crossing, one homology loop per consecutive same-column crossing pair).
// Square of size c - l + 1 = 2g for a knot closure.
IntMatrix seifert_matrix(const BraidWord& b);

// Signature of V + V^T.
int signature(const BraidWord& b);

// Exact signature of a symmetric integer matrix: congruence elimination with
// Bareiss-style exact divisions; rank deficiency and zero diagonals handled.
int signature_of_symmetric(IntMatrix m);

// |Delta(-1)|; odd for every knot.
Int determinant_invariant(const LaurentPoly& alexander);

// Seifert genus (c - l + 1)/2, minimal for single-sign braid closures.
long genus_bennequin(const BraidWord& b);

// Center exponents, fix sign so Delta(1) = 1; rejects anything a knot cannot
// produce (zero, asymmetric, Delta(1) != +-1).
LaurentPoly normalize_alexander(LaurentPoly p);

}  // namespace lorenz
