#pragma once

// Jones polynomial of a closed braid, twice.
//
// jones_tl: Kauffman bracket via the Temperley-Lieb transfer: the braid is
// scanned once, carrying a vector over planar matchings of the 2l boundary
// points; each generator splits a state into its identity and e_i smoothings.
// kauffman_oracle: the plain 2^c state sum over the whole diagram. Both end
// with the Markov-trace closure and V = (-A^3)^(-writhe) * <D>, then t = A^-4.

#include "lorenz/braid.hpp"
#include "lorenz/laurent.hpp"

namespace lorenz {

// Normalized Jones polynomial in t. Budget guards the Catalan-sized state
// space; callers simplify first or skip Jones when over budget.
LaurentPoly jones_tl(const BraidWord& b, int strand_budget = 12);

// Same value by brute force over all 2^c smoothings.
LaurentPoly kauffman_oracle(const BraidWord& b, int crossing_budget = 18);

}  // namespace lorenz
