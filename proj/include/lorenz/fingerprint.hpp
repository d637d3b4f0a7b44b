#pragma once

// The invariant bundle used as knot-type evidence. A fingerprint never proves
// isotopy; matching goes through (alexander, determinant, signature) with
// Jones as confirmation when both sides could afford it.

#include <optional>
#include <string>

#include "lorenz/invariants.hpp"
#include "lorenz/words.hpp"

namespace lorenz {

struct Fingerprint {
    LaurentPoly alexander;  // normalized
    Int determinant = 1;    // |Delta(-1)|, odd
    int signature = 0;      // even
    long exponent_sum = 0;  // writhe of the built (unsimplified) orbit braid
    std::optional<LaurentPoly> jones;  // normalized, in t
    bool jones_computed = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;

    bool trivial() const { return alexander.is_one(); }
};

// Map keys over the cheap invariants; Jones is deliberately excluded.
std::string alex_key(const LaurentPoly& alexander);
std::string alex_sig_key(const LaurentPoly& alexander, int signature);
inline std::string alex_sig_key(const Fingerprint& f) {
    return alex_sig_key(f.alexander, f.signature);
}

// Full pipeline: build, record writhe, simplify, compute invariants; Jones
// skipped (jones_computed = false) when the simplified braid exceeds the
// strand budget.
Fingerprint fingerprint(const OrbitWord& w, const TemplateSpec& spec,
                        int jones_strand_budget = 12);

// Invariants of a connected sum from the factors: Alexander and Jones
// multiply, signature and writhe add, determinant multiplies.
Fingerprint product_fingerprint(const Fingerprint& a, const Fingerprint& b);

}  // namespace lorenz
