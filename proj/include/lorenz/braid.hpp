#pragma once

// Braid words and the orbit -> braid construction.
//
// A periodic orbit of length l meets the branch line in l points; following
// the flow once around induces the first-return permutation of those points,
// ordered by the twisted kneading order. The braid of the orbit on L(m,n) is
// read off a projection of the template: the signed half-twist blocks of the
// two branches, followed by the strand permutation layer in which strands of
// the x-branch pass over strands of the y-branch, all crossings positive.
// Left-handed half-twists are positive; the mirror template flips every sign.

#include <string>
#include <vector>

#include "lorenz/words.hpp"

namespace lorenz {

struct Crossing {
    int index;  // generator sigma_index, 1 <= index <= strands-1
    int sign;   // +1 or -1

    friend bool operator==(const Crossing&, const Crossing&) = default;
};

class BraidWord {
  public:
    explicit BraidWord(int strands);

    void push(int index, int sign);

    int strands() const { return strands_; }
    const std::vector<Crossing>& crossings() const { return word_; }
    int size() const { return static_cast<int>(word_.size()); }

    long exponent_sum() const;  // the writhe of the closed-braid diagram
    bool all_signs(int sign) const;  // every crossing has the given sign

    // perm[i] = bottom position of the strand entering at top position i (0-based).
    std::vector<int> permutation() const;
    int closure_components() const;

    std::string str() const;  // signed generator sequence, e.g. "1 2 -1"

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

  private:
    int strands_;
    std::vector<Crossing> word_;
};

// First-return permutation of the orbit's branch-line points, 0-based:
// pi[i] is the sorted position of the successor of the i-th smallest point.
// Always a single l-cycle.
std::vector<int> lorenz_permutation(const OrbitWord& w, const TemplateSpec& spec);

// The orbit's braid: twist blocks, then the positive permutation layer
// (bubble-sort emission, each strand pair crossing at most once), with a
// global sign flip when spec.mirrored. Postconditions checked: the braid's
// permutation equals lorenz_permutation and the closure is a knot.
BraidWord build_braid(const OrbitWord& w, const TemplateSpec& spec);

// All crossing signs flipped; closure is the mirror knot.
BraidWord mirror_braid(const BraidWord& b);

// Reduces to a fixed point of three closure-preserving moves: free reduction
// of cyclically adjacent inverse pairs, removal of boundary strands that
// cross nothing, and Markov destabilization of a boundary strand with exactly
// one crossing. No general move search; the result is deterministic.
BraidWord simplify_braid(const BraidWord& b);

// Standalone half-twist block on k strands.
BraidWord half_twist_block(int k, int count);

// Appends |count| half-twists of the k strands at 0-based positions
// [lo, lo+k), each crossing signed like count. One positive half twist is
// (s1)(s2 s1)...(s_{k-1} ... s1) shifted by lo; negative blocks are the exact
// inverse word. k(k-1)/2 crossings per half twist; reverses the block iff
// count is odd.
void append_half_twist_block(BraidWord& b, int lo, int k, int count);

}  // namespace lorenz
