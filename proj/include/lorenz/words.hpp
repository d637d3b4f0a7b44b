#pragma once

// Symbolic dynamics on the branched surface L(m,n): orbit words over {x,y},
// the twisted kneading order on itineraries, and orbit enumeration.
//
// L(m,n) is the Lorenz template with m extra signed half-twists inserted in
// the x-branch and n in the y-branch; left-handed half-twists count positive.
// mirrored = true denotes the mirror image of the whole template, which flips
// every crossing sign downstream but not the order of strands on the branch
// line, so it plays no role in this header beyond being carried around.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lorenz/errors.hpp"

namespace lorenz {

struct TemplateSpec {
    int m = 0;
    int n = 0;
    bool mirrored = false;

    friend bool operator==(const TemplateSpec&, const TemplateSpec&) = default;

    // "0,-2" or "~0,-2" for the mirror.
    static TemplateSpec parse(std::string_view text);
    std::string str() const;

    // Sign of the order reversal a letter causes: a pass through a branch
    // with an odd number of half-twists flips the branch-line orientation.
    int letter_sign(char c) const {
        int twists = (c == 'x') ? m : n;
        return (twists % 2 == 0) ? +1 : -1;
    }

    TemplateSpec mirror() const { return {m, n, !mirrored}; }
    // L(m,n) and L(n,m) carry the same knots with x and y exchanged.
    TemplateSpec swapped() const { return {n, m, mirrored}; }
};

// A primitive periodic orbit, stored as the lexicographically least rotation
// of its symbol word. That representative is unique, so equality of orbits
// is equality of the stored strings.
class OrbitWord {
  public:
    // Canonicalizes; throws EmptyWord, NonPrimitive, InvalidInput (bad letter).
    explicit OrbitWord(std::string_view letters);

    const std::string& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    int count_x() const { return x_; }
    int count_y() const { return y_; }

    OrbitWord swapped_xy() const;  // orbit of the same word with x <-> y

    friend bool operator==(const OrbitWord&, const OrbitWord&) = default;
    friend auto operator<=>(const OrbitWord& a, const OrbitWord& b) {
        if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
        return a.letters_ <=> b.letters_;
    }

  private:
    std::string letters_;
    int x_ = 0, y_ = 0;
};

// Canonicalizing constructor as a free function.
inline OrbitWord canonical_word(std::string_view letters) { return OrbitWord(letters); }

inline OrbitWord swap_xy(const OrbitWord& w) { return w.swapped_xy(); }

// All primitive orbits with 1 <= length <= max_len, sorted by (length, lex).
std::vector<OrbitWord> enumerate_orbits(int max_len);

// Compares the infinite itineraries s^inf and t^inf in the twisted kneading
// order of the template: plain lexicographic x < y, except that the
// comparison at position k is reversed when the prefix before k contains an
// odd number of letters from odd-twist branches. Distinct rotations of
// distinct primitive words always resolve within |s| + |t| letters.
std::strong_ordering twisted_compare(std::string_view s, std::string_view t,
                                     const TemplateSpec& spec);

// Rotation of w starting at position k (helper for building itineraries).
std::string rotate(std::string_view w, int k);

}  // namespace lorenz
