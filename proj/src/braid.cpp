#include "lorenz/braid.hpp"

#include <algorithm>
#include <numeric>

namespace lorenz {

BraidWord::BraidWord(int strands) : strands_(strands) {
    if (strands < 1) throw InvalidInput("braid needs at least one strand");
}

void BraidWord::push(int index, int sign) {
    if (index < 1 || index >= strands_)
        throw InvalidInput("generator index " + std::to_string(index) +
                           " out of range for " + std::to_string(strands_) + " strands");
    if (sign != 1 && sign != -1) throw InvalidInput("crossing sign must be +1 or -1");
    word_.push_back({index, sign});
}

long BraidWord::exponent_sum() const {
    long s = 0;
    for (const auto& c : word_) s += c.sign;
    return s;
}

bool BraidWord::all_signs(int sign) const {
    return std::all_of(word_.begin(), word_.end(),
                       [&](const Crossing& c) { return c.sign == sign; });
}

std::vector<int> BraidWord::permutation() const {
    std::vector<int> occ(strands_);  // occ[p] = strand currently at position p
    std::iota(occ.begin(), occ.end(), 0);
    for (const auto& c : word_) std::swap(occ[c.index - 1], occ[c.index]);
    std::vector<int> perm(strands_);
    for (int p = 0; p < strands_; ++p) perm[occ[p]] = p;
    return perm;
}

int BraidWord::closure_components() const {
    std::vector<int> perm = permutation();
    std::vector<bool> seen(strands_, false);
    int cycles = 0;
    for (int i = 0; i < strands_; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return cycles;
}

std::string BraidWord::str() const {
    // signed generator sequence: "1 2 -1" = s1 s2 s1^-1
    std::string out;
    for (const auto& c : word_) {
        if (!out.empty()) out += ' ';
        out += std::to_string(c.sign * c.index);
    }
    return out;
}

BraidWord half_twist_block(int k, int count) {
    if (k < 1) throw InvalidInput("half-twist block needs at least one strand");
    BraidWord b(k);
    append_half_twist_block(b, 0, k, count);
    return b;
}

std::vector<int> lorenz_permutation(const OrbitWord& w, const TemplateSpec& spec) {
    int l = w.length();
    std::vector<std::string> rot(l);
    for (int j = 0; j < l; ++j) rot[j] = rotate(w.letters(), j);

    std::vector<int> order(l);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        auto c = twisted_compare(rot[a], rot[b], spec);
        if (c == std::strong_ordering::equal && a != b)
            throw InternalInvariantViolation("equal itineraries from distinct rotations");
        return c == std::strong_ordering::less;
    });
    std::vector<int> rank(l);
    for (int pos = 0; pos < l; ++pos) rank[order[pos]] = pos;

    std::vector<int> pi(l);
    for (int j = 0; j < l; ++j) pi[rank[j]] = rank[(j + 1) % l];

    // Itineraries starting with x always sort below those starting with y,
    // so ranks 0..p-1 must be exactly the x positions of the word.
    int p = w.count_x();
    for (int j = 0; j < l; ++j)
        if ((rank[j] < p) != (w.letters()[j] == 'x'))
            throw InternalInvariantViolation("branch bundles not contiguous");
    return pi;
}

void append_half_twist_block(BraidWord& b, int lo, int k, int count) {
    if (k <= 1 || count == 0) return;
    int sign = count > 0 ? +1 : -1;
    // One positive half twist, as generator offsets within the block.
    std::vector<int> half;
    for (int i = 1; i < k; ++i)
        for (int j = i; j >= 1; --j) half.push_back(j);
    if (sign < 0) std::reverse(half.begin(), half.end());  // inverse word
    for (int copy = 0; copy < std::abs(count); ++copy)
        for (int j : half) b.push(lo + j, sign);
}

BraidWord build_braid(const OrbitWord& w, const TemplateSpec& spec) {
    int l = w.length();
    int p = w.count_x();
    std::vector<int> pi = lorenz_permutation(w, spec);

    // tau: the net reversal the twist blocks apply to each bundle.
    std::vector<int> tau(l);
    for (int i = 0; i < l; ++i) tau[i] = i;
    if (spec.m % 2 != 0)
        for (int i = 0; i < p; ++i) tau[i] = p - 1 - i;
    if (spec.n % 2 != 0)
        for (int i = p; i < l; ++i) tau[i] = p + (l - 1 - i);

    // Residual permutation realized by the crossing layer.
    std::vector<int> rho(l);
    for (int i = 0; i < l; ++i) rho[i] = pi[tau[i]];
    for (int i = 1; i < p; ++i)
        if (rho[i] < rho[i - 1])
            throw InternalInvariantViolation("x-bundle not increasing after twists");
    for (int i = p + 1; i < l; ++i)
        if (rho[i] < rho[i - 1])
            throw InternalInvariantViolation("y-bundle not increasing after twists");

    BraidWord b(l);
    append_half_twist_block(b, 0, p, spec.m);
    append_half_twist_block(b, p, l - p, spec.n);

    // Positive permutation layer: bubble-sort rho to the identity, one
    // positive crossing per inversion, scan order fixed.
    std::vector<int> v = rho;
    bool swapped = true;
    while (swapped) {
        swapped = false;
        for (int i = 0; i + 1 < l; ++i) {
            if (v[i] > v[i + 1]) {
                b.push(i + 1, +1);
                std::swap(v[i], v[i + 1]);
                swapped = true;
            }
        }
    }

    BraidWord out = spec.mirrored ? mirror_braid(b) : b;
    if (out.permutation() != pi)
        throw InternalInvariantViolation("braid permutation differs from return map");
    if (out.closure_components() != 1)
        throw InternalInvariantViolation("orbit closure is not a knot");
    return out;
}

BraidWord mirror_braid(const BraidWord& b) {
    BraidWord out(b.strands());
    for (const auto& c : b.crossings()) out.push(c.index, -c.sign);
    return out;
}

BraidWord simplify_braid(const BraidWord& b) {
    int strands = b.strands();
    std::vector<Crossing> w = b.crossings();

    auto count_index = [&](int idx) {
        return std::count_if(w.begin(), w.end(),
                             [&](const Crossing& c) { return c.index == idx; });
    };

    bool changed = true;
    while (changed) {
        changed = false;

        // Free reduction of cyclically adjacent inverse pairs.
        bool reduced = true;
        while (reduced && w.size() >= 2) {
            reduced = false;
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::size_t j = (i + 1) % w.size();
                if (i == j) break;
                if (w[i].index == w[j].index && w[i].sign == -w[j].sign) {
                    if (i < j) {
                        w.erase(w.begin() + j);
                        w.erase(w.begin() + i);
                    } else {  // wrap pair: last and first
                        w.erase(w.begin() + i);
                        w.erase(w.begin() + j);
                    }
                    reduced = true;
                    changed = true;
                    break;
                }
            }
        }

        if (strands >= 2) {
            long right = count_index(strands - 1);
            if (right == 0) {  // boundary strand crosses nothing
                --strands;
                changed = true;
                continue;
            }
            if (right == 1) {  // Markov destabilization at the right edge
                w.erase(std::find_if(w.begin(), w.end(),
                                     [&](const Crossing& c) { return c.index == strands - 1; }));
                --strands;
                changed = true;
                continue;
            }
        }
        if (strands >= 2) {
            long left = count_index(1);
            if (left == 0 || left == 1) {
                if (left == 1)
                    w.erase(std::find_if(w.begin(), w.end(),
                                         [&](const Crossing& c) { return c.index == 1; }));
                for (auto& c : w) --c.index;
                --strands;
                changed = true;
            }
        }
    }

    BraidWord out(strands);
    for (const auto& c : w) out.push(c.index, c.sign);
    // Unused-strand removal can only discard split circles, which a knot
    // closure never has; verify the knot case stayed a knot.
    if (b.closure_components() == 1 && out.closure_components() != 1)
        throw InternalInvariantViolation("simplification changed component count");
    return out;
}

}  // namespace lorenz
