#include "lorenz/jones.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

namespace lorenz {

namespace {

// (-A^3)^(-w) * bracket, then A^e -> t^(-e/4).
LaurentPoly jones_from_bracket(const LaurentPoly& bracket, long writhe) {
    LaurentPoly f =
        bracket * LaurentPoly::monomial(-3 * writhe, (writhe % 2 == 0) ? 1 : -1);
    LaurentPoly out;
    for (const auto& [e, c] : f.terms()) {
        if (e % 4 != 0)
            throw InternalInvariantViolation("bracket exponent not divisible by 4");
        out += LaurentPoly::monomial(-e / 4, c);
    }
    if (out.eval_int(1) != 1)
        throw InternalInvariantViolation("Jones at t=1 is not 1");
    return out;
}

LaurentPoly delta_power(int k) {  // (-A^2 - A^-2)^k
    LaurentPoly d = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    LaurentPoly out = LaurentPoly::one();
    for (int i = 0; i < k; ++i) out *= d;
    return out;
}

}  // namespace

LaurentPoly jones_tl(const BraidWord& b, int strand_budget) {
    if (b.closure_components() != 1) throw NotAKnot(b.closure_components());
    int l = b.strands();
    if (l > strand_budget) throw StrandBudgetExceeded(l, strand_budget);

    // State key: matching of points 0..l-1 (top) and l..2l-1 (bottom), stored
    // as the partner array. Start from the identity matching.
    std::string init(2 * l, '\0');
    for (int i = 0; i < l; ++i) {
        init[i] = static_cast<char>(l + i);
        init[l + i] = static_cast<char>(i);
    }
    std::unordered_map<std::string, LaurentPoly> state;
    state.emplace(init, LaurentPoly::one());

    LaurentPoly delta = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(-2, -1);
    for (const auto& cr : b.crossings()) {
        int u = l + cr.index - 1;  // the two bottom points under the generator
        int v = u + 1;
        std::unordered_map<std::string, LaurentPoly> next;
        next.reserve(state.size() * 2);
        for (const auto& [key, coeff] : state) {
            // identity smoothing
            next[key] += coeff * LaurentPoly::monomial(cr.sign, 1);
            // e_i smoothing: cap the current bottom pair, open a fresh one
            LaurentPoly ec = coeff * LaurentPoly::monomial(-cr.sign, 1);
            if (key[u] == static_cast<char>(v)) {
                next[key] += ec * delta;
            } else {
                std::string k2 = key;
                char pu = key[u], pv = key[v];
                k2[static_cast<unsigned char>(pu)] = pv;
                k2[static_cast<unsigned char>(pv)] = pu;
                k2[u] = static_cast<char>(v);
                k2[v] = static_cast<char>(u);
                next[std::move(k2)] += ec;
            }
        }
        state = std::move(next);
    }

    // Markov trace: close top i to bottom l+i, count loops per matching.
    LaurentPoly bracket;
    for (const auto& [key, coeff] : state) {
        if (coeff.is_zero()) continue;
        std::vector<bool> seen(2 * l, false);
        int loops = 0;
        for (int start = 0; start < 2 * l; ++start) {
            if (seen[start]) continue;
            ++loops;
            int p = start;
            while (!seen[p]) {
                seen[p] = true;
                int q = static_cast<unsigned char>(key[p]);  // along the matching
                seen[q] = true;
                p = q < l ? q + l : q - l;  // along the closure arc
            }
        }
        bracket += coeff * delta_power(loops - 1);
    }
    return jones_from_bracket(bracket, b.exponent_sum());
}

LaurentPoly kauffman_oracle(const BraidWord& b, int crossing_budget) {
    if (b.closure_components() != 1) throw NotAKnot(b.closure_components());
    int c = b.size();
    if (c > crossing_budget) throw CrossingBudgetExceeded(c, crossing_budget);
    int l = b.strands();
    const auto& w = b.crossings();

    // Accumulate bracket coefficients densely over A-exponents.
    long max_loops = l + c;
    long span = 3L * c + 2 * max_loops + 4;
    std::vector<Int> acc(2 * span + 1, 0);

    std::vector<int> parent(l + c);
    std::vector<int> curr(l);
    std::vector<LaurentPoly> dpow(max_loops + 1);
    for (int k = 0; k <= max_loops; ++k) dpow[k] = delta_power(k);

    for (std::uint32_t bits = 0; bits < (1u << c); ++bits) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            return a;
        };
        std::iota(curr.begin(), curr.end(), 0);
        int next_id = l;
        int loops = 0;
        long expo = 0;
        for (int k = 0; k < c; ++k) {
            if ((bits >> k & 1) == 0) {
                expo += w[k].sign;
            } else {
                expo -= w[k].sign;
                int u = find(curr[w[k].index - 1]);
                int v = find(curr[w[k].index]);
                if (u == v)
                    ++loops;
                else
                    parent[u] = v;
                curr[w[k].index - 1] = next_id;
                curr[w[k].index] = next_id;
                ++next_id;
            }
        }
        for (int pos = 0; pos < l; ++pos) {
            int u = find(curr[pos]);
            int v = find(pos);
            if (u == v)
                ++loops;
            else
                parent[u] = v;
        }
        for (const auto& [e, cf] : dpow[loops - 1].terms()) acc[span + expo + e] += cf;
    }

    std::vector<std::pair<long, Int>> terms;
    for (long i = 0; i <= 2 * span; ++i)
        if (acc[i] != 0) terms.emplace_back(i - span, acc[i]);
    return jones_from_bracket(LaurentPoly::from_terms(terms), b.exponent_sum());
}

}  // namespace lorenz
