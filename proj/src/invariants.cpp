#include "lorenz/invariants.hpp"

#include <algorithm>

#include "lorenz/polydet.hpp"

namespace lorenz {

LaurentPoly normalize_alexander(LaurentPoly p) {
    if (p.is_zero()) throw InternalInvariantViolation("zero Alexander polynomial");
    long lo = p.lo(), hi = p.hi();
    if ((lo + hi) % 2 != 0)
        throw InternalInvariantViolation("Alexander span cannot be centered");
    p = p.shifted(-(lo + hi) / 2);
    if (!(p == p.mirrored()))
        throw InternalInvariantViolation("Alexander not symmetric after centering");
    Int at_one = p.eval_int(1);
    if (at_one == 1) return p;
    if (at_one == -1) return -p;
    throw InternalInvariantViolation("Alexander at t=1 is not a unit");
}

LaurentPoly alexander_burau(const BraidWord& b) {
    if (b.closure_components() != 1) throw NotAKnot(b.closure_components());
    int l = b.strands();
    if (l == 1) return LaurentPoly::one();
    int n = l - 1;

    // Reduced Burau product, built by sparse column updates: right-multiplying
    // by the generator matrix of sigma_i (1-based) rewrites column i only.
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly::one();
    LaurentPoly t = LaurentPoly::t(1);
    LaurentPoly tinv = LaurentPoly::t(-1);
    for (const auto& cr : b.crossings()) {
        int c = cr.index - 1;  // 0-based column
        for (int r = 0; r < n; ++r) {
            LaurentPoly nc;
            if (cr.sign > 0) {
                if (c > 0) nc += t * m[r][c - 1];
                nc -= t * m[r][c];
                if (c + 1 < n) nc += m[r][c + 1];
            } else {
                if (c > 0) nc += m[r][c - 1];
                nc -= tinv * m[r][c];
                if (c + 1 < n) nc += tinv * m[r][c + 1];
            }
            m[r][c] = std::move(nc);
        }
    }
    for (int i = 0; i < n; ++i) m[i][i] -= LaurentPoly::one();

    LaurentPoly det = det_poly_matrix(m);
    LaurentPoly cyc;  // (1 - t^l)/(1 - t)
    for (int k = 0; k < l; ++k) cyc += LaurentPoly::t(k);
    return normalize_alexander(exact_div(det, cyc));
}

namespace {

struct Loop {
    int column;    // generator index i (1-based), bands in column i
    int top;       // word position of the upper crossing
    int bottom;    // word position of the lower crossing
    int sign_top;
    int sign_bottom;
};

std::vector<Loop> seifert_loops(const BraidWord& b) {
    std::vector<std::vector<int>> by_col(b.strands());  // word positions per column
    const auto& w = b.crossings();
    for (int k = 0; k < static_cast<int>(w.size()); ++k) by_col[w[k].index].push_back(k);
    std::vector<Loop> loops;
    for (int i = 1; i < b.strands(); ++i) {
        if (by_col[i].empty())
            throw InternalInvariantViolation("empty generator column under a knot closure");
        for (std::size_t k = 0; k + 1 < by_col[i].size(); ++k) {
            int a = by_col[i][k], c = by_col[i][k + 1];
            loops.push_back({i, a, c, w[a].sign, w[c].sign});
        }
    }
    return loops;
}

}  // namespace

IntMatrix seifert_matrix(const BraidWord& b) {
    if (b.closure_components() != 1) throw NotAKnot(b.closure_components());
    std::vector<Loop> loops = seifert_loops(b);
    int n = static_cast<int>(loops.size());
    IntMatrix v(n, std::vector<Int>(n, 0));
    for (int e = 0; e < n; ++e)
        v[e][e] = -(loops[e].sign_top + loops[e].sign_bottom) / 2;  // in {-1, 0, 1}
    for (int e = 0; e < n; ++e) {
        for (int f = 0; f < n; ++f) {
            if (e == f) continue;
            const Loop& a = loops[e];
            const Loop& c = loops[f];
            if (a.column == c.column && a.bottom == c.top) {
                // consecutive pair sharing the middle crossing
                if (a.sign_bottom > 0)
                    v[e][f] = 1;  // (upper, lower) entry; transpose stays 0
                else
                    v[f][e] = -1;
            } else if (c.column == a.column + 1) {
                // adjacent columns, linked only when the intervals interleave
                if (a.top < c.top && c.top < a.bottom && a.bottom < c.bottom)
                    v[e][f] = 1;
                else if (c.top < a.top && a.top < c.bottom && c.bottom < a.bottom)
                    v[e][f] = -1;
            }
        }
    }
    return v;
}

LaurentPoly alexander_seifert(const BraidWord& b) {
    IntMatrix v = seifert_matrix(b);
    int n = static_cast<int>(v.size());
    if (n == 0) return LaurentPoly::one();
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LaurentPoly e = LaurentPoly::constant(v[i][j]);
            e -= LaurentPoly::monomial(1, v[j][i]);
            m[i][j] = std::move(e);
        }
    return normalize_alexander(det_poly_matrix(m));
}

int signature_of_symmetric(IntMatrix m) {
    int sig = 0;
    Int prev = 1;
    while (!m.empty()) {
        int n = static_cast<int>(m.size());
        int d = -1;
        for (int i = 0; i < n; ++i)
            if (m[i][i] != 0) { d = i; break; }
        if (d < 0) {
            int bi = -1, bj = -1;
            for (int i = 0; i < n && bi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (m[i][j] != 0) { bi = i; bj = j; break; }
            if (bi < 0) break;  // zero matrix: no further contribution
            // congruence row/col add makes the diagonal nonzero (2*m[bi][bj])
            for (int k = 0; k < n; ++k) m[bi][k] += m[bj][k];
            for (int k = 0; k < n; ++k) m[k][bi] += m[k][bj];
            d = bi;
        }
        if (d != 0) {
            std::swap(m[0], m[d]);
            for (int k = 0; k < n; ++k) std::swap(m[k][0], m[k][d]);
        }
        Int p0 = m[0][0];
        int e = p0 > 0 ? 1 : -1;
        sig += e;
        // Scaled Schur complement: sign(p0) * (p0*m_ij - m_i0*m_j0) / prev.
        // The division is exact (Sylvester identity, stable under the integer
        // congruences above); positive scaling preserves the signature.
        IntMatrix s(n - 1, std::vector<Int>(n - 1));
        for (int i = 1; i < n; ++i)
            for (int j = 1; j < n; ++j) {
                Int raw = p0 * m[i][j] - m[i][0] * m[j][0];
                Int q = raw / prev;
                if (q * prev != raw)
                    throw InternalInvariantViolation("inexact signature elimination step");
                s[i - 1][j - 1] = e > 0 ? q : -q;
            }
        prev = abs(p0);
        m = std::move(s);
    }
    return sig;
}

int signature(const BraidWord& b) {
    IntMatrix v = seifert_matrix(b);
    int n = static_cast<int>(v.size());
    IntMatrix s(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s[i][j] = v[i][j] + v[j][i];
    return signature_of_symmetric(std::move(s));
}

Int determinant_invariant(const LaurentPoly& alexander) {
    Int d = alexander.eval_int(-1);
    if (d < 0) d = -d;
    return d;
}

long genus_bennequin(const BraidWord& b) {
    if (b.closure_components() != 1) throw NotAKnot(b.closure_components());
    if (b.size() > 0 && !b.all_signs(+1) && !b.all_signs(-1)) throw MixedSigns();
    long num = b.size() - b.strands() + 1;
    if (num % 2 != 0)
        throw InternalInvariantViolation("c - l + 1 odd for a knot closure");
    return num / 2;
}

}  // namespace lorenz
