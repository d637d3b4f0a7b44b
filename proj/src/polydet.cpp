#include "lorenz/polydet.hpp"

#include <algorithm>
#include <cstdint>

namespace lorenz {

namespace {

// 61-bit primes; products of two residues fit in unsigned __int128.
constexpr std::uint64_t kPrimes[] = {
    2305843009213693951ULL, 2305843009213693921ULL, 2305843009213693907ULL,
    2305843009213693723ULL, 2305843009213693693ULL, 2305843009213693669ULL,
    2305843009213693613ULL, 2305843009213693561ULL, 2305843009213693549ULL,
    2305843009213693487ULL,
};
constexpr int kPrimeCount = static_cast<int>(sizeof(kPrimes) / sizeof(kPrimes[0]));

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t to_mod(const Int& v, std::uint64_t p) {
    Int r = v % Int(p);
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

// Determinant of an n x n matrix over F_p, by Gaussian elimination.
std::uint64_t det_mod(std::vector<std::vector<std::uint64_t>>& a, std::uint64_t p) {
    int n = static_cast<int>(a.size());
    std::uint64_t det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = p - det;
            if (det == p) det = 0;
        }
        det = mulmod(det, a[k][k], p);
        std::uint64_t inv = invmod(a[k][k], p);
        for (int i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            std::uint64_t f = mulmod(a[i][k], inv, p);
            for (int j = k; j < n; ++j) {
                std::uint64_t s = mulmod(f, a[k][j], p);
                a[i][j] = a[i][j] >= s ? a[i][j] - s : a[i][j] + p - s;
            }
        }
    }
    return det;
}

// Coefficients (starting at exponent 0) of the degree-<= deg polynomial with
// value f(j) = vals[j-1] for j = 1..deg+1, over F_p. Newton's forward form.
std::vector<std::uint64_t> interpolate_mod(std::vector<std::uint64_t> vals, std::uint64_t p) {
    int m = static_cast<int>(vals.size());
    // divided differences on nodes 1..m: column updates in place
    std::vector<std::uint64_t> dd = std::move(vals);
    std::vector<std::uint64_t> inv_k(m + 1, 1);
    for (int k = 1; k <= m; ++k) inv_k[k] = invmod(k % p, p);
    for (int level = 1; level < m; ++level)
        for (int i = m - 1; i >= level; --i) {
            std::uint64_t diff = dd[i] >= dd[i - 1] ? dd[i] - dd[i - 1] : dd[i] + p - dd[i - 1];
            dd[i] = mulmod(diff, inv_k[level], p);
        }
    // expand Newton form: poly = dd[m-1]; for i = m-2..0: poly = poly*(t - x_i) + dd[i]
    std::vector<std::uint64_t> poly{dd[m - 1]};
    for (int i = m - 2; i >= 0; --i) {
        std::uint64_t xi = static_cast<std::uint64_t>(i + 1) % p;
        std::vector<std::uint64_t> next(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = (next[j + 1] + poly[j]) % p;
            std::uint64_t s = mulmod(poly[j], xi, p);
            next[j] = next[j] >= s ? next[j] - s : next[j] + p - s;
        }
        next[0] = (next[0] + dd[i]) % p;
        poly = std::move(next);
    }
    return poly;
}

Int l1_norm(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [e, c] : p.terms()) s += (c < 0 ? Int(-c) : c);
    return s;
}

}  // namespace

LaurentPoly det_poly_matrix(const PolyMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::one();
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw InternalInvariantViolation("determinant of non-square matrix");

    // Per-row Laurent shift so entries become ordinary polynomials; the
    // factored-out monomial multiplies the result at the end.
    long total_shift = 0;
    long degree_bound = 0;
    Int coeff_bound = 1;
    PolyMatrix a = m;
    for (int i = 0; i < n; ++i) {
        long row_lo = 0;
        bool any = false;
        for (const auto& e : a[i])
            if (!e.is_zero()) row_lo = any ? std::min(row_lo, e.lo()) : (any = true, e.lo());
        if (!any) return {};  // zero row
        long row_hi = 0;
        Int row_l1 = 0;
        for (auto& e : a[i]) {
            if (e.is_zero()) continue;
            e = e.shifted(-row_lo);
            row_hi = std::max(row_hi, e.hi());
            row_l1 += l1_norm(e);
        }
        total_shift += row_lo;
        degree_bound += row_hi;
        coeff_bound *= row_l1;
    }
    if (coeff_bound == 0) return {};

    int points = static_cast<int>(degree_bound) + 1;
    int num_primes = 1;
    {
        Int need = 2 * coeff_bound + 1, have = kPrimes[0];
        while (have < need) {
            if (num_primes == kPrimeCount)
                throw InternalInvariantViolation("coefficient bound exceeds CRT capacity");
            have *= kPrimes[num_primes++];
        }
    }

    // Dense coefficient rows per entry for fast modular Horner evaluation.
    std::vector<std::vector<std::vector<Int>>> coeffs(n);
    for (int i = 0; i < n; ++i) {
        coeffs[i].resize(n);
        for (int j = 0; j < n; ++j) {
            const auto& e = a[i][j];
            if (e.is_zero()) continue;
            auto& v = coeffs[i][j];
            v.assign(e.hi() + 1, 0);
            for (const auto& [ex, c] : e.terms()) v[ex] = c;
        }
    }

    std::vector<std::vector<std::uint64_t>> per_prime;  // coefficients mod each prime
    per_prime.reserve(num_primes);
    std::vector<std::vector<std::uint64_t>> grid(n, std::vector<std::uint64_t>(n));
    for (int pi = 0; pi < num_primes; ++pi) {
        std::uint64_t p = kPrimes[pi];
        std::vector<std::vector<std::vector<std::uint64_t>>> cm(n);
        for (int i = 0; i < n; ++i) {
            cm[i].resize(n);
            for (int j = 0; j < n; ++j) {
                cm[i][j].reserve(coeffs[i][j].size());
                for (const auto& c : coeffs[i][j]) cm[i][j].push_back(to_mod(c, p));
            }
        }
        std::vector<std::uint64_t> vals(points);
        for (int t = 1; t <= points; ++t) {
            std::uint64_t tv = static_cast<std::uint64_t>(t) % p;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const auto& cv = cm[i][j];
                    std::uint64_t acc = 0;
                    for (auto it = cv.rbegin(); it != cv.rend(); ++it)
                        acc = (mulmod(acc, tv, p) + *it) % p;
                    grid[i][j] = acc;
                }
            vals[t - 1] = det_mod(grid, p);
        }
        per_prime.push_back(interpolate_mod(std::move(vals), p));
    }

    // CRT per coefficient, lifted to the symmetric range.
    Int modulus = 1;
    std::vector<Int> rem(points, 0);  // running residues as integers
    for (int pi = 0; pi < num_primes; ++pi) {
        std::uint64_t p = kPrimes[pi];
        if (pi == 0) {
            for (int k = 0; k < points; ++k) rem[k] = per_prime[0][k];
            modulus = p;
            continue;
        }
        Int inv = 0;
        {  // modulus^{-1} mod p
            std::uint64_t mm = to_mod(modulus, p);
            inv = invmod(mm, p);
        }
        for (int k = 0; k < points; ++k) {
            std::uint64_t cur = to_mod(rem[k], p);
            std::uint64_t want = per_prime[pi][k];
            std::uint64_t delta = want >= cur ? want - cur : want + p - cur;
            Int step = mulmod(delta, inv.convert_to<std::uint64_t>(), p);
            rem[k] += step * modulus;
        }
        modulus *= p;
    }
    Int half = modulus / 2;
    std::vector<std::pair<long, Int>> terms;
    for (int k = 0; k < points; ++k) {
        Int v = rem[k];
        if (v > half) v -= modulus;
        if (v != 0) terms.emplace_back(total_shift + k, v);
    }
    return LaurentPoly::from_terms(terms);
}

LaurentPoly det_poly_matrix_bareiss(const PolyMatrix& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::one();
    PolyMatrix a = m;
    // Laurent entries: clear denominators row by row, as above.
    long total_shift = 0;
    for (int i = 0; i < n; ++i) {
        long row_lo = 0;
        bool any = false;
        for (const auto& e : a[i])
            if (!e.is_zero()) row_lo = any ? std::min(row_lo, e.lo()) : (any = true, e.lo());
        if (!any) return {};
        for (auto& e : a[i]) e = e.shifted(-row_lo);
        total_shift += row_lo;
    }

    // Fraction-free elimination: divisions by the previous pivot are exact.
    LaurentPoly prev = LaurentPoly::one();
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) { piv = i; break; }
            if (piv < 0) return {};
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_div(num, prev);
            }
            a[i][k] = {};
        }
        prev = a[k][k];
    }
    LaurentPoly det = a[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det.shifted(total_shift);
}

}  // namespace lorenz
