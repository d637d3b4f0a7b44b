#include <doctest.h>

#include <random>

#include "lorenz/laurent.hpp"
#include "lorenz/polydet.hpp"

using namespace lorenz;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long, long>> terms) {
    std::vector<std::pair<long, Int>> v;
    for (auto [e, c] : terms) v.emplace_back(e, Int(c));
    return LaurentPoly::from_terms(v);
}

}  // namespace

TEST_CASE("laurent basics") {
    LaurentPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.term_count() == 0);
    CHECK(zero == LaurentPoly::monomial(3, 0));

    LaurentPoly p = poly({{-1, 1}, {0, -1}, {1, 1}});  // t - 1 + 1/t
    CHECK(p.lo() == -1);
    CHECK(p.hi() == 1);
    CHECK(p.coeff(0) == -1);
    CHECK(p.coeff(5) == 0);
    CHECK(p.term_count() == 3);
    CHECK(p.str() == "t^-1 - 1 + t");

    CHECK(LaurentPoly::one().is_one());
    CHECK(LaurentPoly::t().str() == "t");
    CHECK((-p) == poly({{-1, -1}, {0, 1}, {1, -1}}));
}

TEST_CASE("laurent arithmetic") {
    LaurentPoly a = poly({{0, 1}, {1, 1}});   // 1 + t
    LaurentPoly b = poly({{0, -1}, {1, 1}});  // t - 1
    CHECK(a + b == poly({{1, 2}}));
    CHECK(a - b == poly({{0, 2}}));
    CHECK(a * b == poly({{0, -1}, {2, 1}}));  // t^2 - 1

    // Cancellation trims to the canonical zero.
    CHECK((a - a).is_zero());
    CHECK(a - a == LaurentPoly());

    // Shifts and multiplication by monomials agree.
    CHECK(a.shifted(-3) == a * LaurentPoly::t(-3));

    // (t - 1 + 1/t)^2, the square-knot Alexander polynomial.
    LaurentPoly tre = poly({{-1, 1}, {0, -1}, {1, 1}});
    CHECK(tre * tre == poly({{-2, 1}, {-1, -2}, {0, 3}, {1, -2}, {2, 1}}));
}

TEST_CASE("laurent mirrored and eval") {
    LaurentPoly p = poly({{-2, 3}, {1, 5}});
    CHECK(p.mirrored() == poly({{-1, 5}, {2, 3}}));
    CHECK(p.mirrored().mirrored() == p);

    CHECK(p.eval_int(1) == 8);
    CHECK(p.eval_int(-1) == -2);  // 3*(+1) + 5*(-1)

    LaurentPoly q = poly({{0, 1}, {1, 2}, {3, 1}});
    CHECK(q.eval_int(2) == 1 + 4 + 8);
    CHECK_THROWS_AS(p.eval_int(2), InternalInvariantViolation);
}

TEST_CASE("exact division round trip and failure") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5), len(1, 5), shift(-3, 3);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::pair<long, Int>> ta, tb;
        for (int i = 0; i < len(rng); ++i) ta.emplace_back(i + shift(rng), coeff(rng));
        for (int i = 0; i < len(rng); ++i) tb.emplace_back(i + shift(rng), coeff(rng));
        LaurentPoly a = LaurentPoly::from_terms(ta);
        LaurentPoly b = LaurentPoly::from_terms(tb);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
        CHECK(exact_div(a * b, a) == b);
    }

    LaurentPoly t2m1 = poly({{0, -1}, {2, 1}});
    LaurentPoly tm1 = poly({{0, -1}, {1, 1}});
    CHECK(exact_div(t2m1, tm1) == poly({{0, 1}, {1, 1}}));
    CHECK_THROWS_AS(exact_div(poly({{0, 1}, {1, 1}}), poly({{0, 2}})),
                    InternalInvariantViolation);
    CHECK_THROWS_AS(exact_div(tm1, LaurentPoly()), InternalInvariantViolation);
}

TEST_CASE("poly determinant: hand-checked small cases") {
    // det [[t, 1], [1, 1]] = t - 1
    PolyMatrix m{{LaurentPoly::t(), LaurentPoly::one()},
                 {LaurentPoly::one(), LaurentPoly::one()}};
    CHECK(det_poly_matrix(m) == poly({{0, -1}, {1, 1}}));
    CHECK(det_poly_matrix_bareiss(m) == poly({{0, -1}, {1, 1}}));

    // Singular matrix.
    PolyMatrix s{{LaurentPoly::t(), LaurentPoly::t()},
                 {LaurentPoly::one(), LaurentPoly::one()}};
    CHECK(det_poly_matrix(s).is_zero());
    CHECK(det_poly_matrix_bareiss(s).is_zero());

    // Empty and 1x1.
    CHECK(det_poly_matrix({}).is_one());
    CHECK(det_poly_matrix({{poly({{-4, 7}})}}) == poly({{-4, 7}}));

    // Laurent entries with negative exponents.
    PolyMatrix neg{{poly({{-1, 1}, {0, 1}}), poly({{-2, 1}})},
                   {poly({{0, 1}}), poly({{-1, 1}, {1, -1}})}};
    CHECK(det_poly_matrix(neg) == det_poly_matrix_bareiss(neg));
}

TEST_CASE("poly determinant: modular engine agrees with fraction-free elimination") {
    std::mt19937 rng(20240814);
    std::uniform_int_distribution<int> dim(1, 5), coeff(-9, 9), deg(0, 3), off(-2, 1);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = dim(rng);
        PolyMatrix m(n, std::vector<LaurentPoly>(n));
        for (auto& row : m) {
            for (auto& entry : row) {
                std::vector<std::pair<long, Int>> terms;
                const int base = off(rng);
                for (int d = 0; d <= deg(rng); ++d) terms.emplace_back(base + d, coeff(rng));
                entry = LaurentPoly::from_terms(terms);
            }
        }
        CHECK(det_poly_matrix(m) == det_poly_matrix_bareiss(m));
    }
}

TEST_CASE("poly determinant: coefficients beyond one 61-bit prime") {
    // Diagonal entries with ~10^38 coefficients force multi-prime CRT.
    const Int big = Int("123456789012345678901234567890123456789");
    PolyMatrix m{
        {LaurentPoly::monomial(1, big), LaurentPoly::one()},
        {LaurentPoly::one(), LaurentPoly::monomial(-1, big)},
    };
    LaurentPoly expect = poly({{0, -1}});
    expect += LaurentPoly::monomial(0, big * big);
    CHECK(det_poly_matrix(m) == expect);
    CHECK(det_poly_matrix_bareiss(m) == expect);

    // And with sign flips.
    PolyMatrix m2{
        {LaurentPoly::monomial(2, -big), LaurentPoly::t(3)},
        {LaurentPoly::t(-3), LaurentPoly::monomial(-2, big)},
    };
    CHECK(det_poly_matrix(m2) == det_poly_matrix_bareiss(m2));
}
