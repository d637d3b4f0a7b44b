#pragma once

// Exact integer Laurent polynomials: the value type of Alexander and Jones
// invariants. Dense coefficient vector plus a lowest-exponent offset; the
// zero polynomial is the empty vector with offset 0, so equality of values
// is equality of representations.

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "lorenz/errors.hpp"

namespace lorenz {

using Int = boost::multiprecision::cpp_int;

class LaurentPoly {
  public:
    LaurentPoly() = default;  // zero

    static LaurentPoly one() { return monomial(0, 1); }
    static LaurentPoly constant(Int v) { return monomial(0, std::move(v)); }
    static LaurentPoly t(long e = 1) { return monomial(e, 1); }
    static LaurentPoly monomial(long e, Int coeff);
    static LaurentPoly from_terms(const std::vector<std::pair<long, Int>>& terms);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && lo_ == 0 && c_[0] == 1; }

    long lo() const;  // least exponent with nonzero coefficient; requires nonzero
    long hi() const;
    Int coeff(long e) const;
    int term_count() const { return static_cast<int>(c_.size()); }

    // (exponent, coefficient) pairs in increasing exponent order, zeros omitted.
    std::vector<std::pair<long, Int>> terms() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly shifted(long e) const;  // times t^e
    LaurentPoly mirrored() const;       // t -> 1/t

    // Exact evaluation at integer t = v; v in {1, -1} required when lo() < 0.
    Int eval_int(long v) const;

    std::string str(const std::string& var = "t") const;

  private:
    void trim();

    long lo_ = 0;
    std::vector<Int> c_;  // c_[i] is the coefficient of t^(lo_+i)
};

// Quotient of exact division; throws InternalInvariantViolation on a nonzero
// remainder or zero divisor.
LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace lorenz
