#include "lorenz/laurent.hpp"

#include <algorithm>

namespace lorenz {

void LaurentPoly::trim() {
    std::size_t front = 0;
    while (front < c_.size() && c_[front] == 0) ++front;
    if (front == c_.size()) {
        c_.clear();
        lo_ = 0;
        return;
    }
    std::size_t back = c_.size();
    while (c_[back - 1] == 0) --back;
    if (front > 0) c_.erase(c_.begin(), c_.begin() + front);
    c_.resize(back - front);
    lo_ += static_cast<long>(front);
}

LaurentPoly LaurentPoly::monomial(long e, Int coeff) {
    LaurentPoly p;
    if (coeff != 0) {
        p.lo_ = e;
        p.c_.push_back(std::move(coeff));
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<long, Int>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(e, c);
    return p;
}

long LaurentPoly::lo() const {
    if (is_zero()) throw InternalInvariantViolation("lo() of zero polynomial");
    return lo_;
}

long LaurentPoly::hi() const {
    if (is_zero()) throw InternalInvariantViolation("hi() of zero polynomial");
    return lo_ + static_cast<long>(c_.size()) - 1;
}

Int LaurentPoly::coeff(long e) const {
    if (e < lo_ || e >= lo_ + static_cast<long>(c_.size())) return 0;
    return c_[e - lo_];
}

std::vector<std::pair<long, Int>> LaurentPoly::terms() const {
    std::vector<std::pair<long, Int>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.emplace_back(lo_ + static_cast<long>(i), c_[i]);
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& v : p.c_) v = -v;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    long new_lo = std::min(lo_, o.lo_);
    long new_hi = std::max(lo_ + static_cast<long>(c_.size()), o.lo_ + static_cast<long>(o.c_.size()));
    std::vector<Int> out(new_hi - new_lo);
    for (std::size_t i = 0; i < c_.size(); ++i) out[lo_ - new_lo + i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[o.lo_ - new_lo + i] += o.c_[i];
    lo_ = new_lo;
    c_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly p;
    p.lo_ = a.lo_ + b.lo_;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) p.c_[i + j] += a.c_[i] * b.c_[j];
    }
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lo_ += e;
    return p;
}

LaurentPoly LaurentPoly::mirrored() const {
    LaurentPoly p;
    if (is_zero()) return p;
    p.lo_ = -(lo_ + static_cast<long>(c_.size()) - 1);
    p.c_.assign(c_.rbegin(), c_.rend());
    return p;
}

Int LaurentPoly::eval_int(long v) const {
    if (is_zero()) return 0;
    if (lo_ < 0 && v != 1 && v != -1)
        throw InternalInvariantViolation("integer evaluation with negative exponents");
    if (v == 0 && lo_ < 0) throw InternalInvariantViolation("pole at t = 0");
    // t^lo * (Horner in the nonnegative part); for v = +-1, t^lo is +-1.
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    Int unit = 1;
    if (v == -1 && (lo_ % 2 != 0)) unit = -1;
    if (v != 1 && v != -1)
        for (long k = 0; k < lo_; ++k) acc *= v;
    return unit * acc;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    auto ts = terms();
    for (std::size_t k = 0; k < ts.size(); ++k) {
        auto [e, c] = ts[k];
        bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (k == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string mag = a.str();
        if (e == 0) {
            out += mag;
        } else {
            if (mag != "1") out += mag + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

LaurentPoly exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw InternalInvariantViolation("division by zero polynomial");
    if (num.is_zero()) return {};
    // Shift both to ordinary polynomials and long-divide from the top.
    LaurentPoly n = num.shifted(-num.lo());
    LaurentPoly d = den.shifted(-den.lo());
    long shift = num.lo() - den.lo();
    LaurentPoly q;
    Int lead = d.coeff(d.hi());
    while (!n.is_zero() && n.hi() >= d.hi()) {
        Int c = n.coeff(n.hi());
        if (c % lead != 0) throw InternalInvariantViolation("inexact polynomial division");
        LaurentPoly term = LaurentPoly::monomial(n.hi() - d.hi(), c / lead);
        q += term;
        n -= term * d;
    }
    if (!n.is_zero()) throw InternalInvariantViolation("inexact polynomial division");
    return q.shifted(shift);
}

}  // namespace lorenz
