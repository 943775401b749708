#pragma once

#include <string>
#include <utility>

#include "hmclass/poly_y.hpp"

namespace hmclass {

// Element of Q[y] localized at (1+y): num / (1+y)^unit_pow. Canonical form
// keeps num prime to (1+y) unless unit_pow is already zero. This houses the
// intermediate (1+y)^{-i} factors of the normalization rule; a finished
// class must come back out as a plain polynomial via to_poly().
class RatY {
public:
    RatY() = default;
    RatY(PolyY num) : num_(std::move(num)) {}
    RatY(PolyY num, unsigned unit_pow) : num_(std::move(num)), e_(unit_pow) { canonicalize(); }

    const PolyY& num() const { return num_; }
    unsigned unit_pow() const { return e_; }
    bool is_zero() const { return num_.is_zero(); }

    // divide by (1+y)^k
    RatY& div_unit(unsigned k) {
        e_ += k;
        canonicalize();
        return *this;
    }

    RatY& operator+=(const RatY& o) {
        unsigned e = e_ > o.e_ ? e_ : o.e_;
        num_ = num_ * PolyY::unit_power(e - e_) + o.num_ * PolyY::unit_power(e - o.e_);
        e_ = e;
        canonicalize();
        return *this;
    }
    RatY& operator-=(const RatY& o) { return *this += -o; }
    RatY& operator*=(const RatY& o) {
        num_ *= o.num_;
        e_ += o.e_;
        canonicalize();
        return *this;
    }
    RatY& operator*=(const Rational& s) {
        num_ *= s;
        canonicalize();
        return *this;
    }

    friend RatY operator+(RatY a, const RatY& b) { return a += b; }
    friend RatY operator-(RatY a, const RatY& b) { return a -= b; }
    friend RatY operator-(const RatY& a) { return RatY(-a.num_, a.e_); }
    friend RatY operator*(RatY a, const RatY& b) { return a *= b; }
    friend RatY operator*(RatY a, const Rational& s) { return a *= s; }
    friend RatY operator*(const Rational& s, RatY a) { return a *= s; }

    friend bool operator==(const RatY& a, const RatY& b) {
        return a.e_ == b.e_ && a.num_ == b.num_; // canonical forms are unique
    }
    friend bool operator!=(const RatY& a, const RatY& b) { return !(a == b); }

    // Throws NotDivisible when the value is not a polynomial in y.
    PolyY to_poly() const {
        return poly_div_unit_power(num_, e_); // canonical => either e_ == 0 or it throws
    }

    std::string str() const {
        if (e_ == 0) return num_.str();
        return "(" + num_.str() + ")/(1+y)^" + std::to_string(e_);
    }

private:
    PolyY num_;
    unsigned e_ = 0;

    void canonicalize() {
        if (num_.is_zero()) {
            e_ = 0;
            return;
        }
        while (e_ > 0 && num_.eval(Rational(-1)) == 0) {
            num_ = poly_div_unit_power(num_, 1);
            --e_;
        }
    }
};

} // namespace hmclass
