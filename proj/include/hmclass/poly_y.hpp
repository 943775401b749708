#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hmclass/rational.hpp"

namespace hmclass {

// Polynomial in the Hirzebruch parameter y with exact rational coefficients,
// stored ascending with trailing zeros trimmed. The zero polynomial has an
// empty coefficient list.
class PolyY {
public:
    PolyY() = default;
    PolyY(const Rational& c) : c_{c} { trim(); }
    PolyY(long long c) : PolyY(Rational(c)) {}

    static PolyY from_coeffs(std::vector<Rational> coeffs) {
        PolyY p;
        p.c_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // c * y^power
    static PolyY term(const Rational& c, std::size_t power) {
        if (c == 0) return {};
        PolyY p;
        p.c_.assign(power + 1, Rational(0));
        p.c_[power] = c;
        return p;
    }

    static PolyY y() { return term(1, 1); }

    // (1+y)^k
    static PolyY unit_power(unsigned k) {
        PolyY p;
        p.c_.resize(k + 1);
        for (unsigned i = 0; i <= k; ++i) p.c_[i] = Rational(binom(k, static_cast<int>(i)));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const Rational& coeff(std::size_t i) const {
        static const Rational zero(0);
        return i < c_.size() ? c_[i] : zero;
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& v) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    PolyY& operator+=(const PolyY& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    PolyY& operator-=(const PolyY& o) {
        if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    PolyY& operator*=(const PolyY& o) { return *this = *this * o; }
    PolyY& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
    friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
    friend PolyY operator-(const PolyY& a) {
        PolyY r = a;
        for (auto& c : r.c_) c = -c;
        return r;
    }
    friend PolyY operator*(const PolyY& a, const PolyY& b) {
        if (a.is_zero() || b.is_zero()) return {};
        PolyY r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    friend PolyY operator*(PolyY a, const Rational& s) { return a *= s; }
    friend PolyY operator*(const Rational& s, PolyY a) { return a *= s; }

    friend bool operator==(const PolyY& a, const PolyY& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyY& a, const PolyY& b) { return !(a == b); }

    // Ascending rendering, e.g. "-1+6y", "3/2-3/2y", "1-21y-2y^2".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? "-" : "+";
            }
            bool show_coeff = (i == 0) || mag != 1;
            if (show_coeff) out += rational_str(mag);
            if (i >= 1) {
                out += "y";
                if (i >= 2) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    std::vector<Rational> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

// Exact division by (1+y)^k via repeated synthetic division at y = -1.
// Throws NotDivisible when p is not a multiple of (1+y)^k.
inline PolyY poly_div_unit_power(const PolyY& p, unsigned k) {
    std::vector<Rational> c = p.coeffs();
    for (unsigned step = 0; step < k; ++step) {
        if (c.empty()) break; // zero stays zero
        std::vector<Rational> q(c.size() - 1);
        Rational carry(0);
        for (std::size_t i = c.size(); i-- > 1;) {
            carry = c[i] - carry; // quotient coefficient of y^{i-1}
            q[i - 1] = carry;
        }
        Rational rem = c[0] - carry;
        if (rem != 0)
            throw NotDivisible("polynomial " + p.str() + " is not divisible by (1+y)^" +
                               std::to_string(k));
        c = std::move(q);
    }
    return PolyY::from_coeffs(std::move(c));
}

} // namespace hmclass
