#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmclass/rational.hpp"

namespace hmclass {

// Power series in one formal variable, truncated at a fixed order N and
// exact in every coefficient. Arithmetic is closed at the common order;
// mixing orders is an error, never a silent re-truncation.
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order) : c_(order + 1, Rational(0)) {}

    static TruncSeries constant(std::size_t order, const Rational& c0) {
        TruncSeries s(order);
        s.c_[0] = c0;
        return s;
    }

    static TruncSeries monomial(std::size_t order, std::size_t k, const Rational& c) {
        TruncSeries s(order);
        if (k <= order) s.c_[k] = c;
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const Rational& coeff(std::size_t i) const { return c_[i]; }
    void set_coeff(std::size_t i, const Rational& v) { c_[i] = v; }

    TruncSeries& operator+=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator*(TruncSeries a, const Rational& s) { return a *= s; }
    friend TruncSeries operator*(const Rational& s, TruncSeries a) { return a *= s; }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    TruncSeries pow(unsigned e) const;

    // Multiplicative inverse; requires a unit constant term.
    TruncSeries reciprocal() const {
        if (c_[0] == 0) throw Error("cannot invert a series with zero constant term");
        TruncSeries r(order());
        r.c_[0] = 1 / c_[0];
        for (std::size_t k = 1; k <= order(); ++k) {
            Rational acc(0);
            for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
            r.c_[k] = -acc / c_[0];
        }
        return r;
    }

    // Substitution this(inner); inner must have zero constant term.
    TruncSeries compose(const TruncSeries& inner) const {
        check_order(inner);
        if (inner.c_[0] != 0) throw Error("composition requires zero constant term");
        TruncSeries acc = constant(order(), 0);
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = series_mul(acc, inner);
            acc.c_[0] += c_[i];
        }
        return acc;
    }

    friend TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);

private:
    std::vector<Rational> c_;

    void check_order(const TruncSeries& o) const {
        if (o.c_.size() != c_.size())
            throw OrderMismatch("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(o.order()));
    }
};

// Exact product truncated at the shared order.
inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    a.check_order(b);
    TruncSeries r(a.order());
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; i + j <= a.order(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
}

inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    return series_mul(a, b);
}

inline TruncSeries TruncSeries::pow(unsigned e) const {
    TruncSeries r = constant(order(), 1);
    for (unsigned i = 0; i < e; ++i) r = series_mul(r, *this);
    return r;
}

// ln(1+x) = sum_{p=1..N} (-1)^{p+1} x^p / p
inline TruncSeries log1p_series(std::size_t order) {
    TruncSeries s(order);
    for (std::size_t p = 1; p <= order; ++p)
        s.set_coeff(p, Rational(p % 2 == 1 ? 1 : -1, p));
    return s;
}

// e^{scale*x}
inline TruncSeries exp_series(std::size_t order, const Rational& scale = Rational(1)) {
    TruncSeries s(order);
    Rational term(1);
    s.set_coeff(0, term);
    for (std::size_t p = 1; p <= order; ++p) {
        term = term * scale / Rational(p);
        s.set_coeff(p, term);
    }
    return s;
}

// (1+x)^e as a truncated polynomial
inline TruncSeries one_plus_x_power(std::size_t order, unsigned e) {
    TruncSeries s(order);
    for (std::size_t i = 0; i <= order && i <= e; ++i)
        s.set_coeff(i, Rational(binom(e, static_cast<int>(i))));
    return s;
}

// x/(1-e^{-x}), the building block of the Todd pushforward on P^n
inline TruncSeries todd_unit_series(std::size_t order) {
    // 1-e^{-x} = x * g(x) with g(x) = sum_p (-1)^p x^p/(p+1)!
    TruncSeries g(order);
    Rational fact(1);
    for (std::size_t p = 0; p <= order; ++p) {
        fact *= Rational(p + 1);
        g.set_coeff(p, Rational(p % 2 == 0 ? 1 : -1) / fact);
    }
    return g.reciprocal();
}

} // namespace hmclass
