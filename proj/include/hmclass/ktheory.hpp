#pragma once

#include <string>
#include <vector>

#include "hmclass/lattice.hpp"
#include "hmclass/proj_class.hpp"
#include "hmclass/rat_y.hpp"
#include "hmclass/trunc_series.hpp"

namespace hmclass {

// a_{m,i,j}: the constant term in the Laurent expansion of
// (ln(1+x))^j (1+1/x)^{m-i}, i.e. the coefficient of x^{m-i} in
// (1+x)^{m-i} (ln(1+x))^j. For i > m the expansion has no constant term.
inline Rational a_coeff(int m, int i, int j) {
    if (i > m) return 0;
    const int order = m - i;
    if (j > order) return 0; // (ln(1+x))^j starts at x^j
    TruncSeries s = one_plus_x_power(static_cast<std::size_t>(order), static_cast<unsigned>(order));
    s = series_mul(s, log1p_series(static_cast<std::size_t>(order)).pow(static_cast<unsigned>(j)));
    return s.coeff(static_cast<std::size_t>(order));
}

// Normalized Hirzebruch class of P^m:
//   T_y(P^m) = sum_{i,j} a_{m,i,j} binom(m+1,i) (-y)^i (1+y)^{m-i-j} [P^j]
inline GradedProjClass hirzebruch_pn(int m) {
    GradedProjClass r(m);
    for (int j = 0; j <= m; ++j) {
        PolyY cj;
        for (int i = 0; i + j <= m; ++i) {
            Rational a = a_coeff(m, i, j);
            if (a == 0) continue;
            Rational scale = a * Rational(binom(m + 1, i)) * (i % 2 == 1 ? -1 : 1);
            cj += PolyY::term(scale, static_cast<std::size_t>(i)) *
                  PolyY::unit_power(static_cast<unsigned>(m - i - j));
        }
        r.set_coeff(j, cj);
    }
    return r;
}

// Pushforward of the Hirzebruch class of an arrangement with cone
// characteristic polynomial chi(x) = sum_i (-1)^i c_i x^{n+1-i}:
//   sum_{i=1..n} (-1)^{i+1} c_i T_y(P^{n-i}).
// `charpoly` is ascending in x and must be monic of degree n+1.
inline GradedProjClass arr_hirzebruch_pushforward(const std::vector<Integer>& charpoly, int n) {
    if (static_cast<int>(charpoly.size()) != n + 2 || charpoly.back() != 1)
        throw NotMonic("characteristic polynomial must be monic of degree " +
                       std::to_string(n + 1));
    GradedProjClass r(n);
    for (int i = 1; i <= n; ++i) {
        // c_i = (-1)^i * [x^{n+1-i}] chi
        Integer ci = charpoly[static_cast<std::size_t>(n + 1 - i)];
        if (i % 2 == 1) ci = -ci;
        Integer sign = (i % 2 == 1) ? 1 : -1; // (-1)^{i+1}
        Rational scale(sign * ci);
        if (scale == 0) continue;
        GradedProjClass part = hirzebruch_pn(n - i).embedded(n);
        for (const auto& [d, p] : part.components()) r.add_coeff(d, p * scale);
    }
    return r;
}

// Element of K_0(P^n) with coefficients in Q[y] localized at (1+y),
// represented on the basis t^0..t^n modulo the Koszul relation
// (1-t)^{n+1} = 0, where t is the class of O(-1).
class KClassRat {
public:
    explicit KClassRat(int n) : n_(n), c_(static_cast<std::size_t>(n) + 1) {}

    static KClassRat scalar(int n, RatY v) {
        KClassRat r(n);
        r.c_[0] = std::move(v);
        return r;
    }

    int n() const { return n_; }
    const RatY& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
    void set_coeff(int k, RatY v) { c_[static_cast<std::size_t>(k)] = std::move(v); }

    KClassRat& operator+=(const KClassRat& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    KClassRat& operator-=(const KClassRat& o) {
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }
    KClassRat& operator*=(const RatY& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }
    friend KClassRat operator+(KClassRat a, const KClassRat& b) { return a += b; }
    friend KClassRat operator-(KClassRat a, const KClassRat& b) { return a -= b; }
    friend KClassRat operator*(KClassRat a, const RatY& s) { return a *= s; }

    friend KClassRat operator*(const KClassRat& a, const KClassRat& b) {
        std::vector<RatY> raw(2 * a.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) raw[i + j] += a.c_[i] * b.c_[j];
        }
        return from_raw(a.n_, std::move(raw));
    }

    KClassRat pow(unsigned e) const {
        KClassRat r = scalar(n_, RatY(PolyY(1)));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

private:
    int n_;
    std::vector<RatY> c_;

    // Reduce a t-polynomial using t^q = sum_{p<q} binom(q,p)(-1)^{p+q+1} t^p
    // with q = n+1, which is the Koszul relation solved for t^q.
    static KClassRat from_raw(int n, std::vector<RatY> raw) {
        const int q = n + 1;
        for (std::size_t d = raw.size(); d-- > static_cast<std::size_t>(q);) {
            if (raw[d].is_zero()) continue;
            RatY c = std::move(raw[d]);
            raw[d] = RatY();
            for (int p = 0; p < q; ++p) {
                Rational coef(binom(q, p) * ((p + q) % 2 == 0 ? -1 : 1));
                raw[d - static_cast<std::size_t>(q) + static_cast<std::size_t>(p)] += c * coef;
            }
        }
        KClassRat r(n);
        for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = std::move(raw[k]);
        return r;
    }
};

namespace detail {

// Todd pushforward td_*: t^k contributes to [P^{n-j}] the coefficient of
// h^j in e^{-kh} (h/(1-e^{-h}))^{n+1}, then the normalization divides the
// [P^d] component by (1+y)^d. The result must be a genuine polynomial in y;
// NotDivisible here means the polynomiality guarantee was violated.
inline GradedProjClass todd_normalized(const KClassRat& kc) {
    const int n = kc.n();
    TruncSeries todd_pow =
        todd_unit_series(static_cast<std::size_t>(n)).pow(static_cast<unsigned>(n) + 1);
    std::vector<RatY> unnormalized(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        if (kc.coeff(k).is_zero()) continue;
        TruncSeries expanded =
            series_mul(exp_series(static_cast<std::size_t>(n), Rational(-k)), todd_pow);
        for (int j = 0; j <= n; ++j) {
            const Rational& res = expanded.coeff(static_cast<std::size_t>(j));
            if (res == 0) continue;
            unnormalized[static_cast<std::size_t>(n - j)] += kc.coeff(k) * res;
        }
    }
    GradedProjClass r(n);
    for (int d = 0; d <= n; ++d) {
        RatY v = unnormalized[static_cast<std::size_t>(d)];
        v.div_unit(static_cast<unsigned>(d));
        r.set_coeff(d, v.to_poly());
    }
    return r;
}

} // namespace detail

// Pushforward of the virtual Hirzebruch class of a degree-m arrangement in
// P^n, computed from the K-class
//   (1+ty)^{n+1} (1-t^m) / ((1+y)(1+t^m y)).
// With u = 1-t^m nilpotent of order n+1, the denominator expands exactly:
//   1/(1+t^m y) = sum_{k=0..n} u^k y^k / (1+y)^{k+1}.
inline GradedProjClass virtual_pushforward_series(int n, int m) {
    if (n < 1 || m < 1) throw Error("virtual_pushforward_series requires n, m >= 1");
    const KClassRat one = KClassRat::scalar(n, RatY(PolyY(1)));
    KClassRat t(n);
    t.set_coeff(1, RatY(PolyY(1)));
    const KClassRat u = one - t.pow(static_cast<unsigned>(m));

    KClassRat inv(n);
    KClassRat u_pow = one;
    for (int k = 0; k <= n; ++k) {
        inv += u_pow * RatY(PolyY::term(1, static_cast<std::size_t>(k)),
                            static_cast<unsigned>(k) + 1);
        if (k < n) u_pow = u_pow * u;
    }

    KClassRat one_plus_ty(n);
    one_plus_ty.set_coeff(0, RatY(PolyY(1)));
    one_plus_ty.set_coeff(1, RatY(PolyY::y()));

    KClassRat drvir = one_plus_ty.pow(static_cast<unsigned>(n) + 1) * u * inv;
    drvir *= RatY(PolyY(1), 1); // the remaining 1/(1+y)
    return detail::todd_normalized(drvir);
}

// The closed forms of the same pushforward for n = 2, 3.
inline GradedProjClass virtual_pushforward_closed(int n, int m) {
    if (m < 1) throw Error("virtual_pushforward_closed requires m >= 1");
    const Rational mm(m);
    if (n == 2) {
        GradedProjClass r(2);
        r.set_coeff(1, PolyY(mm));
        // m(m-3)/2 (y-1)
        r.set_coeff(0, PolyY::from_coeffs({Rational(-1), Rational(1)}) *
                           (mm * Rational(m - 3) / 2));
        return r;
    }
    if (n == 3) {
        GradedProjClass r(3);
        r.set_coeff(2, PolyY(mm));
        r.set_coeff(1, PolyY::from_coeffs({Rational(-1), Rational(1)}) *
                           (mm * Rational(m - 4) / 2));
        PolyY pt = PolyY::unit_power(2) * Rational(1 + binom(m - 1, 3));
        pt -= PolyY::term(Rational(Integer(m) * m * m - 4 * Integer(m) * m + 6 * m), 1);
        r.set_coeff(0, pt);
        return r;
    }
    throw UnsupportedDimension("no closed virtual class for n = " + std::to_string(n));
}

// (i_{Sigma,P^n})_* M_y(A) as the difference of the virtual and ordinary
// Hirzebruch class pushforwards. The closed-form virtual class is used and
// the series route is recomputed as a cross-check; the result must be
// supported in dimensions <= n-2.
inline GradedProjClass hm_pushforward(const Lattice& lat) {
    const int n = lat.n;
    if (n != 2 && n != 3)
        throw DimensionError("K-theoretic class computation supports only P^2 and P^3, got n = " +
                             std::to_string(n));
    GradedProjClass vir = virtual_pushforward_closed(n, lat.m);
    GradedProjClass vir_series = virtual_pushforward_series(n, lat.m);
    if (vir != vir_series)
        throw CrossCheckError("closed and series virtual classes disagree for n = " +
                              std::to_string(n) + ", m = " + std::to_string(lat.m));
    GradedProjClass result = vir - arr_hirzebruch_pushforward(lat.charpoly, n);
    if (!result.coeff(n).is_zero() || !result.coeff(n - 1).is_zero())
        throw SupportViolation("Hirzebruch-Milnor class has components above dim Sigma");
    return result;
}

// Direct evaluation of the closed P^3 formula:
//   sum_S (binom(m_S,2)y - binom(m_S-1,2)) [P^1]
//   + ((binom(m-1,3)-m+1) y^2 - (4 binom(m,3) + sum_S (m_S-1)) y
//      + binom(m-1,3) - mu(1)) [pt].
// The constant term carries -mu(1): expanding the difference of the two
// degree-[pt] coefficients and using chi(1) = 0 forces that sign.
inline GradedProjClass hm_p3_closed(const Lattice& lat) {
    if (lat.n != 3)
        throw DimensionError("hm_p3_closed requires an arrangement in P^3");
    const StrataTables tables = strata_tables(lat);
    const int m = lat.m;

    GradedProjClass r(3);
    PolyY edge_part;
    Integer sum_ms_minus_1 = 0;
    for (const auto& edge : tables.edges) {
        edge_part += PolyY::from_coeffs(
            {Rational(-binom(edge.multiplicity - 1, 2)), Rational(binom(edge.multiplicity, 2))});
        sum_ms_minus_1 += edge.multiplicity - 1;
    }
    r.set_coeff(1, edge_part);

    PolyY pt = PolyY::term(Rational(binom(m - 1, 3) - m + 1), 2);
    pt -= PolyY::term(Rational(4 * binom(m, 3) + sum_ms_minus_1), 1);
    pt += PolyY(Rational(binom(m - 1, 3) - lat.mu_origin));
    r.set_coeff(0, pt);
    return r;
}

} // namespace hmclass
