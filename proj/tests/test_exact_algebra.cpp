#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include <hmclass/poly_y.hpp>
#include <hmclass/rat_y.hpp>
#include <hmclass/spectrum.hpp>
#include <hmclass/trunc_series.hpp>

#include "oracles.hpp"

using namespace hmclass;

namespace {

PolyY poly(std::vector<long long> cs) {
    std::vector<Rational> r(cs.begin(), cs.end());
    return PolyY::from_coeffs(std::move(r));
}

PolyY random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long long> coef(-5, 5);
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& c : cs) c = coef(rng);
    return PolyY::from_coeffs(std::move(cs));
}

Spectrum random_spectrum(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> mult(-3, 3);
    Spectrum s;
    for (int i = nterms(rng); i > 0; --i) s.add(Rational(num(rng), den(rng)), mult(rng));
    return s;
}

} // namespace

TEST_CASE("poly_div_unit_power on pinned cases") {
    CHECK(poly_div_unit_power(PolyY::unit_power(2), 2) == PolyY(1));
    CHECK(poly_div_unit_power(PolyY(), 5) == PolyY());
    CHECK(poly_div_unit_power(poly({1, 0, -1}), 1) == poly({1, -1})); // (1-y^2)/(1+y)
    CHECK_THROWS_AS(poly_div_unit_power(poly({1, 0, 1}), 1), NotDivisible);
    CHECK_THROWS_AS(poly_div_unit_power(poly({3}), 1), NotDivisible);
}

TEST_CASE("poly_div_unit_power round-trips random multiples") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        PolyY p = random_poly(rng);
        unsigned k = rng() % 5;
        CHECK(poly_div_unit_power(p * PolyY::unit_power(k), k) == p);
    }
}

TEST_CASE("series_mul matches hand and oracle values") {
    TruncSeries one_plus(2), one_minus(2);
    one_plus.set_coeff(0, 1);
    one_plus.set_coeff(1, 1);
    one_minus.set_coeff(0, 1);
    one_minus.set_coeff(1, -1);
    TruncSeries prod = series_mul(one_plus, one_minus);
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);

    // log1p(x)^2 at order 3 is x^2 - x^3 + ...
    TruncSeries sq = series_mul(log1p_series(3), log1p_series(3));
    CHECK(sq.coeff(0) == 0);
    CHECK(sq.coeff(1) == 0);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == -1);

    // against the naive convolution oracle
    std::vector<Rational> log_coeffs = {0, 1, Rational(-1, 2), Rational(1, 3)};
    auto expect = oracles::naive_truncated_convolution(log_coeffs, log_coeffs, 3);
    for (std::size_t i = 0; i <= 3; ++i) CHECK(sq.coeff(i) == expect[i]);

    TruncSeries zeros(3);
    TruncSeries annihilated = series_mul(log1p_series(3), zeros);
    CHECK(annihilated == zeros);

    CHECK_THROWS_AS(series_mul(log1p_series(3), log1p_series(4)), OrderMismatch);
}

TEST_CASE("log1p_series coefficients") {
    CHECK(log1p_series(1) == TruncSeries::monomial(1, 1, 1));
    TruncSeries l3 = log1p_series(3);
    CHECK(l3.coeff(0) == 0);
    CHECK(l3.coeff(1) == 1);
    CHECK(l3.coeff(2) == Rational(-1, 2));
    CHECK(l3.coeff(3) == Rational(1, 3));
    CHECK(log1p_series(0) == TruncSeries(0));
}

TEST_CASE("exp and log1p are mutually inverse") {
    for (std::size_t order = 1; order <= 8; ++order) {
        TruncSeries exp_minus_1 = exp_series(order) - TruncSeries::constant(order, 1);
        CHECK(log1p_series(order).compose(exp_minus_1) == TruncSeries::monomial(order, 1, 1));
        TruncSeries composed = exp_series(order).compose(log1p_series(order));
        CHECK(composed == TruncSeries::monomial(order, 1, 1) + TruncSeries::constant(order, 1));
    }
}

TEST_CASE("reciprocal inverts unit series") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> coef(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        TruncSeries s(5);
        long long c0 = coef(rng);
        s.set_coeff(0, c0 == 0 ? Rational(1) : Rational(c0));
        for (std::size_t i = 1; i <= 5; ++i) s.set_coeff(i, Rational(coef(rng), 3));
        CHECK(series_mul(s, s.reciprocal()) == TruncSeries::constant(5, 1));
    }
    CHECK_THROWS_AS(TruncSeries(3).reciprocal(), Error);
}

TEST_CASE("spectrum_mul on pinned cases") {
    // Sp(x^2) * Sp(y^2) = t^{1/2} * t^{1/2} = t
    Spectrum half = ordinary_power_spectrum(2);
    CHECK(spectrum_mul(half, half) == Spectrum::monomial(1, 1));

    CHECK(spectrum_mul(half, Spectrum()) == Spectrum());

    // (t^{1/3}+t^{2/3})^2 * (-t) = -t^{5/3} - 2t^2 - t^{7/3}
    Spectrum thirds = ordinary_power_spectrum(3);
    Spectrum triple = spectrum_mul(spectrum_mul(thirds, thirds), Spectrum::monomial(1, -1));
    Spectrum expected;
    expected.add(Rational(5, 3), -1);
    expected.add(2, -2);
    expected.add(Rational(7, 3), -1);
    CHECK(triple == expected);
}

TEST_CASE("spectrum_mul is commutative and associative") {
    std::mt19937 rng(20240902);
    for (int trial = 0; trial < 100; ++trial) {
        Spectrum a = random_spectrum(rng), b = random_spectrum(rng), c = random_spectrum(rng);
        CHECK(spectrum_mul(a, b) == spectrum_mul(b, a));
        CHECK(spectrum_mul(spectrum_mul(a, b), c) == spectrum_mul(a, spectrum_mul(b, c)));
    }
}

TEST_CASE("ordinary_power_spectrum") {
    CHECK(ordinary_power_spectrum(1).empty());
    CHECK(ordinary_power_spectrum(2) == Spectrum::monomial(Rational(1, 2), 1));
    Spectrum quarters = ordinary_power_spectrum(4);
    CHECK(quarters.size() == 3);
    CHECK(quarters.multiplicity(Rational(1, 4)) == 1);
    CHECK(quarters.multiplicity(Rational(1, 2)) == 1);
    CHECK(quarters.multiplicity(Rational(3, 4)) == 1);

    // total multiplicity m-1; the square has total (m-1)^2, the Milnor
    // number of an ordinary m-fold plane point
    for (unsigned m = 1; m <= 9; ++m) {
        Spectrum s = ordinary_power_spectrum(m);
        CHECK(s.total_multiplicity() == static_cast<std::int64_t>(m) - 1);
        CHECK(spectrum_mul(s, s).total_multiplicity() ==
              (static_cast<std::int64_t>(m) - 1) * (static_cast<std::int64_t>(m) - 1));
    }
}

TEST_CASE("RatY keeps canonical form and recovers polynomials") {
    RatY a(poly({1, 1}) * PolyY::unit_power(2), 2); // (1+y)^3/(1+y)^2
    CHECK(a.unit_pow() == 0);
    CHECK(a.num() == poly({1, 1}));
    CHECK(a.to_poly() == poly({1, 1}));

    RatY b(poly({1, 0, 1}), 1); // (1+y^2)/(1+y) is already canonical
    CHECK(b.unit_pow() == 1);
    CHECK_THROWS_AS(b.to_poly(), NotDivisible);

    // (p/(1+y) + q/(1+y)^2) * (1+y)^2 == p(1+y) + q
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        PolyY p = random_poly(rng), q = random_poly(rng);
        RatY sum = RatY(p, 1) + RatY(q, 2);
        RatY lifted = sum * RatY(PolyY::unit_power(2));
        CHECK(lifted.to_poly() == p * PolyY::unit_power(1) + q);
        CHECK((RatY(p, 3) * RatY(q, 2)).unit_pow() <= 5);
    }

    CHECK(RatY(PolyY(), 4).is_zero());
    CHECK(RatY(PolyY(), 4).unit_pow() == 0);
}

TEST_CASE("PolyY rendering is ascending") {
    CHECK(poly({-1, 6}).str() == "-1+6y");
    CHECK(poly({1, -21, -2}).str() == "1-21y-2y^2");
    CHECK((PolyY(Rational(3, 2)) - PolyY::term(Rational(3, 2), 1)).str() == "3/2-3/2y");
    CHECK(PolyY().str() == "0");
    CHECK(PolyY::y().str() == "y");
    CHECK((-PolyY::y()).str() == "-y");
}
