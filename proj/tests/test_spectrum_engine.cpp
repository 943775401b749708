#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include <hmclass/ktheory.hpp>
#include <hmclass/spectrum_engine.hpp>

#include "corpus_gen.hpp"
#include "oracles.hpp"

using namespace hmclass;

namespace {

PolyY poly(std::vector<Rational> cs) { return PolyY::from_coeffs(std::move(cs)); }

Lattice xyz_xy_lattice() {
    return build_lattice(parse_arrangement(
        "dim 3\nhyperplane 1 0 0 0\nhyperplane 0 1 0 0\nhyperplane 0 0 1 0\nhyperplane 1 1 0 0\n"));
}

} // namespace

TEST_CASE("p2_point_multiplicities matches the closed formula") {
    CHECK(p2_point_multiplicities(2) == Spectrum::monomial(1, 1));

    Spectrum triple = p2_point_multiplicities(3);
    Spectrum expected;
    expected.add(Rational(2, 3), 1);
    expected.add(1, 2);
    expected.add(Rational(4, 3), 1);
    CHECK(triple == expected);

    for (int m = 2; m <= 12; ++m) {
        INFO("m_P=" << m);
        Spectrum s = p2_point_multiplicities(m);
        CHECK(s == oracles::p2_point_spectrum_formula(m));
        CHECK(s.total_multiplicity() == static_cast<std::int64_t>(m - 1) * (m - 1));
        // the two halves of the spectrum count pairs
        Integer low = 0, high = 0;
        for (const auto& [alpha, n] : s) (alpha <= 1 ? low : high) += n;
        CHECK(low == binom(m, 2));
        CHECK(high == binom(m - 1, 2));
    }
}

TEST_CASE("hm_p2 assigns the binomial coefficients") {
    Lattice pencil3 = build_lattice(corpus::p2_pencil(3)); // one triple point
    SigmaClass s3 = hm_p2(pencil3);
    REQUIRE(s3.top_components().size() == 1);
    CHECK(s3.top_components().begin()->second == poly({-1, 3})); // 3y - 1

    Lattice generic = build_lattice(corpus::p2_generic(3)); // three double points
    SigmaClass sg = hm_p2(generic);
    for (const auto& [id, p] : sg.top_components()) CHECK(p == PolyY::y());

    for (const auto& [name, arr] : corpus::p2_corpus()) {
        INFO(name);
        Lattice lat = build_lattice(arr);
        SigmaClass s = hm_p2(lat);
        for (const auto& [id, p] : s.top_components()) {
            int m_P = lat.flat(id).multiplicity;
            CHECK(p == poly({Rational(-binom(m_P - 1, 2)), Rational(binom(m_P, 2))}));
            CHECK(p.eval(-1) == -Rational(m_P - 1) * (m_P - 1)); // Milnor number
        }
    }

    CHECK_THROWS_AS(hm_p2(xyz_xy_lattice()), DimensionError);
}

TEST_CASE("p3_edge_spectrum pinned values") {
    CHECK(p3_edge_spectrum(2) == Spectrum::monomial(2, -1));

    Spectrum s3 = p3_edge_spectrum(3);
    Spectrum expected;
    expected.add(Rational(5, 3), -1);
    expected.add(2, -2);
    expected.add(Rational(7, 3), -1);
    CHECK(s3 == expected);

    for (int m = 2; m <= 9; ++m)
        CHECK(p3_edge_spectrum(m).total_multiplicity() ==
              -static_cast<std::int64_t>(m - 1) * (m - 1));
}

TEST_CASE("p3_edge_infinity_spectrum pinned values") {
    Spectrum s24 = p3_edge_infinity_spectrum(2, 4);
    Spectrum expected;
    expected.add(Rational(5, 4), 1);
    expected.add(Rational(3, 2), 1);
    expected.add(Rational(7, 4), 1);
    CHECK(s24 == expected);

    Spectrum s34 = p3_edge_infinity_spectrum(3, 4);
    CHECK(s34.size() == 9);
    CHECK(s34.begin()->first == Rational(11, 12));
    CHECK(s34.terms().rbegin()->first == Rational(25, 12));
    // (t^{1/3}+t^{2/3})^2 has a doubled middle term, inherited at 1 + j/4
    for (const auto& [alpha, n] : s34)
        CHECK(n == (denominator(alpha) == 4 || alpha == Rational(3, 2) ? 2 : 1));
    CHECK(s34.total_multiplicity() == 12);

    CHECK(p3_edge_infinity_spectrum(2, 1).empty());
}

TEST_CASE("p3_point_multiplicities pinned values") {
    // the quadruple point of xyz(x+y): Sp = 2t - 3t^2
    Spectrum quad = p3_point_multiplicities(4, {2, 2, 2, 3});
    Spectrum expected;
    expected.add(1, 2);
    expected.add(2, -3);
    CHECK(quad == expected);

    // a generic triple point
    Spectrum generic = p3_point_multiplicities(3, {2, 2, 2});
    Spectrum expected3;
    expected3.add(1, 1);
    expected3.add(2, -2);
    CHECK(generic == expected3);
}

TEST_CASE("p3_point_multiplicities stays inside (0,3)") {
    // the k = m_P term of the last formula carries -delta_{k,m_P}, which
    // cancels binom(-1,2) = 1 exactly; no exponent ever reaches 3
    for (const auto& [name, arr] : corpus::p3_corpus()) {
        INFO(name);
        StrataTables t = strata_tables(build_lattice(arr));
        for (const auto& p : t.points) {
            std::vector<int> ems;
            for (int ei : p.incident) ems.push_back(t.edges[static_cast<std::size_t>(ei)].multiplicity);
            for (const auto& [alpha, n] : p3_point_multiplicities(p.multiplicity, ems)) {
                CHECK(alpha > 0);
                CHECK(alpha < 3);
            }
        }
    }
}

TEST_CASE("l_coeff on the xyz(x+y) edges") {
    // doubles: one quadruple point on the edge, m = 4
    for (long long k = 1; k <= 6; ++k) CHECK(l_coeff(2, {4}, 4, k) == 0);
    // the triple edge: 0 when 3 | k, otherwise 1
    for (long long k = 1; k <= 9; ++k) CHECK(l_coeff(3, {4}, 4, k) == (k % 3 == 0 ? 0 : 1));
    // no points: only the infinity term remains
    for (long long k = 1; k <= 4; ++k) CHECK(l_coeff(2, {}, 4, k) == -k);
}

TEST_CASE("p3_edge_contribution on the xyz(x+y) edges") {
    EdgeContribution dbl = p3_edge_contribution(2, {4}, 4);
    CHECK(dbl.edge_poly == PolyY::y());
    CHECK(dbl.pt_poly == poly({0, -1, -1})); // -y^2 - y

    EdgeContribution tpl = p3_edge_contribution(3, {4}, 4);
    CHECK(tpl.edge_poly == poly({-1, 3}));
    CHECK(tpl.pt_poly == poly({0, -2, -2})); // only the k=6 term survives
}

TEST_CASE("edge coefficient matches the binomial closed form") {
    for (int m_S = 2; m_S <= 12; ++m_S) {
        INFO("m_S=" << m_S);
        EdgeContribution c = p3_edge_contribution(m_S, {}, m_S); // a pencil of planes
        CHECK(c.edge_poly == poly({Rational(-binom(m_S - 1, 2)), Rational(binom(m_S, 2))}));
        CHECK(c.edge_poly.eval(-1) == -Rational(m_S - 1) * (m_S - 1));
    }
}

TEST_CASE("p3_point_contribution weights by floor(3 - alpha)") {
    Spectrum quad_point;
    quad_point.add(1, 2);
    quad_point.add(2, -3);
    CHECK(p3_point_contribution(quad_point) == poly({0, 3, 2})); // 2y^2 + 3y

    CHECK(p3_point_contribution(p3_edge_infinity_spectrum(2, 4)) == poly({0, -3}));
    CHECK(p3_point_contribution(p3_edge_infinity_spectrum(3, 4)) == poly({1, -10, 1}));

    CHECK_THROWS_AS(p3_point_contribution(Spectrum::monomial(Rational(7, 2), 1)),
                    ExponentOutOfRange);
    CHECK_THROWS_AS(p3_point_contribution(Spectrum::monomial(0, 1)), ExponentOutOfRange);
    CHECK_THROWS_AS(p3_point_contribution(Spectrum::monomial(-1, 1)), ExponentOutOfRange);
}

TEST_CASE("hm_p3 on xyz(x+y) gives the expected class") {
    Lattice lat = xyz_xy_lattice();
    SigmaClass s = hm_p3(lat);
    std::map<std::string, PolyY> by_label;
    for (const auto& [id, p] : s.top_components()) by_label[lat.flat(id).label] = p;
    CHECK(by_label["S1"] == PolyY::y());
    CHECK(by_label["S2"] == PolyY::y());
    CHECK(by_label["S3"] == PolyY::y());
    CHECK(by_label["S4"] == poly({-1, 3}));
    CHECK(s.lower(0) == poly({1, -21, -2}));
}

TEST_CASE("hm_p3 degenerate cases") {
    Lattice two = build_lattice(parse_arrangement("dim 3\nhyperplane 1 0 0 0\nhyperplane 0 1 0 0\n"));
    SigmaClass s = hm_p3(two);
    REQUIRE(s.top_components().size() == 1);
    CHECK(s.top_components().begin()->second == PolyY::y());
    CHECK(s.lower(0) == poly({0, -1, -1}));

    CHECK(hm_p3(build_lattice(parse_arrangement("dim 3\nhyperplane 1 0 0 0\n"))).is_zero());
    CHECK_THROWS_AS(hm_p3(build_lattice(corpus::p2_boolean())), DimensionError);
}

TEST_CASE("the two algorithms agree on the whole corpus") {
    for (const auto& [name, arr] : corpus::p2_corpus()) {
        INFO(name);
        Lattice lat = build_lattice(arr);
        CHECK(pushforward_sigma(hm_p2(lat)) == hm_pushforward(lat));
    }
    for (const auto& [name, arr] : corpus::p3_corpus()) {
        INFO(name);
        Lattice lat = build_lattice(arr);
        CHECK(pushforward_sigma(hm_p3(lat)) == hm_pushforward(lat));
    }
}

TEST_CASE("all stratum spectra live in (0, n] with integer multiplicities") {
    for (const auto& [name, arr] : corpus::p2_corpus()) {
        INFO(name);
        Lattice lat = build_lattice(arr);
        for (const auto& stratum : stratum_spectra(lat))
            for (const auto& [alpha, n] : stratum.spectrum) {
                CHECK(alpha > 0);
                CHECK(alpha <= 2);
                CHECK(n != 0);
            }
    }
    for (const auto& [name, arr] : corpus::p3_corpus()) {
        INFO(name);
        Lattice lat = build_lattice(arr);
        for (const auto& stratum : stratum_spectra(lat)) {
            for (const auto& [alpha, n] : stratum.spectrum) {
                CHECK(alpha > 0);
                CHECK(alpha <= 3);
            }
            if (stratum.kind == StratumKind::edge)
                CHECK(stratum.spectrum.total_multiplicity() ==
                      -static_cast<std::int64_t>(stratum.local_mult - 1) *
                          (stratum.local_mult - 1));
        }
    }
}

TEST_CASE("edge coefficients specialize to Milnor numbers at y = -1") {
    for (const auto& [name, arr] : corpus::p3_corpus()) {
        INFO(name);
        Lattice lat = build_lattice(arr);
        SigmaClass s = hm_p3(lat);
        for (const auto& [id, p] : s.top_components()) {
            int m_S = lat.flat(id).multiplicity;
            CHECK(p.eval(-1) == -Rational(m_S - 1) * (m_S - 1));
        }
    }
}
