#pragma once

#include <string>
#include <vector>

#include "hmclass/lattice.hpp"
#include "hmclass/poly_y.hpp"
#include "hmclass/sigma_class.hpp"
#include "hmclass/spectrum.hpp"

namespace hmclass {

namespace detail {

inline int floor_exponent(int n, const Rational& alpha) {
    if (!(alpha > 0) || alpha > n)
        throw ExponentOutOfRange("spectrum exponent " + rational_str(alpha) +
                                 " outside (0, " + std::to_string(n) + "]");
    return static_cast<int>(to_int64(rational_floor(Rational(n) - alpha)));
}

// n * (-y)^{floor(n_ambient - alpha)}
inline PolyY spectral_term(int n_ambient, const Rational& alpha, std::int64_t mult) {
    int e = floor_exponent(n_ambient, alpha);
    Rational c(mult);
    if (e % 2 == 1) c = -c;
    return PolyY::term(c, static_cast<std::size_t>(e));
}

} // namespace detail

// Hodge spectrum of an ordinary m_P-fold point of a line arrangement,
// i.e. of x^{m_P} + y^{m_P}: the Thom-Sebastiani square of the
// one-variable power spectrum.
inline Spectrum p2_point_multiplicities(int m_P) {
    if (m_P < 2) throw Error("p2_point_multiplicities requires m_P >= 2");
    Spectrum one_var = ordinary_power_spectrum(static_cast<unsigned>(m_P));
    return spectrum_mul(one_var, one_var);
}

// T(P) weight for a point stratum in P^2: the factor (-1)^{q+n-1} is -1
// here (q = 0, n = 2).
inline PolyY p2_point_contribution(const Spectrum& sp) {
    PolyY out;
    for (const auto& [alpha, mult] : sp) out -= detail::spectral_term(2, alpha, mult);
    return out;
}

// M_y of a reduced line arrangement: one coefficient per singular point.
inline SigmaClass hm_p2(const Lattice& lat) {
    if (lat.n != 2) throw DimensionError("hm_p2 requires an arrangement in P^2");
    SigmaClass s(2);
    for (const auto& point : strata_tables(lat).points)
        s.set_top(point.flat_id, p2_point_contribution(p2_point_multiplicities(point.multiplicity)));
    return s;
}

// Sp_S(t) = -t ((t^{1/m_S}-t)/(1-t^{1/m_S}))^2 for an edge with m_S planes.
inline Spectrum p3_edge_spectrum(int m_S) {
    if (m_S < 2) throw Error("p3_edge_spectrum requires m_S >= 2");
    Spectrum one_var = ordinary_power_spectrum(static_cast<unsigned>(m_S));
    return spectrum_mul(spectrum_mul(one_var, one_var), Spectrum::monomial(1, -1));
}

// Sp_S^infinity(t): the edge meets the generic hyperplane at infinity in a
// point whose local model is w1^m + w2^{m_S} + w3^{m_S}.
inline Spectrum p3_edge_infinity_spectrum(int m_S, int m) {
    if (m_S < 2) throw Error("p3_edge_infinity_spectrum requires m_S >= 2");
    Spectrum one_var = ordinary_power_spectrum(static_cast<unsigned>(m_S));
    return spectrum_mul(spectrum_mul(one_var, one_var),
                        ordinary_power_spectrum(static_cast<unsigned>(m)));
}

// Spectral multiplicities of a dimension-0 flat P in P^3 with the edges
// through P carrying multiplicities `edge_mults`. Binomials follow the
// polynomial convention, so binom(m_P-k-1, 2) = 1 at k = m_P.
inline Spectrum p3_point_multiplicities(int m_P, const std::vector<int>& edge_mults) {
    if (m_P < 3) throw Error("p3_point_multiplicities requires m_P >= 3");
    Spectrum s;
    for (int k = 1; k <= m_P; ++k) {
        Integer n0 = binom(k - 1, 2);
        Integer n1 = Integer(k - 1) * (m_P - k - 1);
        Integer n2 = binom(m_P - k - 1, 2);
        for (int ms : edge_mults) {
            long long c = to_int64(rational_ceil(Rational(k * ms, m_P)));
            n0 -= binom(c - 1, 2);
            n1 -= Integer(c - 1) * (ms - c);
            n2 -= binom(ms - c, 2);
        }
        if (k == m_P) n2 -= 1;
        Rational base(k, m_P);
        s.add(base, to_int64(n0));
        s.add(base + 1, to_int64(n1));
        s.add(base + 2, to_int64(n2));
    }
    return s;
}

// l_{S,k} = sum_{P in Sbar} ceil(k(m_P/m_S - 1)) + ceil(k(1 - m/m_S))
inline long long l_coeff(int m_S, const std::vector<int>& point_mults, int m, long long k) {
    Integer acc = rational_ceil(Rational(k * (m_S - m), m_S));
    for (int mp : point_mults) acc += rational_ceil(Rational(k * (mp - m_S), m_S));
    return to_int64(acc);
}

// T(S) weight for a point stratum in P^3 ((-1)^{q+n-1} = +1 with q = 0,
// n = 3): sum_alpha n_alpha (-y)^{floor(3-alpha)}.
inline PolyY p3_point_contribution(const Spectrum& sp) {
    PolyY out;
    for (const auto& [alpha, mult] : sp) out += detail::spectral_term(3, alpha, mult);
    return out;
}

struct EdgeContribution {
    PolyY edge_poly; // coefficient of [Sbar]
    PolyY pt_poly;   // contribution to [pt]
};

// T(S) for a dimension-1 stratum:
//   sum_k n_{S,k/m_S} ([Sbar] + (l(y+1) - (y + #points)) [pt])
//                     (-y)^{floor(3-k/m_S)}.
// The rank-one piece attached to the exponent k/m_S carries monodromy
// eigenvalue e(-k/m_S), so its extension degree is l_{S,kbar} at the
// conjugate index kbar = -k mod m_S taken in [1, m_S]. (l_{S,k} is
// periodic in k with period m_S on lattice data, since the planes off the
// edge meet it in points with sum of (m_P - m_S) equal to m - m_S.)
// `point_mults` lists m_P over the lattice points on the edge.
inline EdgeContribution p3_edge_contribution(int m_S, const std::vector<int>& point_mults,
                                             int m) {
    EdgeContribution out;
    const PolyY points_count(Rational(static_cast<long long>(point_mults.size())));
    for (const auto& [alpha, mult] : p3_edge_spectrum(m_S)) {
        Rational k_exact = alpha * m_S;
        long long k = to_int64(numerator(k_exact)); // exponents of Sp_S are k/m_S
        long long rem = ((-k) % m_S + m_S) % m_S;
        long long k_conj = rem == 0 ? m_S : rem;
        PolyY weight = detail::spectral_term(3, alpha, mult);
        out.edge_poly += weight;
        PolyY bracket = PolyY::unit_power(1) * Rational(l_coeff(m_S, point_mults, m, k_conj));
        bracket -= PolyY::y() + points_count;
        out.pt_poly += weight * bracket;
    }
    return out;
}

// One singular stratum together with its Hodge spectrum and the
// multiplicity data the spectrum was computed from.
enum class StratumKind { edge, edge_at_infinity, point };

struct StratumSpec {
    int flat_id = 0;
    StratumKind kind = StratumKind::point;
    Spectrum spectrum;
    int local_mult = 0; // m_S for edges (and their infinity points), m_P for points
    int total_mult = 0; // m
};

// All strata of the n = 2 or n = 3 stratification with their spectra.
inline std::vector<StratumSpec> stratum_spectra(const Lattice& lat) {
    if (lat.n != 2 && lat.n != 3)
        throw DimensionError("stratum spectra are defined for P^2 and P^3 only");
    const StrataTables tables = strata_tables(lat);
    std::vector<StratumSpec> out;
    for (const auto& edge : tables.edges) {
        out.push_back({edge.flat_id, StratumKind::edge, p3_edge_spectrum(edge.multiplicity),
                       edge.multiplicity, lat.m});
        out.push_back({edge.flat_id, StratumKind::edge_at_infinity,
                       p3_edge_infinity_spectrum(edge.multiplicity, lat.m), edge.multiplicity,
                       lat.m});
    }
    for (const auto& point : tables.points) {
        Spectrum sp;
        if (lat.n == 2) {
            sp = p2_point_multiplicities(point.multiplicity);
        } else {
            std::vector<int> edge_mults;
            for (int ei : point.incident)
                edge_mults.push_back(tables.edges[static_cast<std::size_t>(ei)].multiplicity);
            sp = p3_point_multiplicities(point.multiplicity, edge_mults);
        }
        out.push_back({point.flat_id, StratumKind::point, std::move(sp), point.multiplicity,
                       lat.m});
    }
    return out;
}

// M_y of a reduced plane arrangement in P^3, assembled stratum by stratum:
// each edge contributes its [Sbar] coefficient plus [pt] corrections, the
// point at infinity of each edge contributes through Sp^infinity, and each
// dimension-0 flat contributes through its own spectrum.
inline SigmaClass hm_p3(const Lattice& lat) {
    if (lat.n != 3) throw DimensionError("hm_p3 requires an arrangement in P^3");
    const StrataTables tables = strata_tables(lat);
    SigmaClass s(3);
    PolyY pt;
    for (const auto& edge : tables.edges) {
        std::vector<int> point_mults;
        for (int pi : edge.incident)
            point_mults.push_back(tables.points[static_cast<std::size_t>(pi)].multiplicity);
        EdgeContribution c = p3_edge_contribution(edge.multiplicity, point_mults, lat.m);
        s.set_top(edge.flat_id, c.edge_poly);
        pt += c.pt_poly;
        pt += p3_point_contribution(p3_edge_infinity_spectrum(edge.multiplicity, lat.m));
    }
    for (const auto& point : tables.points) {
        std::vector<int> edge_mults;
        for (int ei : point.incident)
            edge_mults.push_back(tables.edges[static_cast<std::size_t>(ei)].multiplicity);
        pt += p3_point_contribution(p3_point_multiplicities(point.multiplicity, edge_mults));
    }
    s.set_lower(0, pt);
    return s;
}

} // namespace hmclass
