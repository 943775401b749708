#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hmclass/arrangement.hpp"
#include "hmclass/rational.hpp"

namespace hmclass {

namespace detail {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form over Q; zero rows dropped. RREF is unique per
// row space, so it doubles as the dedup key for flats.
inline Mat rref(Mat rows) {
    const std::size_t width = rows.empty() ? 0 : rows[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < width && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        Rational lead = rows[r][col];
        for (auto& x : rows[r]) x /= lead;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j == r || rows[j][col] == 0) continue;
            Rational f = rows[j][col];
            for (std::size_t k = 0; k < width; ++k) rows[j][k] -= f * rows[r][k];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

inline bool in_row_span(const Mat& basis, Vec v) {
    for (const auto& row : basis) {
        std::size_t pivot = 0;
        while (pivot < row.size() && row[pivot] == 0) ++pivot;
        if (pivot == row.size() || v[pivot] == 0) continue;
        Rational f = v[pivot];
        for (std::size_t k = 0; k < v.size(); ++k) v[k] -= f * row[k];
    }
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace detail

// A flat of the cone arrangement in A^{n+1}: the linear span of the forms
// that vanish on it, in reduced row echelon form.
struct Flat {
    int id = 0;
    std::vector<std::vector<Rational>> span_basis;
    int rank = 0;       // rows of span_basis
    int affine_dim = 0; // n+1-rank, dimension of the subspace of A^{n+1}
    std::vector<int> hyperplanes; // I(S) = {i | S inside H_i}, ascending
    int multiplicity = 0;         // m_S = |I(S)|
    Integer mobius = 0;
    std::string label;

    int proj_dim() const { return affine_dim - 1; }
};

struct Lattice {
    Arrangement arrangement;
    int n = 0;
    int m = 0;
    std::vector<Flat> flats;       // ambient first, then by (rank, multiplicity, I(S))
    std::vector<Integer> charpoly; // chi of the cone, ascending in x, degree n+1
    bool essential = false;
    Integer mu_origin = 0; // mu(1) = chi(0)

    const Flat& flat(int id) const { return flats[static_cast<std::size_t>(id)]; }
};

inline constexpr std::size_t kDefaultMaxFlats = 100000;

// Enumerate all flats of the cone of `arr` by breadth-first closure of the
// hyperplanes under intersection, then fill in Moebius values top-down and
// the characteristic polynomial chi(x) = sum_z mu(z) x^{dim z}.
inline Lattice build_lattice(const Arrangement& arr, std::size_t max_flats = kDefaultMaxFlats) {
    using detail::Mat;

    Lattice lat;
    lat.arrangement = arr;
    lat.n = arr.n;
    lat.m = arr.m();

    auto hyperplane_set = [&](const Mat& basis) {
        std::vector<int> idx;
        for (int i = 0; i < lat.m; ++i)
            if (detail::in_row_span(basis, arr.forms[static_cast<std::size_t>(i)]))
                idx.push_back(i);
        return idx;
    };

    std::map<Mat, int> seen;
    std::vector<Flat> flats;
    auto intern = [&](Mat basis) {
        auto it = seen.find(basis);
        if (it != seen.end()) return it->second;
        if (flats.size() >= max_flats)
            throw LatticeLimitExceeded("flat count exceeds cap of " + std::to_string(max_flats));
        Flat f;
        f.rank = static_cast<int>(basis.size());
        f.affine_dim = arr.n + 1 - f.rank;
        f.hyperplanes = hyperplane_set(basis);
        f.multiplicity = static_cast<int>(f.hyperplanes.size());
        f.span_basis = std::move(basis);
        int idx = static_cast<int>(flats.size());
        seen.emplace(f.span_basis, idx);
        flats.push_back(std::move(f));
        return idx;
    };

    intern({}); // ambient space
    std::vector<int> queue;
    for (const auto& form : arr.forms) queue.push_back(intern(detail::rref({form})));
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int cur = queue[head];
        for (int i = 0; i < lat.m; ++i) {
            const Flat& f = flats[static_cast<std::size_t>(cur)]; // flats may reallocate below
            if (std::binary_search(f.hyperplanes.begin(), f.hyperplanes.end(), i)) continue;
            Mat extended = f.span_basis;
            extended.push_back(arr.forms[static_cast<std::size_t>(i)]);
            std::size_t before = flats.size();
            int idx = intern(detail::rref(std::move(extended)));
            if (flats.size() > before) queue.push_back(idx);
        }
    }

    std::sort(flats.begin(), flats.end(), [](const Flat& a, const Flat& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.multiplicity != b.multiplicity) return a.multiplicity < b.multiplicity;
        return a.hyperplanes < b.hyperplanes;
    });

    // mu(ambient) = 1; mu(z) = -sum over flats strictly containing z.
    // Containment of flats is containment of their I(S) index sets.
    for (std::size_t i = 0; i < flats.size(); ++i) {
        Flat& z = flats[i];
        z.id = static_cast<int>(i);
        if (z.rank == 0) {
            z.mobius = 1;
            continue;
        }
        Integer acc = 0;
        for (std::size_t j = 0; j < i; ++j) {
            const Flat& w = flats[j];
            if (w.rank >= z.rank) continue;
            if (std::includes(z.hyperplanes.begin(), z.hyperplanes.end(), w.hyperplanes.begin(),
                              w.hyperplanes.end()))
                acc += w.mobius;
        }
        z.mobius = -acc;
    }

    lat.charpoly.assign(static_cast<std::size_t>(arr.n) + 2, Integer(0));
    for (const auto& f : flats) lat.charpoly[static_cast<std::size_t>(f.affine_dim)] += f.mobius;

    lat.essential = std::any_of(flats.begin(), flats.end(),
                                [](const Flat& f) { return f.affine_dim == 0; });
    lat.mu_origin = lat.charpoly[0];

    int edge_count = 0, point_count = 0;
    for (auto& f : flats) {
        if (f.rank == 0)
            f.label = "A";
        else if (f.rank == 1)
            f.label = "H" + std::to_string(f.hyperplanes.front() + 1);
        else if (f.proj_dim() == 1 && f.multiplicity >= 2)
            f.label = "S" + std::to_string(++edge_count);
        else if (f.proj_dim() == 0 && f.multiplicity >= 2)
            f.label = "P" + std::to_string(++point_count);
        else if (f.affine_dim == 0)
            f.label = "O";
        else
            f.label = "F" + std::to_string(f.id);
    }

    lat.flats = std::move(flats);
    return lat;
}

// Singular strata of the arrangement, read off the lattice: the flats of
// projective dimension 1 and 0 that lie in at least two hyperplanes.
struct StratumEntry {
    int flat_id = 0;
    int multiplicity = 0;
    std::string label;
    std::vector<int> incident; // edges: indices into points[]; points: indices into edges[]
};

struct StrataTables {
    int n = 0;
    int m = 0;
    std::vector<StratumEntry> edges;  // empty for n = 2
    std::vector<StratumEntry> points;

    // m_{P,S} = m_P - m_S for a point P on the edge S
    int rel_mult(const StratumEntry& point, const StratumEntry& edge) const {
        return point.multiplicity - edge.multiplicity;
    }
    // m_{infinity,S} = -(m - m_S)
    int infinity_mult(const StratumEntry& edge) const { return -(m - edge.multiplicity); }
};

inline StrataTables strata_tables(const Lattice& lat) {
    StrataTables t;
    t.n = lat.n;
    t.m = lat.m;
    for (const auto& f : lat.flats) {
        if (f.multiplicity < 2) continue;
        if (f.proj_dim() == 1)
            t.edges.push_back({f.id, f.multiplicity, f.label, {}});
        else if (f.proj_dim() == 0)
            t.points.push_back({f.id, f.multiplicity, f.label, {}});
    }
    for (std::size_t p = 0; p < t.points.size(); ++p) {
        const auto& pf = lat.flat(t.points[p].flat_id).hyperplanes;
        for (std::size_t e = 0; e < t.edges.size(); ++e) {
            const auto& ef = lat.flat(t.edges[e].flat_id).hyperplanes;
            if (std::includes(pf.begin(), pf.end(), ef.begin(), ef.end())) {
                t.points[p].incident.push_back(static_cast<int>(e));
                t.edges[e].incident.push_back(static_cast<int>(p));
            }
        }
    }
    return t;
}

} // namespace hmclass
