#pragma once

#include <map>
#include <string>
#include <utility>

#include "hmclass/lattice.hpp"
#include "hmclass/poly_y.hpp"
#include "hmclass/proj_class.hpp"

namespace hmclass {

// Element of H_*(Sigma)[y] for the singular locus Sigma of an arrangement
// in P^n. The homology has one generator [Sbar] per top-dimensional flat of
// Sigma (dimension n-2) and a single generator in each dimension 0..n-3.
// For n = 2 `lower` is empty; for n = 3 it holds only the [pt] slot.
class SigmaClass {
public:
    explicit SigmaClass(int n) : n_(n) {}

    int n() const { return n_; }

    const PolyY& top(int flat_id) const {
        static const PolyY zero;
        auto it = top_.find(flat_id);
        return it == top_.end() ? zero : it->second;
    }
    const PolyY& lower(int d) const {
        static const PolyY zero;
        auto it = lower_.find(d);
        return it == lower_.end() ? zero : it->second;
    }

    void set_top(int flat_id, PolyY p) {
        if (p.is_zero())
            top_.erase(flat_id);
        else
            top_[flat_id] = std::move(p);
    }
    void set_lower(int d, PolyY p) {
        if (d < 0 || d > n_ - 3) throw Error("lower slot out of range");
        if (p.is_zero())
            lower_.erase(d);
        else
            lower_[d] = std::move(p);
    }
    void add_lower(int d, const PolyY& p) { set_lower(d, lower(d) + p); }

    const std::map<int, PolyY>& top_components() const { return top_; }
    const std::map<int, PolyY>& lower_components() const { return lower_; }
    bool is_zero() const { return top_.empty() && lower_.empty(); }

    friend bool operator==(const SigmaClass& a, const SigmaClass& b) {
        return a.top_ == b.top_ && a.lower_ == b.lower_;
    }
    friend bool operator!=(const SigmaClass& a, const SigmaClass& b) { return !(a == b); }

    std::string str(const Lattice& lat) const {
        if (is_zero()) return "0";
        std::string out;
        for (const auto& [id, p] : top_) {
            if (!out.empty()) out += " + ";
            out += "(" + p.str() + ")[" + lat.flat(id).label + "]";
        }
        for (auto it = lower_.rbegin(); it != lower_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.str() + ")" +
                   (it->first == 0 ? std::string("[pt]")
                                   : "[P^" + std::to_string(it->first) + "]");
        }
        return out;
    }

private:
    int n_;
    std::map<int, PolyY> top_;   // flat id -> coefficient of [Sbar]
    std::map<int, PolyY> lower_; // homology dimension -> coefficient
};

// Push H_*(Sigma)[y] into H_*(P^n)[y]: every top flat is a linear subspace
// of dimension n-2 mapping to [P^{n-2}] with degree 1, and the lower
// generators map to the corresponding [P^d].
inline GradedProjClass pushforward_sigma(const SigmaClass& s) {
    GradedProjClass r(s.n());
    for (const auto& [id, p] : s.top_components()) r.add_coeff(s.n() - 2, p);
    for (const auto& [d, p] : s.lower_components()) r.add_coeff(d, p);
    return r;
}

} // namespace hmclass
