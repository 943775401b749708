#pragma once

#include <map>
#include <string>
#include <utility>

#include "hmclass/poly_y.hpp"

namespace hmclass {

// Element of H_*(P^n)[y] in the basis [P^d], d = 0..n: a map from homology
// dimension to its PolyY coefficient. Absent keys mean zero.
class GradedProjClass {
public:
    explicit GradedProjClass(int n) : n_(n) {}

    int n() const { return n_; }

    const PolyY& coeff(int d) const {
        static const PolyY zero;
        auto it = c_.find(d);
        return it == c_.end() ? zero : it->second;
    }

    void set_coeff(int d, PolyY p) {
        check_dim(d);
        if (p.is_zero())
            c_.erase(d);
        else
            c_[d] = std::move(p);
    }

    void add_coeff(int d, const PolyY& p) { set_coeff(d, coeff(d) + p); }

    const std::map<int, PolyY>& components() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    // Reindex into a larger ambient space: [P^d] maps to [P^d] under a
    // linear embedding P^n into P^{n'}.
    GradedProjClass embedded(int bigger_n) const {
        GradedProjClass r(bigger_n);
        for (const auto& [d, p] : c_) r.set_coeff(d, p);
        return r;
    }

    GradedProjClass& operator+=(const GradedProjClass& o) {
        for (const auto& [d, p] : o.c_) add_coeff(d, p);
        return *this;
    }
    GradedProjClass& operator-=(const GradedProjClass& o) {
        for (const auto& [d, p] : o.c_) add_coeff(d, -p);
        return *this;
    }
    friend GradedProjClass operator+(GradedProjClass a, const GradedProjClass& b) {
        return a += b;
    }
    friend GradedProjClass operator-(GradedProjClass a, const GradedProjClass& b) {
        return a -= b;
    }

    friend bool operator==(const GradedProjClass& a, const GradedProjClass& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const GradedProjClass& a, const GradedProjClass& b) {
        return !(a == b);
    }

    // "(...)[P^2] + (...)[P^1] + (...)[pt]", highest dimension first
    std::string str() const {
        if (c_.empty()) return "0";
        std::string out;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            if (!out.empty()) out += " + ";
            out += "(" + it->second.str() + ")" +
                   (it->first == 0 ? std::string("[pt]")
                                   : "[P^" + std::to_string(it->first) + "]");
        }
        return out;
    }

private:
    int n_;
    std::map<int, PolyY> c_;

    void check_dim(int d) const {
        if (d < 0 || d > n_)
            throw Error("homology dimension " + std::to_string(d) + " out of range for P^" +
                        std::to_string(n_));
    }
};

} // namespace hmclass
