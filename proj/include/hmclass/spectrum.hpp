#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "hmclass/rational.hpp"

namespace hmclass {

// Fractional Laurent polynomial sum_alpha n_alpha * t^alpha: a finite map
// from exact rational exponents to integer multiplicities. Terms with zero
// multiplicity are never stored.
class Spectrum {
public:
    using Terms = std::map<Rational, std::int64_t>;

    Spectrum() = default;

    static Spectrum monomial(const Rational& alpha, std::int64_t mult) {
        Spectrum s;
        s.add(alpha, mult);
        return s;
    }

    void add(const Rational& alpha, std::int64_t mult) {
        if (mult == 0) return;
        auto [it, inserted] = t_.emplace(alpha, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) t_.erase(it);
        }
    }

    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }

    std::int64_t multiplicity(const Rational& alpha) const {
        auto it = t_.find(alpha);
        return it == t_.end() ? 0 : it->second;
    }

    std::int64_t total_multiplicity() const {
        std::int64_t total = 0;
        for (const auto& [alpha, n] : t_) total += n;
        return total;
    }

    const Terms& terms() const { return t_; }
    Terms::const_iterator begin() const { return t_.begin(); }
    Terms::const_iterator end() const { return t_.end(); }

    friend bool operator==(const Spectrum& a, const Spectrum& b) { return a.t_ == b.t_; }
    friend bool operator!=(const Spectrum& a, const Spectrum& b) { return !(a == b); }

    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [alpha, n] : t_) {
            if (!out.empty()) out += " + ";
            out += std::to_string(n) + "*t^(" + rational_str(alpha) + ")";
        }
        return out;
    }

private:
    Terms t_;
};

// Thom-Sebastiani convolution: exponents add, multiplicities multiply.
inline Spectrum spectrum_mul(const Spectrum& a, const Spectrum& b) {
    Spectrum r;
    for (const auto& [alpha, na] : a)
        for (const auto& [beta, nb] : b) r.add(alpha + beta, na * nb);
    return r;
}

// Spectrum of the one-variable power x^m at the origin:
// (t^{1/m}-t)/(1-t^{1/m}) = t^{1/m} + t^{2/m} + ... + t^{(m-1)/m}.
// Empty for m = 1 (a smooth point).
inline Spectrum ordinary_power_spectrum(unsigned m) {
    Spectrum s;
    for (unsigned k = 1; k < m; ++k) s.add(Rational(k, m), 1);
    return s;
}

} // namespace hmclass
