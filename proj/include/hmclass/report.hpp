#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hmclass/hmclass.hpp"

namespace hmclass {

enum class Algorithm { none, ktheory, spectrum, both };
enum class CrosscheckStatus { match, mismatch, skipped };

struct Report {
    std::string file;
    Lattice lattice;
    StrataTables tables;
    std::optional<GradedProjClass> ktheory_class;
    std::optional<SigmaClass> spectrum_class;
    std::optional<GradedProjClass> spectrum_pushforward;
    CrosscheckStatus crosscheck = CrosscheckStatus::skipped;
    std::optional<GradedProjClass> crosscheck_diff;
};

inline Report make_report(std::string file, const Arrangement& arr, Algorithm alg,
                          std::size_t max_flats = kDefaultMaxFlats) {
    Report r;
    r.file = std::move(file);
    r.lattice = build_lattice(arr, max_flats);
    r.tables = strata_tables(r.lattice);
    const bool run_k = alg == Algorithm::ktheory || alg == Algorithm::both;
    const bool run_s = alg == Algorithm::spectrum || alg == Algorithm::both;
    if (run_k) r.ktheory_class = hm_pushforward(r.lattice);
    if (run_s) {
        r.spectrum_class = r.lattice.n == 2 ? hm_p2(r.lattice) : hm_p3(r.lattice);
        r.spectrum_pushforward = pushforward_sigma(*r.spectrum_class);
    }
    if (run_k && run_s) {
        if (*r.ktheory_class == *r.spectrum_pushforward) {
            r.crosscheck = CrosscheckStatus::match;
        } else {
            r.crosscheck = CrosscheckStatus::mismatch;
            r.crosscheck_diff = *r.ktheory_class - *r.spectrum_pushforward;
        }
    }
    return r;
}

namespace detail {

inline std::string int_poly_str(const std::vector<Integer>& coeffs, const std::string& var) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const Integer& c = coeffs[i];
        if (c == 0) continue;
        Integer mag = c < 0 ? Integer(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? "-" : "+";
        }
        if (i == 0 || mag != 1) out += mag.str();
        if (i >= 1) {
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace detail

// --- JSON rendering -------------------------------------------------------
//
// Canonical conventions, chosen so that parse(dump(r)) == r byte for byte:
// objects carry alphabetically sorted keys (nlohmann's default), rationals
// are [numerator, denominator] pairs, polynomials are ascending coefficient
// arrays, classes are objects keyed by basis element.

inline nlohmann::json json_rational(const Rational& q) {
    return nlohmann::json::array({to_int64(numerator(q)), to_int64(denominator(q))});
}

inline nlohmann::json json_poly(const PolyY& p) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : p.coeffs()) a.push_back(json_rational(c));
    return a;
}

inline nlohmann::json json_proj_class(const GradedProjClass& c) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [d, p] : c.components()) o["P^" + std::to_string(d)] = json_poly(p);
    return o;
}

inline nlohmann::json json_sigma_class(const SigmaClass& s, const Lattice& lat) {
    nlohmann::json o = nlohmann::json::object();
    for (const auto& [id, p] : s.top_components()) o[lat.flat(id).label] = json_poly(p);
    for (const auto& [d, p] : s.lower_components())
        o[d == 0 ? "pt" : "P^" + std::to_string(d)] = json_poly(p);
    return o;
}

inline nlohmann::json render_json(const Report& r) {
    nlohmann::json j;
    const Lattice& lat = r.lattice;

    j["input"] = {
        {"file", r.file},
        {"dim", lat.n},
        {"hyperplanes", lat.m},
        {"essential", lat.essential},
        {"flats", {{"total", lat.flats.size()},
                   {"edges", r.tables.edges.size()},
                   {"points", r.tables.points.size()}}},
    };

    nlohmann::json charpoly = nlohmann::json::array();
    for (const auto& c : lat.charpoly) charpoly.push_back(json_rational(Rational(c)));
    nlohmann::json flats = nlohmann::json::array();
    for (const auto& f : lat.flats) {
        nlohmann::json hyps = nlohmann::json::array();
        for (int h : f.hyperplanes) hyps.push_back(h + 1);
        flats.push_back({{"label", f.label},
                         {"dim", f.affine_dim},
                         {"multiplicity", f.multiplicity},
                         {"mobius", to_int64(f.mobius)},
                         {"hyperplanes", hyps}});
    }
    j["lattice"] = {{"charpoly", charpoly}, {"mu1", to_int64(lat.mu_origin)}, {"flats", flats}};

    if (r.ktheory_class) j["ktheory"] = {{"class", json_proj_class(*r.ktheory_class)}};
    if (r.spectrum_class)
        j["spectrum"] = {{"class", json_sigma_class(*r.spectrum_class, lat)},
                         {"pushforward", json_proj_class(*r.spectrum_pushforward)}};

    switch (r.crosscheck) {
    case CrosscheckStatus::match:
        j["crosscheck"] = {{"status", "match"}};
        break;
    case CrosscheckStatus::mismatch:
        j["crosscheck"] = {{"status", "mismatch"}, {"diff", json_proj_class(*r.crosscheck_diff)}};
        break;
    case CrosscheckStatus::skipped:
        j["crosscheck"] = {{"status", "skipped"}};
        break;
    }
    return j;
}

// --- text rendering --------------------------------------------------------

inline std::string render_lattice_table(const Lattice& lat) {
    std::string out = "label  dim  mult  mobius  hyperplanes\n";
    for (const auto& f : lat.flats) {
        std::string hyps;
        for (int h : f.hyperplanes) {
            if (!hyps.empty()) hyps += ",";
            hyps += std::to_string(h + 1);
        }
        if (hyps.empty()) hyps = "-";
        auto pad = [](std::string s, std::size_t w) {
            while (s.size() < w) s += ' ';
            return s;
        };
        out += pad(f.label, 7) + pad(std::to_string(f.affine_dim), 5) +
               pad(std::to_string(f.multiplicity), 6) + pad(f.mobius.str(), 8) + hyps + "\n";
    }
    return out;
}

inline std::string render_text(const Report& r, bool with_lattice_table = false) {
    const Lattice& lat = r.lattice;
    std::string out;
    out += "arrangement: " + r.file + "\n";
    out += "ambient: P^" + std::to_string(lat.n) + ", hyperplanes: " + std::to_string(lat.m) +
           ", essential: " + (lat.essential ? "yes" : "no") + "\n";
    out += "flats: " + std::to_string(lat.flats.size()) +
           " (edges: " + std::to_string(r.tables.edges.size()) +
           ", points: " + std::to_string(r.tables.points.size()) + ")\n";
    out += "charpoly: " + detail::int_poly_str(lat.charpoly, "x") + "\n";
    out += "mu(1) = " + lat.mu_origin.str() + "\n";
    if (with_lattice_table) out += "\n" + render_lattice_table(lat);
    if (!r.ktheory_class && !r.spectrum_class) return out;
    if (r.ktheory_class) out += "ktheory:              " + r.ktheory_class->str() + "\n";
    if (r.spectrum_class) {
        out += "spectrum:             " + r.spectrum_class->str(lat) + "\n";
        out += "spectrum pushforward: " + r.spectrum_pushforward->str() + "\n";
    }
    switch (r.crosscheck) {
    case CrosscheckStatus::match:
        out += "crosscheck: match\n";
        break;
    case CrosscheckStatus::mismatch:
        out += "crosscheck: MISMATCH, diff = " + r.crosscheck_diff->str() + "\n";
        break;
    case CrosscheckStatus::skipped:
        out += "crosscheck: skipped\n";
        break;
    }
    return out;
}

} // namespace hmclass
