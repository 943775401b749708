#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hmclass/rational.hpp"

namespace hmclass {

// A reduced hyperplane arrangement in P^n over Q. Each form is a row of
// n+1 rational coefficients (a0..an) defining {a0*x0 + ... + an*xn = 0},
// scaled so its first nonzero entry is 1.
struct Arrangement {
    int n = 0;
    std::vector<std::vector<Rational>> forms;

    int m() const { return static_cast<int>(forms.size()); }
};

namespace detail {

inline std::vector<Rational> canonical_form(std::vector<Rational> form, int lineno) {
    for (const auto& a : form) {
        if (a != 0) {
            Rational lead = a;
            for (auto& b : form) b /= lead;
            return form;
        }
    }
    throw ParseError("line " + std::to_string(lineno) + ": hyperplane form is identically zero");
}

} // namespace detail

// Input format: '#' starts a comment; first payload line is `dim <n>`;
// every other payload line is `hyperplane a0 a1 ... an` with rational a_i.
inline Arrangement parse_arrangement(std::string_view text) {
    Arrangement arr;
    bool have_dim = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue; // blank
        if (!have_dim) {
            if (keyword != "dim")
                throw ParseError("line " + std::to_string(lineno) + ": expected `dim <n>` first");
            long n = 0;
            std::string rest;
            if (!(ls >> n) || n < 1 || (ls >> rest))
                throw ParseError("line " + std::to_string(lineno) + ": malformed dimension");
            arr.n = static_cast<int>(n);
            have_dim = true;
            continue;
        }
        if (keyword != "hyperplane")
            throw ParseError("line " + std::to_string(lineno) + ": unknown keyword `" + keyword +
                             "`");
        std::vector<Rational> form;
        std::string tok;
        while (ls >> tok) {
            try {
                form.push_back(parse_rational(tok));
            } catch (const ParseError&) {
                throw ParseError("line " + std::to_string(lineno) + ": malformed rational `" +
                                 tok + "`");
            }
        }
        if (static_cast<int>(form.size()) != arr.n + 1)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(arr.n + 1) + " coefficients, got " +
                             std::to_string(form.size()));
        form = detail::canonical_form(std::move(form), lineno);
        for (std::size_t i = 0; i < arr.forms.size(); ++i)
            if (arr.forms[i] == form)
                throw NotReduced("hyperplane on line " + std::to_string(lineno) +
                                 " repeats hyperplane " + std::to_string(i + 1));
        arr.forms.push_back(std::move(form));
    }
    if (!have_dim) throw ParseError("missing `dim <n>` line");
    if (arr.forms.empty()) throw ParseError("arrangement has no hyperplanes");
    return arr;
}

} // namespace hmclass
