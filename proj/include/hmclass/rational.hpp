#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "hmclass/errors.hpp"

namespace hmclass {

// Arbitrary-precision exact arithmetic. No floating point anywhere in this
// library: every class coefficient is a Rational in lowest terms with a
// positive denominator, which boost::multiprecision maintains for us.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_floor(const Rational& q) {
    Integer n = numerator(q);
    Integer d = denominator(q); // d > 0
    Integer t = n / d;          // truncates toward zero
    if (t * d > n) --t;
    return t;
}

inline Integer rational_ceil(const Rational& q) { return -rational_floor(-q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

// Binomial coefficient in the polynomial convention n(n-1)...(n-k+1)/k!,
// defined for negative n as well (e.g. binom(-1,2) = 1). Agrees with the
// combinatorial value for n >= 0.
inline Integer binom(long long n, int k) {
    if (k < 0) return 0;
    Integer num = 1;
    Integer den = 1;
    for (int t = 0; t < k; ++t) {
        num *= Integer(n) - t;
        den *= t + 1;
    }
    return num / den; // exact: k consecutive integers are divisible by k!
}

inline std::int64_t to_int64(const Integer& v) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi)
        throw Error("integer does not fit in 64 bits: " + v.str());
    return v.convert_to<std::int64_t>();
}

// Accepts "p" or "p/q" with optional leading sign on p; q must be positive.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw ParseError("malformed rational '" + std::string(s) + "'"); };
    std::size_t pos = 0;
    auto digits = [&](bool sign_ok) {
        std::size_t start = pos;
        if (sign_ok && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t first_digit = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == first_digit) fail();
        return std::string(s.substr(start, pos - start));
    };
    std::string num = digits(true);
    std::string den = "1";
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        den = digits(false);
    }
    if (pos != s.size()) fail();
    Integer d(den);
    if (d == 0) fail();
    return Rational(Integer(num), d);
}

inline std::string rational_str(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

} // namespace hmclass
