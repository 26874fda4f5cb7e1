#ifndef SIMPLAP_RATIONAL_HPP
#define SIMPLAP_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace simplap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) {
    return static_cast<double>(r);
}

/**
 * Parse an exact rational from a string.
 *
 * Accepted forms: "p/q" (integers, q != 0), plain integers ("-3"),
 * and decimal literals ("1.25"), which are read exactly as scaled
 * integers (1.25 -> 125/100).
 */
inline Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("malformed rational literal: " + text);
        BigInt p(num), q(den);
        if (q == 0)
            throw std::invalid_argument("zero denominator: " + text);
        return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        return Rational(BigInt(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
        throw std::invalid_argument("malformed decimal literal: " + text);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_len; ++i)
        scale *= 10;
    return Rational(BigInt(digits), scale);
}

/// Canonical text form: "p" when integral, otherwise "p/q".
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// FNV-1a over the canonical text form; used for instance digests in reports.
inline std::uint64_t rational_digest(std::uint64_t h, const Rational& r) {
    const std::string s = rational_to_string(r);
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace simplap

#endif  // SIMPLAP_RATIONAL_HPP
