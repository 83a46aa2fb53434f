#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qalg/common.hpp"

namespace qalg {

/// Exact arbitrary-precision rational, kept in lowest terms with positive
/// denominator (both maintained by the backend).
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "num", "-num" or "num/den". Rejects floats and empty input.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ConfigError("empty rational literal");
    for (char c : text) {
        if (c == '.' || c == 'e' || c == 'E')
            throw ConfigError("rational literal must be exact (got '" + text + "')");
    }
    try {
        Rational r(text);
        return r;
    } catch (const std::exception&) {
        throw ConfigError("cannot parse rational literal '" + text + "'");
    }
}

/// "num/den", or just "num" when the denominator is one.
inline std::string format_rational(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace qalg
