#pragma once

#include <gmpxx.h>

#include <string>

#include "hankel/errors.hpp"

namespace hankel {

/// Exact rational scalar. All symbolic computation and every closed-form
/// bound that is rational in alpha run on this type; doubles appear only at
/// the numeric evaluation boundary.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

/// "97/320", or plain "3" for integers.
inline std::string to_fraction_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "3", "-1/2", "0.25", "-.5". Decimal strings convert exactly
/// (digits over a power of ten), so CLI alphas stay exact rationals.
Rational parse_rational(const std::string& text);

inline Rational parse_rational_impl(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw ConfigError("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rational q(s);
        q.canonicalize();
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q(s);
        q.canonicalize();
        return q;
    }
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_len = s.size() - dot - 1;
    if (digits == "" || digits == "-" || digits == "+") throw ConfigError("bad rational literal: " + text);
    std::string den = "1";
    den.append(frac_len, '0');
    Rational q(digits + "/" + den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& text) try {
    return parse_rational_impl(text);
} catch (const std::invalid_argument&) {
    throw ConfigError("bad rational literal: " + text);
}

}  // namespace hankel
