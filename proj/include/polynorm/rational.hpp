#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

#include "polynorm/errors.hpp"

namespace polynorm {

/// Exact rational scalar. Always in lowest terms with positive denominator
/// (GMP canonicalizes after every operation); arithmetic never rounds.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline Integer numerator_of(const Rational& q) { return Integer(numerator(q)); }
inline Integer denominator_of(const Rational& q) { return Integer(denominator(q)); }

inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Parses "p/q" or "p". Throws InputError on anything else (including q = 0).
Rational parse_rational(const std::string& text);

/// Renders in lowest terms as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

}  // namespace polynorm
