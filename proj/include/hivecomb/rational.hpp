#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace hivecomb {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// "p/q" for non-integers, "p" for integers.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Precondition: is_integer(q) and the value fits.
std::int64_t to_int64(const Rational& q);

}  // namespace hivecomb
