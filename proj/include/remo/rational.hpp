#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace remo {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "p" or "p/q" with optional leading '-', q > 0. Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical "p/q" rendering; integers render as "p".
std::string to_string(const Rational& q);

Rational power(const Rational& base, int exponent);

// binom(k + 1, 2): the number of unordered pairs with repetition from k items.
inline long long pairs_with_repetition(long long k) { return k * (k + 1) / 2; }

}  // namespace remo
