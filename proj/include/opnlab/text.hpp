#pragma once

#include <string>
#include <string_view>

#include "opnlab/primes.hpp"
#include "opnlab/rational.hpp"

namespace opnlab {

// Either a plain decimal integer (factorized here) or an explicit product
// "p^e*q*..." with `^e` optional for exponent 1. Whitespace is ignored and
// repeated bases are merged. Throws ParseError on malformed text and
// InvalidArgument when an explicit base is not prime.
Factorization parse_factorization(std::string_view text);

// Decimal width such as "1e-30", "0.001", "1/1000" or "5". Throws ParseError.
Rational parse_decimal(std::string_view text);

enum class Rounding { Down, Up, TowardZero };

// Long division of q to `digits` fractional digits.
std::string to_decimal(const Rational& q, unsigned digits,
                       Rounding rounding = Rounding::TowardZero);

// Smallest d with 10^-d <= width.
unsigned decimal_places_for(const Rational& width);

}  // namespace opnlab
