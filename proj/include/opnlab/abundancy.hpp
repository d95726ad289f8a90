#pragma once

#include <span>

#include "opnlab/primes.hpp"
#include "opnlab/rational.hpp"

namespace opnlab {

enum class Classification { Deficient, Perfect, Abundant };

const char* to_string(Classification c);

struct AbundancyReport {
  Natural n;
  Natural sigma;
  Rational sigma_minus_one;
  Classification classification = Classification::Deficient;
};

// Sum of divisors, prod (p^(h+1) - 1) / (p - 1).
Natural sigma(const Factorization& f);

// Sum of reciprocals of divisors, prod sum_{k<=h} p^-k; equals sigma(n)/n.
Rational sigma_minus_one(const Factorization& f);

AbundancyReport abundancy_report(const Factorization& f);

// sum_{i=0}^{alpha} p^-i.
Rational truncated_sum(const Natural& p, unsigned alpha);

// prod over `primes` of sum_{i=0}^{alpha} p^-i. The primes need not be
// sorted but must be distinct primes; alpha >= 1. Throws InvalidArgument.
Rational truncated_product(std::span<const Natural> primes, unsigned alpha);

// Checks, exactly, that the reciprocal sum up to (alpha+1)*floor(h/(alpha+1))
// + alpha factors as (sum_{i<=alpha} p^-i) * (sum_{j<=floor(h/(alpha+1))}
// p^-(j(alpha+1))) and that this exponent reaches h.
bool geometric_split_check(const Natural& p, unsigned h, unsigned alpha);

}  // namespace opnlab
