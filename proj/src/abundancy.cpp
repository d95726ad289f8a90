#include "opnlab/abundancy.hpp"

#include <algorithm>

#include "opnlab/errors.hpp"

namespace opnlab {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::Deficient: return "Deficient";
    case Classification::Perfect: return "Perfect";
    case Classification::Abundant: return "Abundant";
  }
  return "?";
}

Natural sigma(const Factorization& f) {
  Natural result = 1;
  for (const auto& [p, h] : f.factors()) {
    result *= (pow(p, h + 1) - 1) / (p - 1);
  }
  return result;
}

Rational sigma_minus_one(const Factorization& f) {
  Rational result(1);
  for (const auto& [p, h] : f.factors()) {
    // sum_{k<=h} p^-k = (p^(h+1) - 1) / ((p - 1) p^h)
    result *= Rational(pow(p, h + 1) - 1, (p - 1) * pow(p, h));
  }
  return result;
}

AbundancyReport abundancy_report(const Factorization& f) {
  AbundancyReport report{f.value(), sigma(f), sigma_minus_one(f)};
  const auto order = report.sigma_minus_one <=> Rational(2);
  report.classification = order < 0    ? Classification::Deficient
                          : order == 0 ? Classification::Perfect
                                       : Classification::Abundant;
  return report;
}

Rational truncated_sum(const Natural& p, unsigned alpha) {
  return Rational(pow(p, alpha + 1) - 1, (p - 1) * pow(p, alpha));
}

Rational truncated_product(std::span<const Natural> primes, unsigned alpha) {
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  std::vector<Natural> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("truncated_product needs distinct primes");
  }
  Rational result(1);
  for (const Natural& p : sorted) {
    if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not prime");
    result *= truncated_sum(p, alpha);
  }
  return result;
}

bool geometric_split_check(const Natural& p, unsigned h, unsigned alpha) {
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  const unsigned block = alpha + 1;
  const unsigned blocks = h / block;
  const unsigned top = block * blocks + alpha;

  const Rational inv_p = Rational(1) / Rational(p);
  Rational lhs;
  Rational power(1);
  for (unsigned k = 0; k <= top; ++k) {
    lhs += power;
    power *= inv_p;
  }

  Rational head;
  power = Rational(1);
  for (unsigned i = 0; i <= alpha; ++i) {
    head += power;
    power *= inv_p;
  }
  const Rational step = pow(inv_p, block);
  Rational tail;
  power = Rational(1);
  for (unsigned j = 0; j <= blocks; ++j) {
    tail += power;
    power *= step;
  }
  return lhs == head * tail && top >= h;
}

}  // namespace opnlab
