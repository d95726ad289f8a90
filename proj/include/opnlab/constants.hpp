#pragma once

#include <cstddef>
#include <map>
#include <mutex>

#include "opnlab/interval.hpp"
#include "opnlab/rational.hpp"

namespace opnlab {

// Requested maximum enclosure width.
class Precision {
 public:
  // Throws InvalidArgument unless width > 0.
  explicit Precision(Rational target_width);

  // 10^-30.
  static Precision standard();

  const Rational& target_width() const { return width_; }
  Precision halved() const { return Precision(width_ / 2); }

 private:
  Rational width_;
};

// Upper limit on the number of series terms a single enclosure may use.
inline constexpr std::size_t kDefaultMaxSeriesTerms = 1'000'000;

// Enclosure of 2^(alpha+2) / (zeta(alpha+1) * (2^(alpha+1) - 1)), the lower
// bound that a product of truncated reciprocal sums over the primes of an
// odd perfect number must exceed. Always strictly inside (1, 2).
struct Threshold {
  unsigned alpha = 1;
  RatInterval enclosure{Rational(1), Rational(2)};
};

// zeta(s) for integer s >= 2: exact partial sum of k^-s for k < N plus an
// Euler-Maclaurin bracket of the tail. Throws InvalidArgument for s < 2 and
// PrecisionCapExceeded when N plus the correction count exceeds `max_terms`.
RatInterval zeta_enclosure(unsigned s, const Precision& precision,
                           std::size_t max_terms = kDefaultMaxSeriesTerms);

// pi = 16 atan(1/5) - 4 atan(1/239); each alternating series is bracketed by
// consecutive partial sums.
RatInterval pi_enclosure(const Precision& precision,
                         std::size_t max_terms = kDefaultMaxSeriesTerms);

// The exact rational 2^(alpha+2) / (2^(alpha+1) - 1).
Rational threshold_numerator(unsigned alpha);

// alpha == 1 goes through pi (16/pi^2); larger alpha through zeta(alpha+1).
Threshold threshold_enclosure(unsigned alpha, const Precision& precision,
                              std::size_t max_terms = kDefaultMaxSeriesTerms);

// Same constant, at most half the width, nested inside the input.
Threshold refine(const Threshold& t,
                 std::size_t max_terms = kDefaultMaxSeriesTerms);

// Compares q against the threshold constant, refining `t` in place until the
// answer is Below or Above. q is rational and the constant irrational, so
// the loop ends unless the term cap is reached.
Ordering3 compare_refining(const Rational& q, Threshold& t,
                           std::size_t max_terms = kDefaultMaxSeriesTerms);

// Memo of thresholds per alpha, shared across callers.
class ThresholdCache {
 public:
  explicit ThresholdCache(Precision precision = Precision::standard(),
                          std::size_t max_terms = kDefaultMaxSeriesTerms);

  Threshold get(unsigned alpha);

  // compare_refining against the cached entry; keeps any refinement.
  Ordering3 compare(const Rational& q, unsigned alpha);

 private:
  Threshold& entry_locked(unsigned alpha);

  Precision precision_;
  std::size_t max_terms_;
  std::mutex mutex_;
  std::map<unsigned, Threshold> entries_;
};

ThresholdCache& default_thresholds();

}  // namespace opnlab
