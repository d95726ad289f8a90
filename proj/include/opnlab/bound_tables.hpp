#pragma once

#include <cstdint>
#include <vector>

#include "opnlab/constants.hpp"
#include "opnlab/primes.hpp"
#include "opnlab/rational.hpp"

namespace opnlab {

// Window product for the k-th smallest prime factor:
//   prefix(k) * prod_{j=r}^{r+m-k} sum_{i=0}^{alpha} p_j^-i
// where prefix(k) uses the k-1 smallest odd primes.
struct RhoParams {
  unsigned k = 1;
  unsigned m = 9;
  PrimeIndex r{2};
  unsigned alpha = 1;
};

struct BoundTableRow {
  unsigned m = 0;
  std::uint64_t p_I1 = 0;
  std::uint64_t p_I2 = 0;
  std::uint64_t p_I3 = 0;
  std::uint64_t perisastri = 0;

  friend bool operator==(const BoundTableRow&, const BoundTableRow&) = default;
};

// prod over the k-1 smallest odd primes of sum_{i<=alpha} p^-i, for any
// k >= 1. Used both as the prefix of rho and as its limit r -> infinity.
Rational window_prefix(unsigned k, unsigned alpha = 1);

// Throws InvalidArgument unless 1 <= k <= m and alpha >= 1.
Rational rho(const RhoParams& params, PrimeTable& primes);

// Limit of rho as r grows; only k in {1, 2, 3} (InvalidArgument otherwise).
Rational rho_limit(unsigned k, unsigned alpha = 1);

struct SearchOptions {
  // Smallest m accepted without override.
  unsigned min_m = 9;
};

// Smallest r >= 2 with rho(k, m, r, alpha) certified below the threshold.
// InvalidArgument when k is outside {1, 2, 3}, m is below options.min_m, or
// the prefix does not sit below theta (then no such r exists).
PrimeIndex find_I(unsigned k, unsigned m, unsigned alpha, Threshold& theta,
                  PrimeTable& primes, SearchOptions options = {});

// floor(2m/3 + 3).
std::uint64_t perisastri_bound(unsigned m);

// One row per m in [m_min, m_max]. With threads > 1 rows are computed
// concurrently; the result is identical to the sequential run.
std::vector<BoundTableRow> generate_table(unsigned m_min, unsigned m_max,
                                          unsigned alpha, PrimeTable& primes,
                                          ThresholdCache& thresholds,
                                          unsigned threads = 1);

}  // namespace opnlab
