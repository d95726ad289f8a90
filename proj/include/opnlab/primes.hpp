#pragma once

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <string>
#include <vector>

#include "opnlab/rational.hpp"

namespace opnlab {

// 1-based position in the sequence of primes: p_1 = 2, p_2 = 3, ...
class PrimeIndex {
 public:
  // Throws InvalidArgument for index 0.
  explicit PrimeIndex(std::uint64_t index);

  std::uint64_t value() const { return index_; }
  PrimeIndex next() const { return PrimeIndex(index_ + 1); }

  friend auto operator<=>(const PrimeIndex&, const PrimeIndex&) = default;

 private:
  std::uint64_t index_;
};

struct PrimePower {
  Natural prime;
  unsigned exponent = 1;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// n as strictly increasing primes with positive exponents; empty for n = 1.
class Factorization {
 public:
  Factorization() = default;
  // Validates ordering, exponents and primality. Throws InvalidArgument.
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  std::size_t size() const { return factors_.size(); }

  Natural value() const;
  std::vector<Natural> radical() const;

  // "p^e*q*..." with exponent 1 written bare, "1" for the empty product.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

 private:
  std::vector<PrimePower> factors_;
};

inline constexpr std::uint64_t kDefaultPrimeCap = 1'000'000;
// Largest trial divisor tried by is_prime (beyond 64 bits) and factorize.
inline constexpr std::uint64_t kDefaultTrialBudget = 10'000'000;

// Grow-on-demand segmented sieve holding the first `cap` primes at most.
// Lookups of already-sieved indices take a shared lock only.
class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t cap = kDefaultPrimeCap);

  // Reads OPNLAB_PRIME_CAP, falling back to kDefaultPrimeCap.
  static PrimeTable from_environment();

  std::uint64_t cap() const { return cap_; }

  // Throws ResourceLimit when k exceeds the cap.
  std::uint64_t nth_prime(PrimeIndex k);

  // p_start .. p_{start+count-1}.
  std::vector<std::uint64_t> window(PrimeIndex start, std::size_t count);

  // Index of `p` when it is prime and within the cap, else 0.
  std::uint64_t index_of(std::uint64_t p);

  std::size_t sieved_count() const;

 private:
  void ensure_count(std::uint64_t count);
  void extend_locked(std::uint64_t new_limit);

  std::uint64_t cap_;
  mutable std::shared_mutex mutex_;
  std::vector<std::uint64_t> primes_;
  std::uint64_t sieved_to_ = 1;
};

// Process-wide table configured from the environment.
PrimeTable& default_prime_table();

std::uint64_t nth_prime(PrimeIndex k);
std::vector<std::uint64_t> primes_window(PrimeIndex start, std::size_t count);

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime_u64(std::uint64_t n);

// Exact for every n < 2^64. Beyond that trial division up to `budget`
// either finds a factor or, if budget^2 < n, raises ResourceLimit.
bool is_prime(const Natural& n, std::uint64_t budget = kDefaultTrialBudget);

// Trial division plus is_prime on the cofactor. Throws InvalidArgument for
// n == 0 and ResourceLimit when a composite cofactor has no factor below
// `budget`.
Factorization factorize(const Natural& n,
                        std::uint64_t budget = kDefaultTrialBudget);

}  // namespace opnlab
