#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opnlab/constants.hpp"
#include "opnlab/primes.hpp"
#include "opnlab/rational.hpp"

namespace opnlab {

// Minimum number of distinct prime factors of an odd perfect number.
inline constexpr std::size_t kMinDistinctPrimes = 9;

enum class Outcome { ConsistentSoFar, Violates };

enum class Condition {
  NotOdd,
  NotPerfect,
  EulerianForm,
  TooFewPrimeFactors,
  Alpha1LowerBound,
  Alpha1UpperBound,
  Alpha2Case1,
  Alpha2Case2,
  TripleExclusion357,
};

const char* to_string(Outcome o);
const char* to_string(Condition c);

// One product evaluated by the alpha = 2 test. `special_prime` is set for
// Case 1 (that prime contributes 1 + 1/q, the rest 1 + 1/p + 1/p^2) and
// absent for Case 2.
struct CaseEvidence {
  std::optional<Natural> special_prime;
  Rational product;
  bool within_bounds = false;

  friend bool operator==(const CaseEvidence&, const CaseEvidence&) = default;
};

struct ScreenVerdict {
  Outcome outcome = Outcome::ConsistentSoFar;
  std::optional<Condition> violated;
  std::optional<Rational> witness;
  // Only filled by a failed combined alpha = 2 test.
  std::vector<CaseEvidence> evidence;

  static ScreenVerdict consistent() { return {}; }
  static ScreenVerdict violation(Condition c,
                                 std::optional<Rational> witness = {});

  bool violates() const { return outcome == Outcome::Violates; }

  friend bool operator==(const ScreenVerdict&, const ScreenVerdict&) = default;
};

// p^b * prod q_i^(2 a_i) with p = b = 1 (mod 4).
struct EulerForm {
  Natural special_prime;
  unsigned special_exponent = 1;
  std::vector<PrimePower> even_part;
};

// Returns the decomposition when `f` has Eulerian form.
std::optional<EulerForm> euler_form(const Factorization& f);

ScreenVerdict euler_form_check(const Factorization& f);
ScreenVerdict perfect_check(const Factorization& f);

enum class RadicalMode {
  Alpha1,
  // Case 1 over every admissible special prime q = 1 (mod 4), together with
  // Case 2; violates only when all of them fail.
  Alpha2Case1,
  Alpha2Case2,
  Auto,
};

const char* to_string(RadicalMode m);

// Bound screens on the distinct primes only. Elements must be distinct odd
// primes (any order); otherwise InvalidArgument.
ScreenVerdict radical_screen(std::span<const Natural> primes, RadicalMode mode,
                             ThresholdCache& thresholds);
ScreenVerdict radical_screen(std::span<const Natural> primes, RadicalMode mode);

// euler_form_check, perfect_check, radical_screen(Auto) on the radical.
std::vector<ScreenVerdict> full_screen(const Factorization& f,
                                       ThresholdCache& thresholds);
std::vector<ScreenVerdict> full_screen(const Factorization& f);

// Check names in full_screen order.
inline constexpr const char* kFullScreenChecks[] = {"euler_form", "perfect",
                                                    "radical"};

}  // namespace opnlab
