#include "opnlab/screener.hpp"

#include <algorithm>
#include <utility>

#include "opnlab/abundancy.hpp"
#include "opnlab/errors.hpp"

namespace opnlab {

const char* to_string(Outcome o) {
  return o == Outcome::Violates ? "Violates" : "ConsistentSoFar";
}

const char* to_string(Condition c) {
  switch (c) {
    case Condition::NotOdd: return "NotOdd";
    case Condition::NotPerfect: return "NotPerfect";
    case Condition::EulerianForm: return "EulerianForm";
    case Condition::TooFewPrimeFactors: return "TooFewPrimeFactors";
    case Condition::Alpha1LowerBound: return "Alpha1LowerBound";
    case Condition::Alpha1UpperBound: return "Alpha1UpperBound";
    case Condition::Alpha2Case1: return "Alpha2Case1";
    case Condition::Alpha2Case2: return "Alpha2Case2";
    case Condition::TripleExclusion357: return "TripleExclusion357";
  }
  return "?";
}

const char* to_string(RadicalMode m) {
  switch (m) {
    case RadicalMode::Alpha1: return "alpha1";
    case RadicalMode::Alpha2Case1: return "alpha2";
    case RadicalMode::Alpha2Case2: return "alpha2-case2";
    case RadicalMode::Auto: return "auto";
  }
  return "?";
}

ScreenVerdict ScreenVerdict::violation(Condition c,
                                       std::optional<Rational> witness) {
  ScreenVerdict v;
  v.outcome = Outcome::Violates;
  v.violated = c;
  v.witness = std::move(witness);
  return v;
}

namespace {

bool has_factor_two(const Factorization& f) {
  return !f.empty() && f.factors().front().prime == 2;
}

bool is_one_mod_four(const Natural& x) {
  return mpz_fdiv_ui(x.get_mpz_t(), 4) == 1;
}

std::vector<Natural> validated_radical(std::span<const Natural> primes) {
  std::vector<Natural> sorted(primes.begin(), primes.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("radical contains a repeated prime");
  }
  for (const Natural& p : sorted) {
    if (p == 2) throw InvalidArgument("radical screens take odd primes only");
    if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not prime");
  }
  return sorted;
}

// Strictly between the threshold for `alpha` and 2.
bool within_bounds(const Rational& product, unsigned alpha,
                   ThresholdCache& thresholds) {
  return product < Rational(2) &&
         thresholds.compare(product, alpha) == Ordering3::Above;
}

ScreenVerdict alpha1_screen(const std::vector<Natural>& primes,
                            ThresholdCache& thresholds) {
  Rational product = truncated_product(primes, 1);
  if (product >= Rational(2)) {
    return ScreenVerdict::violation(Condition::Alpha1UpperBound,
                                    std::move(product));
  }
  if (thresholds.compare(product, 1) == Ordering3::Below) {
    return ScreenVerdict::violation(Condition::Alpha1LowerBound,
                                    std::move(product));
  }
  return ScreenVerdict::consistent();
}

ScreenVerdict case2_screen(const std::vector<Natural>& primes,
                           ThresholdCache& thresholds) {
  Rational product = truncated_product(primes, 2);
  if (within_bounds(product, 2, thresholds)) return ScreenVerdict::consistent();
  return ScreenVerdict::violation(Condition::Alpha2Case2, std::move(product));
}

// Case 2 and Case 1 for every admissible special prime; an odd perfect
// number must satisfy at least one of them.
ScreenVerdict alpha2_screen(const std::vector<Natural>& primes,
                            ThresholdCache& thresholds) {
  const Rational case2 = truncated_product(primes, 2);
  std::vector<CaseEvidence> evidence;
  evidence.push_back({std::nullopt, case2, within_bounds(case2, 2, thresholds)});
  for (const Natural& q : primes) {
    if (!is_one_mod_four(q)) continue;
    Rational product =
        case2 / truncated_sum(q, 2) * truncated_sum(q, 1);
    const bool ok = within_bounds(product, 2, thresholds);
    evidence.push_back({q, std::move(product), ok});
  }
  const bool any_ok = std::any_of(evidence.begin(), evidence.end(),
                                  [](const auto& e) { return e.within_bounds; });
  if (any_ok) return ScreenVerdict::consistent();

  auto contains = [&](long p) {
    return std::binary_search(primes.begin(), primes.end(), Natural(p));
  };
  const Condition condition = contains(3) && contains(5) && contains(7)
                                  ? Condition::TripleExclusion357
                                  : Condition::Alpha2Case1;
  ScreenVerdict verdict = ScreenVerdict::violation(condition, case2);
  verdict.evidence = std::move(evidence);
  return verdict;
}

}  // namespace

std::optional<EulerForm> euler_form(const Factorization& f) {
  if (f.empty() || has_factor_two(f)) return std::nullopt;
  std::optional<EulerForm> form;
  std::vector<PrimePower> even_part;
  for (const auto& factor : f.factors()) {
    if (factor.exponent % 2 == 0) {
      even_part.push_back(factor);
      continue;
    }
    if (form || factor.exponent % 4 != 1 || !is_one_mod_four(factor.prime)) {
      return std::nullopt;
    }
    form = EulerForm{factor.prime, factor.exponent, {}};
  }
  if (form) form->even_part = std::move(even_part);
  return form;
}

ScreenVerdict euler_form_check(const Factorization& f) {
  if (has_factor_two(f)) return ScreenVerdict::violation(Condition::NotOdd);
  if (!euler_form(f)) return ScreenVerdict::violation(Condition::EulerianForm);
  return ScreenVerdict::consistent();
}

ScreenVerdict perfect_check(const Factorization& f) {
  const Natural n = f.value();
  const Natural s = sigma(f);
  if (s == 2 * n) return ScreenVerdict::consistent();
  return ScreenVerdict::violation(Condition::NotPerfect, Rational(s, n));
}

ScreenVerdict radical_screen(std::span<const Natural> primes, RadicalMode mode,
                             ThresholdCache& thresholds) {
  const std::vector<Natural> radical = validated_radical(primes);
  switch (mode) {
    case RadicalMode::Alpha1:
      return alpha1_screen(radical, thresholds);
    case RadicalMode::Alpha2Case1:
      return alpha2_screen(radical, thresholds);
    case RadicalMode::Alpha2Case2:
      return case2_screen(radical, thresholds);
    case RadicalMode::Auto:
      break;
  }
  if (radical.size() < kMinDistinctPrimes) {
    return ScreenVerdict::violation(Condition::TooFewPrimeFactors);
  }
  ScreenVerdict first = alpha1_screen(radical, thresholds);
  if (first.violates()) return first;
  return alpha2_screen(radical, thresholds);
}

ScreenVerdict radical_screen(std::span<const Natural> primes,
                             RadicalMode mode) {
  return radical_screen(primes, mode, default_thresholds());
}

std::vector<ScreenVerdict> full_screen(const Factorization& f,
                                       ThresholdCache& thresholds) {
  std::vector<ScreenVerdict> out;
  out.push_back(euler_form_check(f));
  out.push_back(perfect_check(f));
  // Radical screens are defined on odd primes; an even n fails up front.
  if (has_factor_two(f)) {
    out.push_back(ScreenVerdict::violation(Condition::NotOdd));
  } else {
    out.push_back(radical_screen(f.radical(), RadicalMode::Auto, thresholds));
  }
  return out;
}

std::vector<ScreenVerdict> full_screen(const Factorization& f) {
  return full_screen(f, default_thresholds());
}

}  // namespace opnlab
