#include "opnlab/constants.hpp"

#include <string>
#include <utility>
#include <vector>

#include "opnlab/errors.hpp"

namespace opnlab {

Precision::Precision(Rational target_width) : width_(std::move(target_width)) {
  if (width_.sign() <= 0) throw InvalidArgument("precision width must be > 0");
}

Precision Precision::standard() {
  return Precision(Rational(Integer(1), pow(Integer(10), 30)));
}

namespace {

// B_0, B_1, ..., grown on demand.
const Rational& bernoulli(std::size_t m) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (table.size() <= m) {
    const std::size_t n = table.size();
    // B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k
    Rational acc;
    Integer binom = 1;  // C(n+1, 0)
    for (std::size_t k = 0; k < n; ++k) {
      acc += Rational(binom) * table[k];
      binom = binom * Integer(static_cast<unsigned long>(n + 1 - k)) /
              Integer(static_cast<unsigned long>(k + 1));
    }
    table.push_back(-acc / Rational(static_cast<long>(n + 1)));
  }
  return table[m];
}

void check_terms(std::size_t used, std::size_t max_terms, const char* what) {
  if (used > max_terms) {
    throw PrecisionCapExceeded(std::string(what) + " needs more than " +
                               std::to_string(max_terms) + " series terms");
  }
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

RatInterval ordered(const Rational& a, const Rational& b) {
  return a <= b ? RatInterval(a, b) : RatInterval(b, a);
}

// Bracket of atan(1/q) with width at most `width`: consecutive partial sums
// of the alternating series enclose the limit.
RatInterval atan_inverse(unsigned long q, const Rational& width,
                         std::size_t& terms, std::size_t max_terms) {
  const Rational x2 = Rational(Integer(1), Integer(q) * Integer(q));
  Rational power = Rational(Integer(1), Integer(q));  // x^(2i+1)
  Rational partial;
  for (unsigned long i = 0;; ++i) {
    const Rational term = power / Rational(static_cast<long>(2 * i + 1));
    if (term <= width) {
      const Rational next = (i % 2 == 0) ? partial + term : partial - term;
      return ordered(partial, next);
    }
    check_terms(++terms, max_terms, "pi enclosure");
    partial = (i % 2 == 0) ? partial + term : partial - term;
    power *= x2;
  }
}

}  // namespace

RatInterval zeta_enclosure(unsigned s, const Precision& precision,
                           std::size_t max_terms) {
  if (s < 2) throw InvalidArgument("zeta_enclosure needs s >= 2");
  const Rational& width = precision.target_width();
  const Rational s_rat(static_cast<long>(s));

  for (unsigned long n = 8;; n *= 2) {
    check_terms(n, max_terms, "zeta enclosure");
    const Rational n_rat(static_cast<long>(n));

    // Exact head sum_{k<N} k^-s plus the integral and midpoint terms.
    Rational base;
    for (unsigned long k = 1; k < n; ++k) {
      base += Rational(Integer(1), pow(Integer(k), s));
    }
    const Rational n_pow_s = pow(n_rat, s);
    base += n_rat / (n_pow_s * Rational(static_cast<long>(s - 1)));
    base += Rational(Integer(1), Integer(2)) / n_pow_s;

    // Correction T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * N^-(s+2j-1). The
    // remainder after any T_p lies between 0 and T_{p+1} because every even
    // derivative of x^-s is positive.
    Rational rising = s_rat;                           // (s)_{2j-1}
    Integer factorial = 2;                             // (2j)!
    Rational inv_power = Rational(1) / (n_pow_s * n_rat);  // N^-(s+2j-1)
    const Rational inv_n2 = Rational(1) / (n_rat * n_rat);
    Rational previous_size;
    Rational sum = base;
    for (unsigned long j = 1;; ++j) {
      check_terms(n + j, max_terms, "zeta enclosure");
      const Rational term =
          bernoulli(2 * j) / Rational(factorial) * rising * inv_power;
      const Rational size = abs(term);
      if (size <= width) return ordered(sum, sum + term);
      if ((j > 1 && size >= previous_size) || j > 4 * n) break;
      previous_size = size;
      sum += term;
      rising *= Rational(static_cast<long>(s + 2 * j - 1)) *
                Rational(static_cast<long>(s + 2 * j));
      factorial *= Integer((2 * j + 1) * (2 * j + 2));
      inv_power *= inv_n2;
    }
  }
}

RatInterval pi_enclosure(const Precision& precision, std::size_t max_terms) {
  // pi = 16 atan(1/5) - 4 atan(1/239); split the width budget evenly.
  const Rational& width = precision.target_width();
  std::size_t terms = 0;
  const RatInterval a5 =
      atan_inverse(5, width / Rational(32), terms, max_terms);
  const RatInterval a239 =
      atan_inverse(239, width / Rational(8), terms, max_terms);
  return {Rational(16) * a5.lo() - Rational(4) * a239.hi(),
          Rational(16) * a5.hi() - Rational(4) * a239.lo()};
}

Rational threshold_numerator(unsigned alpha) {
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  const Integer two_pow = pow(Integer(2), alpha + 1);
  return Rational(2 * two_pow, two_pow - 1);
}

Threshold threshold_enclosure(unsigned alpha, const Precision& precision,
                              std::size_t max_terms) {
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  const Rational& target = precision.target_width();
  Rational width = target;
  for (;;) {
    RatInterval enclosure = RatInterval::point(Rational(1));
    if (alpha == 1) {
      // 8 / (3 zeta(2)) = 16 / pi^2
      const RatInterval pi = pi_enclosure(Precision(width / Rational(8)), max_terms);
      if (pi.lo().sign() <= 0) {
        width /= Rational(2);
        continue;
      }
      const Rational sixteen(16);
      enclosure = RatInterval(sixteen / (pi.hi() * pi.hi()),
                              sixteen / (pi.lo() * pi.lo()));
    } else {
      const RatInterval zeta =
          zeta_enclosure(alpha + 1, Precision(width / Rational(4)), max_terms);
      enclosure = interval_div_scalar(threshold_numerator(alpha), zeta);
    }
    if (enclosure.width() <= target && enclosure.lo() > Rational(1) &&
        enclosure.hi() < Rational(2)) {
      return {alpha, std::move(enclosure)};
    }
    width /= Rational(2);
  }
}

Threshold refine(const Threshold& t, std::size_t max_terms) {
  const Rational half = t.enclosure.width() / Rational(2);
  Threshold finer = threshold_enclosure(t.alpha, Precision(half), max_terms);
  finer.enclosure = intersect(t.enclosure, finer.enclosure);
  return finer;
}

Ordering3 compare_refining(const Rational& q, Threshold& t,
                           std::size_t max_terms) {
  for (;;) {
    const Ordering3 order = compare(q, t.enclosure);
    if (order != Ordering3::Indeterminate) return order;
    t = refine(t, max_terms);
  }
}

ThresholdCache::ThresholdCache(Precision precision, std::size_t max_terms)
    : precision_(std::move(precision)), max_terms_(max_terms) {}

Threshold& ThresholdCache::entry_locked(unsigned alpha) {
  auto it = entries_.find(alpha);
  if (it == entries_.end()) {
    it = entries_
             .emplace(alpha, threshold_enclosure(alpha, precision_, max_terms_))
             .first;
  }
  return it->second;
}

Threshold ThresholdCache::get(unsigned alpha) {
  std::lock_guard lock(mutex_);
  return entry_locked(alpha);
}

Ordering3 ThresholdCache::compare(const Rational& q, unsigned alpha) {
  std::lock_guard lock(mutex_);
  return compare_refining(q, entry_locked(alpha), max_terms_);
}

ThresholdCache& default_thresholds() {
  static ThresholdCache cache;
  return cache;
}

}  // namespace opnlab
