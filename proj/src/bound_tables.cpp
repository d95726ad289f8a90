#include "opnlab/bound_tables.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "opnlab/abundancy.hpp"
#include "opnlab/errors.hpp"

namespace opnlab {

Rational window_prefix(unsigned k, unsigned alpha) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  Rational product(1);
  unsigned taken = 0;
  for (unsigned long p = 3; taken + 1 < k; p += 2) {
    if (!is_prime_u64(p)) continue;
    product *= truncated_sum(Natural(p), alpha);
    ++taken;
  }
  return product;
}

Rational rho(const RhoParams& params, PrimeTable& primes) {
  const auto& [k, m, r, alpha] = params;
  if (k < 1 || k > m) {
    throw InvalidArgument("rho needs 1 <= k <= m (k=" + std::to_string(k) +
                          ", m=" + std::to_string(m) + ")");
  }
  Rational product = window_prefix(k, alpha);
  for (std::uint64_t p : primes.window(r, m - k + 1)) {
    product *= truncated_sum(Natural(p), alpha);
  }
  return product;
}

Rational rho_limit(unsigned k, unsigned alpha) {
  if (k < 1 || k > 3) {
    throw InvalidArgument("the window bound only covers k = 1, 2, 3");
  }
  return window_prefix(k, alpha);
}

PrimeIndex find_I(unsigned k, unsigned m, unsigned alpha, Threshold& theta,
                  PrimeTable& primes, SearchOptions options) {
  if (k < 1 || k > 3) {
    throw InvalidArgument("find_I only covers k = 1, 2, 3; got k=" +
                          std::to_string(k));
  }
  if (m < options.min_m || m < k) {
    throw InvalidArgument("find_I needs m >= " +
                          std::to_string(std::max(options.min_m, k)));
  }
  if (theta.alpha != alpha) {
    throw InvalidArgument("threshold alpha does not match the search alpha");
  }
  if (compare_refining(rho_limit(k, alpha), theta) != Ordering3::Below) {
    throw InvalidArgument("window limit does not fall below the threshold");
  }

  // Slide the window one prime at a time; rho strictly decreases in r.
  const std::size_t width = m - k + 1;
  PrimeIndex r(2);
  Rational value = rho({k, m, r, alpha}, primes);
  for (;;) {
    if (compare_refining(value, theta) == Ordering3::Below) return r;
    const std::uint64_t leaving = primes.nth_prime(r);
    const std::uint64_t entering =
        primes.nth_prime(PrimeIndex(r.value() + width));
    value = value / truncated_sum(Natural(leaving), alpha) *
            truncated_sum(Natural(entering), alpha);
    r = r.next();
  }
}

std::uint64_t perisastri_bound(unsigned m) {
  if (m < 1) throw InvalidArgument("m must be >= 1");
  const Rational bound = Rational(Integer(2 * m), Integer(3)) + Rational(3);
  return floor(bound).get_ui();
}

namespace {

BoundTableRow table_row(unsigned m, unsigned alpha, PrimeTable& primes,
                        Threshold theta) {
  BoundTableRow row;
  row.m = m;
  std::uint64_t* columns[] = {&row.p_I1, &row.p_I2, &row.p_I3};
  for (unsigned k = 1; k <= 3; ++k) {
    *columns[k - 1] = primes.nth_prime(find_I(k, m, alpha, theta, primes));
  }
  row.perisastri = perisastri_bound(m);
  return row;
}

}  // namespace

std::vector<BoundTableRow> generate_table(unsigned m_min, unsigned m_max,
                                          unsigned alpha, PrimeTable& primes,
                                          ThresholdCache& thresholds,
                                          unsigned threads) {
  if (m_min < 9 || m_min > m_max) {
    throw InvalidArgument("table range needs 9 <= m_min <= m_max");
  }
  if (alpha < 1) throw InvalidArgument("alpha must be >= 1");
  const Threshold theta = thresholds.get(alpha);
  const unsigned count = m_max - m_min + 1;
  std::vector<BoundTableRow> rows(count);

  if (threads <= 1) {
    for (unsigned i = 0; i < count; ++i) {
      rows[i] = table_row(m_min + i, alpha, primes, theta);
    }
    return rows;
  }
  std::vector<std::future<void>> workers;
  for (unsigned t = 0; t < threads && t < count; ++t) {
    workers.push_back(std::async(std::launch::async, [&, t] {
      for (unsigned i = t; i < count; i += threads) {
        rows[i] = table_row(m_min + i, alpha, primes, theta);
      }
    }));
  }
  for (auto& w : workers) w.get();
  return rows;
}

}  // namespace opnlab
