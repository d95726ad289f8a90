#include "opnlab/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "opnlab/errors.hpp"

namespace opnlab {

PrimeIndex::PrimeIndex(std::uint64_t index) : index_(index) {
  if (index == 0) throw InvalidArgument("prime index must be >= 1");
}

Factorization::Factorization(std::vector<PrimePower> factors)
    : factors_(std::move(factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    if (f.exponent == 0) {
      throw InvalidArgument("zero exponent for " + f.prime.get_str());
    }
    if (i > 0 && factors_[i - 1].prime >= f.prime) {
      throw InvalidArgument("factorization primes must strictly increase");
    }
    if (!is_prime(f.prime)) {
      throw InvalidArgument(f.prime.get_str() + " is not prime");
    }
  }
}

Natural Factorization::value() const {
  Natural n = 1;
  for (const auto& f : factors_) n *= pow(f.prime, f.exponent);
  return n;
}

std::vector<Natural> Factorization::radical() const {
  std::vector<Natural> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

std::string Factorization::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '*';
    out += f.prime.get_str();
    if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Rosser-Schoenfeld style estimate comfortably above p_count.
std::uint64_t limit_for_count(std::uint64_t count) {
  if (count < 6) return 15;
  const double n = static_cast<double>(count);
  return static_cast<std::uint64_t>(n * (std::log(n) + std::log(std::log(n)))) + 10;
}

constexpr std::uint64_t kSegment = 1u << 18;

}  // namespace

PrimeTable::PrimeTable(std::uint64_t cap) : cap_(cap) {
  if (cap == 0) throw InvalidArgument("prime cap must be positive");
}

PrimeTable PrimeTable::from_environment() {
  if (const char* env = std::getenv("OPNLAB_PRIME_CAP"); env && *env) {
    const Natural cap = parse_natural(env);
    if (cap == 0 || !cap.fits_ulong_p()) {
      throw InvalidArgument("OPNLAB_PRIME_CAP out of range");
    }
    return PrimeTable(cap.get_ui());
  }
  return PrimeTable();
}

void PrimeTable::extend_locked(std::uint64_t new_limit) {
  if (new_limit <= sieved_to_) return;
  const std::uint64_t root = isqrt(new_limit);
  if (root > sieved_to_) extend_locked(root);

  std::vector<char> composite;
  for (std::uint64_t lo = sieved_to_ + 1; lo <= new_limit; lo += kSegment) {
    const std::uint64_t hi = std::min(new_limit, lo + kSegment - 1);
    composite.assign(hi - lo + 1, 0);
    const std::uint64_t seg_root = isqrt(hi);
    for (std::uint64_t p : primes_) {
      if (p > seg_root) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t x = start; x <= hi; x += p) composite[x - lo] = 1;
    }
    for (std::uint64_t x = std::max<std::uint64_t>(lo, 2); x <= hi; ++x) {
      if (!composite[x - lo]) primes_.push_back(x);
    }
  }
  sieved_to_ = new_limit;
}

void PrimeTable::ensure_count(std::uint64_t count) {
  {
    std::shared_lock lock(mutex_);
    if (primes_.size() >= count) return;
  }
  std::unique_lock lock(mutex_);
  std::uint64_t limit = std::max(limit_for_count(count), sieved_to_);
  while (primes_.size() < count) {
    extend_locked(limit);
    limit *= 2;
  }
}

std::uint64_t PrimeTable::nth_prime(PrimeIndex k) {
  if (k.value() > cap_) {
    throw ResourceLimit("prime index " + std::to_string(k.value()) +
                        " exceeds the sieve cap of " + std::to_string(cap_));
  }
  ensure_count(k.value());
  std::shared_lock lock(mutex_);
  return primes_[k.value() - 1];
}

std::vector<std::uint64_t> PrimeTable::window(PrimeIndex start,
                                              std::size_t count) {
  if (count == 0) return {};
  const std::uint64_t last = start.value() + count - 1;
  if (last > cap_) {
    throw ResourceLimit("prime window ending at index " + std::to_string(last) +
                        " exceeds the sieve cap of " + std::to_string(cap_));
  }
  ensure_count(last);
  std::shared_lock lock(mutex_);
  return {primes_.begin() + static_cast<std::ptrdiff_t>(start.value() - 1),
          primes_.begin() + static_cast<std::ptrdiff_t>(last)};
}

std::uint64_t PrimeTable::index_of(std::uint64_t p) {
  std::uint64_t want = 64;
  for (;;) {
    const std::uint64_t have = std::min(want, cap_);
    ensure_count(have);
    {
      std::shared_lock lock(mutex_);
      if (primes_[have - 1] >= p) {
        auto it = std::lower_bound(primes_.begin(), primes_.begin() + have, p);
        return *it == p ? static_cast<std::uint64_t>(it - primes_.begin()) + 1 : 0;
      }
    }
    if (have == cap_) return 0;
    want *= 2;
  }
}

std::size_t PrimeTable::sieved_count() const {
  std::shared_lock lock(mutex_);
  return primes_.size();
}

PrimeTable& default_prime_table() {
  static PrimeTable table = PrimeTable::from_environment();
  return table;
}

std::uint64_t nth_prime(PrimeIndex k) { return default_prime_table().nth_prime(k); }

std::vector<std::uint64_t> primes_window(PrimeIndex start, std::size_t count) {
  return default_prime_table().window(start, count);
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

// These bases are deterministic for n < 3.3e24.
constexpr std::array<std::uint64_t, 12> kWitnesses = {2,  3,  5,  7,  11, 13,
                                                      17, 19, 23, 29, 31, 37};

bool fits_u64(const Natural& n) { return n >= 0 && n.fits_ulong_p(); }

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;

  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Natural& n, std::uint64_t budget) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(n.get_ui());
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (std::uint64_t d = 3; d <= budget; d += 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return false;
  }
  const Natural bound = Natural(budget) * Natural(budget);
  if (n <= bound) return true;
  throw ResourceLimit("cannot certify primality of " + n.get_str() +
                      " within the trial-division budget");
}

namespace {

void push_factor(std::vector<PrimePower>& out, const Natural& p, unsigned e) {
  if (!out.empty() && out.back().prime == p) {
    out.back().exponent += e;
  } else {
    out.push_back({p, e});
  }
}

void factorize_u64(std::uint64_t n, std::uint64_t first_divisor,
                   std::uint64_t budget, std::vector<PrimePower>& out) {
  auto divide_out = [&](std::uint64_t d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) push_factor(out, Natural(d), e);
    return e > 0;
  };
  if (first_divisor <= 2) divide_out(2);
  if (first_divisor <= 3) divide_out(3);
  std::uint64_t d = std::max<std::uint64_t>(5, first_divisor | 1);
  // Step along 6k +- 1 once aligned.
  while (d % 6 != 1 && d % 6 != 5) d += 2;
  bool cofactor_prime = n == 1 || is_prime_u64(n);
  while (!cofactor_prime && d <= budget && d * d <= n) {
    const bool hit = divide_out(d);
    if (hit) cofactor_prime = n == 1 || is_prime_u64(n);
    d += (d % 6 == 5) ? 2 : 4;
  }
  if (n == 1) return;
  if (cofactor_prime || d * d > n) {
    push_factor(out, Natural(n), 1);
    return;
  }
  throw ResourceLimit("cofactor " + std::to_string(n) +
                      " has no factor within the trial-division budget");
}

}  // namespace

Factorization factorize(const Natural& n, std::uint64_t budget) {
  if (n <= 0) throw InvalidArgument("factorize needs n >= 1");
  std::vector<PrimePower> out;
  if (fits_u64(n)) {
    factorize_u64(n.get_ui(), 2, budget, out);
    return Factorization(std::move(out));
  }
  Natural rest = n;
  std::uint64_t d = 2;
  for (; d <= budget; d += (d == 2 ? 1 : 2)) {
    if (fits_u64(rest)) {
      factorize_u64(rest.get_ui(), d, budget, out);
      return Factorization(std::move(out));
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) push_factor(out, Natural(d), e);
  }
  if (rest != 1) {
    if (!is_prime(rest, budget)) {
      throw ResourceLimit("cofactor " + rest.get_str() +
                          " has no factor within the trial-division budget");
    }
    push_factor(out, rest, 1);
  }
  return Factorization(std::move(out));
}

}  // namespace opnlab
