// extern "C" layer over the C++ core; exceptions never cross it.
#include "opnlab/opnlab.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "opnlab/abundancy.hpp"
#include "opnlab/bound_tables.hpp"
#include "opnlab/constants.hpp"
#include "opnlab/errors.hpp"
#include "opnlab/primes.hpp"
#include "opnlab/screener.hpp"
#include "opnlab/text.hpp"

struct opnlab_context {
  explicit opnlab_context(std::uint64_t cap) : primes(cap) {}
  opnlab::PrimeTable primes;
  opnlab::ThresholdCache thresholds;
};

struct opnlab_abundancy {
  std::string n;
  std::string factorization;
  std::string sigma;
  std::string sigma_minus_one;
  opnlab_classification classification = OPNLAB_DEFICIENT;
};

namespace {

struct EvidenceEntry {
  std::optional<std::string> special_prime;
  std::string product;
  bool within_bounds = false;
};

struct VerdictEntry {
  std::string check;
  opnlab_outcome outcome = OPNLAB_CONSISTENT_SO_FAR;
  opnlab_condition condition = OPNLAB_COND_NONE;
  std::optional<std::string> witness;
  std::vector<EvidenceEntry> evidence;
};

}  // namespace

struct opnlab_verdicts {
  std::string input;
  std::vector<VerdictEntry> entries;
};

struct opnlab_enclosure {
  std::uint32_t alpha = 1;
  std::string lo, hi, width, lo_decimal, hi_decimal;
};

namespace {

thread_local std::string last_error;

opnlab_status status_for(opnlab::ErrorCode code) {
  switch (code) {
    case opnlab::ErrorCode::InvalidArgument: return OPNLAB_INVALID_ARGUMENT;
    case opnlab::ErrorCode::ParseError: return OPNLAB_PARSE_ERROR;
    case opnlab::ErrorCode::ResourceLimit: return OPNLAB_RESOURCE_LIMIT;
    case opnlab::ErrorCode::PrecisionCapExceeded: return OPNLAB_PRECISION_CAP_EXCEEDED;
    case opnlab::ErrorCode::NonPositiveInterval: return OPNLAB_NON_POSITIVE_INTERVAL;
  }
  return OPNLAB_INTERNAL_ERROR;
}

template <class F>
opnlab_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return OPNLAB_OK;
  } catch (const opnlab::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OPNLAB_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OPNLAB_INTERNAL_ERROR;
  } catch (...) {
    last_error = "unknown error";
    return OPNLAB_INTERNAL_ERROR;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw opnlab::InvalidArgument(what);
}

opnlab_condition to_c(opnlab::Condition c) {
  using opnlab::Condition;
  switch (c) {
    case Condition::NotOdd: return OPNLAB_COND_NOT_ODD;
    case Condition::NotPerfect: return OPNLAB_COND_NOT_PERFECT;
    case Condition::EulerianForm: return OPNLAB_COND_EULERIAN_FORM;
    case Condition::TooFewPrimeFactors: return OPNLAB_COND_TOO_FEW_PRIME_FACTORS;
    case Condition::Alpha1LowerBound: return OPNLAB_COND_ALPHA1_LOWER_BOUND;
    case Condition::Alpha1UpperBound: return OPNLAB_COND_ALPHA1_UPPER_BOUND;
    case Condition::Alpha2Case1: return OPNLAB_COND_ALPHA2_CASE1;
    case Condition::Alpha2Case2: return OPNLAB_COND_ALPHA2_CASE2;
    case Condition::TripleExclusion357: return OPNLAB_COND_TRIPLE_EXCLUSION_357;
  }
  return OPNLAB_COND_NONE;
}

VerdictEntry to_entry(std::string check, const opnlab::ScreenVerdict& v) {
  VerdictEntry e;
  e.check = std::move(check);
  e.outcome = v.violates() ? OPNLAB_VIOLATES : OPNLAB_CONSISTENT_SO_FAR;
  if (v.violated) e.condition = to_c(*v.violated);
  if (v.witness) e.witness = v.witness->to_string();
  for (const auto& ev : v.evidence) {
    EvidenceEntry out;
    if (ev.special_prime) out.special_prime = ev.special_prime->get_str();
    out.product = ev.product.to_string();
    out.within_bounds = ev.within_bounds;
    e.evidence.push_back(std::move(out));
  }
  return e;
}

const VerdictEntry* entry(const opnlab_verdicts* v, size_t i) {
  if (v == nullptr || i >= v->entries.size()) return nullptr;
  return &v->entries[i];
}

}  // namespace

extern "C" {

const char* opnlab_status_name(opnlab_status status) {
  switch (status) {
    case OPNLAB_OK: return "ok";
    case OPNLAB_INVALID_ARGUMENT: return "invalid argument";
    case OPNLAB_PARSE_ERROR: return "parse error";
    case OPNLAB_RESOURCE_LIMIT: return "resource limit";
    case OPNLAB_PRECISION_CAP_EXCEEDED: return "precision cap exceeded";
    case OPNLAB_NON_POSITIVE_INTERVAL: return "non-positive interval";
    case OPNLAB_INTERNAL_ERROR: return "internal error";
  }
  return "unknown status";
}

const char* opnlab_last_error(void) { return last_error.c_str(); }

const char* opnlab_version(void) { return "0.1.0"; }

opnlab_status opnlab_context_create(opnlab_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    const opnlab::PrimeTable probe = opnlab::PrimeTable::from_environment();
    *out = new opnlab_context(probe.cap());
  });
}

opnlab_status opnlab_context_create_with_cap(uint64_t prime_cap,
                                             opnlab_context** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = nullptr;
    *out = new opnlab_context(prime_cap);
  });
}

void opnlab_context_destroy(opnlab_context* ctx) { delete ctx; }

uint64_t opnlab_context_prime_cap(const opnlab_context* ctx) {
  return ctx ? ctx->primes.cap() : 0;
}

opnlab_status opnlab_nth_prime(opnlab_context* ctx, uint64_t k, uint64_t* out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    *out = ctx->primes.nth_prime(opnlab::PrimeIndex(k));
  });
}

opnlab_status opnlab_is_prime(const char* n, int* out) {
  return guarded([&] {
    require(n != nullptr && out != nullptr, "null argument");
    *out = opnlab::is_prime(opnlab::parse_natural(n)) ? 1 : 0;
  });
}

opnlab_status opnlab_abundancy_compute(const char* input,
                                       opnlab_abundancy** out) {
  return guarded([&] {
    require(input != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const opnlab::Factorization f = opnlab::parse_factorization(input);
    const opnlab::AbundancyReport report = opnlab::abundancy_report(f);
    auto result = std::make_unique<opnlab_abundancy>();
    result->n = report.n.get_str();
    result->factorization = f.to_string();
    result->sigma = report.sigma.get_str();
    result->sigma_minus_one = report.sigma_minus_one.to_string();
    result->classification =
        static_cast<opnlab_classification>(report.classification);
    *out = result.release();
  });
}

const char* opnlab_abundancy_n(const opnlab_abundancy* a) {
  return a ? a->n.c_str() : nullptr;
}
const char* opnlab_abundancy_factorization(const opnlab_abundancy* a) {
  return a ? a->factorization.c_str() : nullptr;
}
const char* opnlab_abundancy_sigma(const opnlab_abundancy* a) {
  return a ? a->sigma.c_str() : nullptr;
}
const char* opnlab_abundancy_sigma_minus_one(const opnlab_abundancy* a) {
  return a ? a->sigma_minus_one.c_str() : nullptr;
}
opnlab_classification opnlab_abundancy_classification(const opnlab_abundancy* a) {
  return a ? a->classification : OPNLAB_DEFICIENT;
}
const char* opnlab_classification_name(opnlab_classification c) {
  return opnlab::to_string(static_cast<opnlab::Classification>(c));
}
void opnlab_abundancy_destroy(opnlab_abundancy* a) { delete a; }

opnlab_status opnlab_screen(opnlab_context* ctx, const char* factorization,
                            opnlab_verdicts** out) {
  return guarded([&] {
    require(ctx != nullptr && factorization != nullptr && out != nullptr,
            "null argument");
    *out = nullptr;
    const opnlab::Factorization f = opnlab::parse_factorization(factorization);
    const auto verdicts = opnlab::full_screen(f, ctx->thresholds);
    auto result = std::make_unique<opnlab_verdicts>();
    result->input = f.to_string();
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      result->entries.push_back(
          to_entry(opnlab::kFullScreenChecks[i], verdicts[i]));
    }
    *out = result.release();
  });
}

opnlab_status opnlab_radical_screen(opnlab_context* ctx,
                                    const char* const* primes, size_t count,
                                    opnlab_mode mode, opnlab_verdicts** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    require(count == 0 || primes != nullptr, "null prime list");
    *out = nullptr;
    std::vector<opnlab::Natural> radical;
    for (size_t i = 0; i < count; ++i) {
      require(primes[i] != nullptr, "null prime");
      radical.push_back(opnlab::parse_natural(primes[i]));
    }
    opnlab::RadicalMode m;
    switch (mode) {
      case OPNLAB_MODE_AUTO: m = opnlab::RadicalMode::Auto; break;
      case OPNLAB_MODE_ALPHA1: m = opnlab::RadicalMode::Alpha1; break;
      case OPNLAB_MODE_ALPHA2_CASE1: m = opnlab::RadicalMode::Alpha2Case1; break;
      case OPNLAB_MODE_ALPHA2_CASE2: m = opnlab::RadicalMode::Alpha2Case2; break;
      default: throw opnlab::InvalidArgument("unknown radical mode");
    }
    const auto verdict = opnlab::radical_screen(radical, m, ctx->thresholds);
    auto result = std::make_unique<opnlab_verdicts>();
    result->entries.push_back(to_entry("radical", verdict));
    *out = result.release();
  });
}

const char* opnlab_verdicts_input(const opnlab_verdicts* v) {
  return v ? v->input.c_str() : nullptr;
}
size_t opnlab_verdicts_count(const opnlab_verdicts* v) {
  return v ? v->entries.size() : 0;
}
const char* opnlab_verdicts_check(const opnlab_verdicts* v, size_t i) {
  const auto* e = entry(v, i);
  return e ? e->check.c_str() : nullptr;
}
opnlab_outcome opnlab_verdicts_outcome(const opnlab_verdicts* v, size_t i) {
  const auto* e = entry(v, i);
  return e ? e->outcome : OPNLAB_CONSISTENT_SO_FAR;
}
opnlab_condition opnlab_verdicts_condition(const opnlab_verdicts* v, size_t i) {
  const auto* e = entry(v, i);
  return e ? e->condition : OPNLAB_COND_NONE;
}
const char* opnlab_verdicts_witness(const opnlab_verdicts* v, size_t i) {
  const auto* e = entry(v, i);
  return e && e->witness ? e->witness->c_str() : nullptr;
}
size_t opnlab_verdicts_evidence_count(const opnlab_verdicts* v, size_t i) {
  const auto* e = entry(v, i);
  return e ? e->evidence.size() : 0;
}
void opnlab_verdicts_evidence(const opnlab_verdicts* v, size_t i, size_t j,
                              const char** special_prime, const char** product,
                              int* within_bounds) {
  const auto* e = entry(v, i);
  const EvidenceEntry* ev =
      e && j < e->evidence.size() ? &e->evidence[j] : nullptr;
  if (special_prime) {
    *special_prime =
        ev && ev->special_prime ? ev->special_prime->c_str() : nullptr;
  }
  if (product) *product = ev ? ev->product.c_str() : nullptr;
  if (within_bounds) *within_bounds = ev && ev->within_bounds ? 1 : 0;
}
void opnlab_verdicts_destroy(opnlab_verdicts* v) { delete v; }

const char* opnlab_outcome_name(opnlab_outcome o) {
  return opnlab::to_string(o == OPNLAB_VIOLATES
                               ? opnlab::Outcome::Violates
                               : opnlab::Outcome::ConsistentSoFar);
}

const char* opnlab_condition_name(opnlab_condition c) {
  switch (c) {
    case OPNLAB_COND_NONE: return "None";
    case OPNLAB_COND_NOT_ODD: return "NotOdd";
    case OPNLAB_COND_NOT_PERFECT: return "NotPerfect";
    case OPNLAB_COND_EULERIAN_FORM: return "EulerianForm";
    case OPNLAB_COND_TOO_FEW_PRIME_FACTORS: return "TooFewPrimeFactors";
    case OPNLAB_COND_ALPHA1_LOWER_BOUND: return "Alpha1LowerBound";
    case OPNLAB_COND_ALPHA1_UPPER_BOUND: return "Alpha1UpperBound";
    case OPNLAB_COND_ALPHA2_CASE1: return "Alpha2Case1";
    case OPNLAB_COND_ALPHA2_CASE2: return "Alpha2Case2";
    case OPNLAB_COND_TRIPLE_EXCLUSION_357: return "TripleExclusion357";
  }
  return "Unknown";
}

opnlab_status opnlab_table_generate(opnlab_context* ctx, uint32_t m_min,
                                    uint32_t m_max, uint32_t alpha,
                                    opnlab_table_row* rows, size_t capacity,
                                    size_t* written) {
  return guarded([&] {
    require(ctx != nullptr && written != nullptr, "null argument");
    *written = 0;
    const auto table = opnlab::generate_table(m_min, m_max, alpha, ctx->primes,
                                              ctx->thresholds);
    require(rows != nullptr && capacity >= table.size(),
            "row buffer too small");
    for (const auto& row : table) {
      rows[(*written)++] = {row.m, row.p_I1, row.p_I2, row.p_I3, row.perisastri};
    }
  });
}

opnlab_status opnlab_threshold(opnlab_context* ctx, uint32_t alpha,
                               const char* width, opnlab_enclosure** out) {
  return guarded([&] {
    require(ctx != nullptr && width != nullptr && out != nullptr,
            "null argument");
    *out = nullptr;
    const opnlab::Precision precision(opnlab::parse_decimal(width));
    const opnlab::Threshold t = opnlab::threshold_enclosure(alpha, precision);
    const unsigned digits =
        opnlab::decimal_places_for(precision.target_width()) + 1;
    auto result = std::make_unique<opnlab_enclosure>();
    result->alpha = alpha;
    result->lo = t.enclosure.lo().to_string();
    result->hi = t.enclosure.hi().to_string();
    result->width = t.enclosure.width().to_string();
    result->lo_decimal =
        opnlab::to_decimal(t.enclosure.lo(), digits, opnlab::Rounding::Down);
    result->hi_decimal =
        opnlab::to_decimal(t.enclosure.hi(), digits, opnlab::Rounding::Up);
    *out = result.release();
  });
}

uint32_t opnlab_enclosure_alpha(const opnlab_enclosure* e) {
  return e ? e->alpha : 0;
}
const char* opnlab_enclosure_lo(const opnlab_enclosure* e) {
  return e ? e->lo.c_str() : nullptr;
}
const char* opnlab_enclosure_hi(const opnlab_enclosure* e) {
  return e ? e->hi.c_str() : nullptr;
}
const char* opnlab_enclosure_width(const opnlab_enclosure* e) {
  return e ? e->width.c_str() : nullptr;
}
const char* opnlab_enclosure_lo_decimal(const opnlab_enclosure* e) {
  return e ? e->lo_decimal.c_str() : nullptr;
}
const char* opnlab_enclosure_hi_decimal(const opnlab_enclosure* e) {
  return e ? e->hi_decimal.c_str() : nullptr;
}
void opnlab_enclosure_destroy(opnlab_enclosure* e) { delete e; }

char* opnlab_rational_to_decimal(const char* rational, unsigned digits) {
  if (rational == nullptr) return nullptr;
  try {
    const std::string text =
        opnlab::to_decimal(opnlab::Rational::parse(rational), digits);
    char* out = static_cast<char*>(std::malloc(text.size() + 1));
    if (out) std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
  } catch (const std::exception& e) {
    last_error = e.what();
    return nullptr;
  }
}

void opnlab_string_free(char* s) { std::free(s); }

}  // extern "C"
