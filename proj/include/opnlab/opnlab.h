/*
 * C interface to the opnlab toolkit.
 *
 * Every fallible call returns an opnlab_status; on failure the message is
 * available from opnlab_last_error() on the calling thread. Handles are
 * opaque and owned by the caller, who releases them with the matching
 * *_destroy function. Strings returned by accessors live as long as the
 * handle they came from.
 */
#ifndef OPNLAB_H
#define OPNLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define OPNLAB_API __declspec(dllexport)
#else
#define OPNLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opnlab_status {
  OPNLAB_OK = 0,
  OPNLAB_INVALID_ARGUMENT = 1,
  OPNLAB_PARSE_ERROR = 2,
  OPNLAB_RESOURCE_LIMIT = 3,
  OPNLAB_PRECISION_CAP_EXCEEDED = 4,
  OPNLAB_NON_POSITIVE_INTERVAL = 5,
  OPNLAB_INTERNAL_ERROR = 6
} opnlab_status;

OPNLAB_API const char* opnlab_status_name(opnlab_status status);
OPNLAB_API const char* opnlab_last_error(void);
OPNLAB_API const char* opnlab_version(void);

/* Context: prime table and threshold cache. */
typedef struct opnlab_context opnlab_context;

/* Sieve cap from OPNLAB_PRIME_CAP, default 1000000 primes. */
OPNLAB_API opnlab_status opnlab_context_create(opnlab_context** out);
OPNLAB_API opnlab_status opnlab_context_create_with_cap(uint64_t prime_cap,
                                                        opnlab_context** out);
OPNLAB_API void opnlab_context_destroy(opnlab_context* ctx);
OPNLAB_API uint64_t opnlab_context_prime_cap(const opnlab_context* ctx);

/* Primes. */
OPNLAB_API opnlab_status opnlab_nth_prime(opnlab_context* ctx, uint64_t k,
                                          uint64_t* out);
OPNLAB_API opnlab_status opnlab_is_prime(const char* n, int* out);

/* Abundancy. `input` is a decimal integer or "p^e*q*..." text. */
typedef enum opnlab_classification {
  OPNLAB_DEFICIENT = 0,
  OPNLAB_PERFECT = 1,
  OPNLAB_ABUNDANT = 2
} opnlab_classification;

typedef struct opnlab_abundancy opnlab_abundancy;

OPNLAB_API opnlab_status opnlab_abundancy_compute(const char* input,
                                                  opnlab_abundancy** out);
OPNLAB_API const char* opnlab_abundancy_n(const opnlab_abundancy* a);
OPNLAB_API const char* opnlab_abundancy_factorization(
    const opnlab_abundancy* a);
OPNLAB_API const char* opnlab_abundancy_sigma(const opnlab_abundancy* a);
OPNLAB_API const char* opnlab_abundancy_sigma_minus_one(
    const opnlab_abundancy* a);
OPNLAB_API opnlab_classification
opnlab_abundancy_classification(const opnlab_abundancy* a);
OPNLAB_API const char* opnlab_classification_name(opnlab_classification c);
OPNLAB_API void opnlab_abundancy_destroy(opnlab_abundancy* a);

/* Screening. */
typedef enum opnlab_outcome {
  OPNLAB_CONSISTENT_SO_FAR = 0,
  OPNLAB_VIOLATES = 1
} opnlab_outcome;

typedef enum opnlab_condition {
  OPNLAB_COND_NONE = 0,
  OPNLAB_COND_NOT_ODD,
  OPNLAB_COND_NOT_PERFECT,
  OPNLAB_COND_EULERIAN_FORM,
  OPNLAB_COND_TOO_FEW_PRIME_FACTORS,
  OPNLAB_COND_ALPHA1_LOWER_BOUND,
  OPNLAB_COND_ALPHA1_UPPER_BOUND,
  OPNLAB_COND_ALPHA2_CASE1,
  OPNLAB_COND_ALPHA2_CASE2,
  OPNLAB_COND_TRIPLE_EXCLUSION_357
} opnlab_condition;

typedef enum opnlab_mode {
  OPNLAB_MODE_AUTO = 0,
  OPNLAB_MODE_ALPHA1 = 1,
  /* Case 1 over every admissible special prime together with Case 2. */
  OPNLAB_MODE_ALPHA2_CASE1 = 2,
  OPNLAB_MODE_ALPHA2_CASE2 = 3
} opnlab_mode;

typedef struct opnlab_verdicts opnlab_verdicts;

/* euler_form, perfect and radical verdicts, in that order. */
OPNLAB_API opnlab_status opnlab_screen(opnlab_context* ctx,
                                       const char* factorization,
                                       opnlab_verdicts** out);
/* One verdict. `primes` are decimal strings of distinct odd primes. */
OPNLAB_API opnlab_status opnlab_radical_screen(opnlab_context* ctx,
                                               const char* const* primes,
                                               size_t count, opnlab_mode mode,
                                               opnlab_verdicts** out);

/* Canonical text of the screened factorization, or "" for radical screens. */
OPNLAB_API const char* opnlab_verdicts_input(const opnlab_verdicts* v);
OPNLAB_API size_t opnlab_verdicts_count(const opnlab_verdicts* v);
OPNLAB_API const char* opnlab_verdicts_check(const opnlab_verdicts* v,
                                             size_t i);
OPNLAB_API opnlab_outcome opnlab_verdicts_outcome(const opnlab_verdicts* v,
                                                  size_t i);
OPNLAB_API opnlab_condition opnlab_verdicts_condition(const opnlab_verdicts* v,
                                                      size_t i);
/* "num/den", or NULL when the verdict carries no witness. */
OPNLAB_API const char* opnlab_verdicts_witness(const opnlab_verdicts* v,
                                               size_t i);
OPNLAB_API size_t opnlab_verdicts_evidence_count(const opnlab_verdicts* v,
                                                 size_t i);
/* special_prime is set to NULL for the Case 2 product. */
OPNLAB_API void opnlab_verdicts_evidence(const opnlab_verdicts* v, size_t i,
                                         size_t j, const char** special_prime,
                                         const char** product,
                                         int* within_bounds);
OPNLAB_API void opnlab_verdicts_destroy(opnlab_verdicts* v);

OPNLAB_API const char* opnlab_outcome_name(opnlab_outcome o);
OPNLAB_API const char* opnlab_condition_name(opnlab_condition c);

/* Prime-factor bound tables. */
typedef struct opnlab_table_row {
  uint32_t m;
  uint64_t p_I1;
  uint64_t p_I2;
  uint64_t p_I3;
  uint64_t perisastri;
} opnlab_table_row;

/* Writes m_max - m_min + 1 rows; `capacity` must be at least that. */
OPNLAB_API opnlab_status opnlab_table_generate(opnlab_context* ctx,
                                               uint32_t m_min, uint32_t m_max,
                                               uint32_t alpha,
                                               opnlab_table_row* rows,
                                               size_t capacity,
                                               size_t* written);

/* Threshold enclosures. `width` is decimal text, e.g. "1e-30". */
typedef struct opnlab_enclosure opnlab_enclosure;

OPNLAB_API opnlab_status opnlab_threshold(opnlab_context* ctx, uint32_t alpha,
                                          const char* width,
                                          opnlab_enclosure** out);
OPNLAB_API uint32_t opnlab_enclosure_alpha(const opnlab_enclosure* e);
OPNLAB_API const char* opnlab_enclosure_lo(const opnlab_enclosure* e);
OPNLAB_API const char* opnlab_enclosure_hi(const opnlab_enclosure* e);
OPNLAB_API const char* opnlab_enclosure_width(const opnlab_enclosure* e);
/* Outward-rounded with one digit beyond the requested width. */
OPNLAB_API const char* opnlab_enclosure_lo_decimal(const opnlab_enclosure* e);
OPNLAB_API const char* opnlab_enclosure_hi_decimal(const opnlab_enclosure* e);
OPNLAB_API void opnlab_enclosure_destroy(opnlab_enclosure* e);

/* Decimal rendering of "num/den" text, truncated to `digits` places.
 * Release the result with opnlab_string_free. NULL on parse failure. */
OPNLAB_API char* opnlab_rational_to_decimal(const char* rational,
                                            unsigned digits);
OPNLAB_API void opnlab_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* OPNLAB_H */
