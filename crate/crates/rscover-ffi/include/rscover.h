/* C interface to the rscover covering/quantization toolkit. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum RscStatus {
  RSC_STATUS_OK = 0,
  /**
   * Null pointer, bad enum value or malformed buffer length.
   */
  RSC_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A precondition of the underlying operation was violated.
   */
  RSC_STATUS_DOMAIN_ERROR = 2,
  /**
   * Unexpected internal failure.
   */
  RSC_STATUS_INTERNAL = 3,
} RscStatus;

/**
 * Decoder selector for the covering calls.
 */
typedef enum RscDecodeMode {
  RSC_DECODE_MODE_UNIQUE = 0,
  RSC_DECODE_MODE_LIST = 1,
} RscDecodeMode;

/**
 * SNR threshold selector for `rsc_crs_min_snr`.
 */
typedef enum RscSnrMode {
  /**
   * Threshold on mu^2 / (mu^2 + sigma^2); needs n and rate.
   */
  RSC_SNR_MODE_FINITE_N = 0,
  /**
   * Threshold on mu^2 / sigma^2 at fixed rate; needs rate.
   */
  RSC_SNR_MODE_ASYMPTOTIC = 1,
  /**
   * Limit p - 1 + 2 pi^2; needs only p.
   */
  RSC_SNR_MODE_RATE_TO_ONE = 2,
} RscSnrMode;

/**
 * Opaque handle to a character-Reed-Solomon subspace code.
 */
typedef struct RscCrsCode RscCrsCode;

/**
 * Opaque handle to an [n, k] generalized Reed-Solomon code.
 */
typedef struct RscGrsCode RscGrsCode;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static C string.
 */
const char *rsc_version(void);

/**
 * Maximum Guruswami-Sudan list-decoding radius, or -1 for invalid (n, k).
 */
int64_t rsc_tau_gs(uint64_t n, uint64_t k);

/**
 * Create the canonical [n, k] code over GF(q): evaluation points 1..=n,
 * unit multipliers. `out` receives an owned handle.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_grs_code_new(uint64_t q, uint64_t n, uint64_t k, struct RscGrsCode **out);

/**
 * Release a handle created by `rsc_grs_code_new`. Null is a no-op.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
void rsc_grs_code_free(struct RscGrsCode *code);

/**
 * Encode message coefficients (constant term first, `msg_len <= k`) into
 * `out_codeword[0..n]`.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_grs_encode(const struct RscGrsCode *code,
                              const uint64_t *msg,
                              uintptr_t msg_len,
                              uint64_t *out_codeword);

/**
 * Cover `y[0..y_len]` (which must have the code length) with a codeword at
 * Hamming distance at most d - 1. Optional out buffers: `out_codeword`
 * (length n) and `out_message` (length k, constant term first).
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_grs_cover(const struct RscGrsCode *code,
                             const uint64_t *y,
                             uintptr_t y_len,
                             enum RscDecodeMode mode,
                             int bw_raw,
                             uint64_t *out_codeword,
                             uint64_t *out_message,
                             uint64_t *out_distance,
                             uint64_t *out_punctures);

/**
 * Create the canonical CRS code over the prime-power field of size q with
 * character parameter beta != 0.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_crs_code_new(uint64_t q,
                                uint64_t n,
                                uint64_t k,
                                uint64_t beta,
                                struct RscCrsCode **out);

/**
 * Release a handle created by `rsc_crs_code_new`. Null is a no-op.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
void rsc_crs_code_free(struct RscCrsCode *code);

/**
 * Rank of the GF(p)-linear trace map; the code size is p^rank.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_crs_rank(const struct RscCrsCode *code, uint64_t *out_rank);

/**
 * Cover the line spanned by `y_re/y_im[0..y_len]` with a CRS codeword.
 * Preimage draws for the coordinate rounding come from the ChaCha stream
 * seeded by `seed`, so calls are reproducible. Optional `out_message`
 * receives k coefficients.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_crs_cover(const struct RscCrsCode *code,
                             const double *y_re,
                             const double *y_im,
                             uintptr_t y_len,
                             enum RscDecodeMode mode,
                             uint64_t best_of_n,
                             uint64_t seed,
                             uint64_t *out_message,
                             double *out_distance,
                             uint64_t *out_punctures);

/**
 * Chordal distance between the lines spanned by two complex vectors.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_chordal_distance(const double *u_re,
                                    const double *u_im,
                                    const double *v_re,
                                    const double *v_im,
                                    uintptr_t len,
                                    double *out);

/**
 * Expected average covering radius of a random q-ary code of m codewords.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_random_hamming_bound(uint64_t q, uint64_t n, double m, double *out);

/**
 * Expected average chordal covering radius of a random code of m lines.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_random_chordal_bound(uint64_t n, double m, double *out);

/**
 * Same with the codebook size given as a natural logarithm.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_random_chordal_bound_ln(uint64_t n, double ln_m, double *out);

/**
 * Closed-form average puncture count of the unique-decoder covering model.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_avg_punctures_unique(uint64_t q, uint64_t n, uint64_t k, double *out);

/**
 * Coverage-fraction lower bound (raw, may leave [0, 1]).
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_coverage_fraction_lower_bound(uint64_t q,
                                                 uint64_t n,
                                                 uint64_t k,
                                                 uint64_t tau,
                                                 double *out);

/**
 * Radius in (d/2, d) maximizing the coverage-fraction lower bound.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_tau_max(uint64_t q, uint64_t n, uint64_t k, uint64_t *out);

/**
 * Upper bound on the average chordal covering radius of a rate-k/n CRS code
 * over GF(p). `out_valid` reports the rate condition.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_crs_upper_bound(uint64_t p,
                                   uint64_t n,
                                   uint64_t k,
                                   double mu,
                                   double sigma,
                                   double *out_coarse,
                                   double *out_refined,
                                   double *out_min,
                                   int *out_valid);

/**
 * SNR threshold above which the CRS bound meets the random-coding bound.
 * Pass n = 0 / rate = 0 when the mode does not use them.
 *
 * # Safety
 *
 * Pointer arguments must be valid for the documented lengths;
 * null is allowed only where stated.
 */
enum RscStatus rsc_crs_min_snr(uint64_t p,
                               enum RscSnrMode mode,
                               uint64_t n,
                               double rate,
                               double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
