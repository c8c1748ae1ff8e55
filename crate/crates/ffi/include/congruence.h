#ifndef CONGRUENCE_H
#define CONGRUENCE_H

/* Generated from the congruence-ffi crate by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible C entry point.
typedef enum CongruenceStatus {
  // The call succeeded and out-parameters are populated.
  CONGRUENCE_STATUS_OK = 0,
  // A required pointer argument was null.
  CONGRUENCE_STATUS_NULL_ARGUMENT = 1,
  // An argument was outside the supported domain (unknown claim id,
  // unsupported modulus power, empty range, non-UTF-8 string).
  CONGRUENCE_STATUS_INVALID_ARGUMENT = 2,
  // The computation itself reported an error.
  CONGRUENCE_STATUS_COMPUTE_ERROR = 3,
  // A panic was caught at the language boundary.
  CONGRUENCE_STATUS_PANICKED = 4,
} CongruenceStatus;

// Opaque handle over the library context (caches and configuration).
typedef struct CongruenceContext CongruenceContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string. Borrowed: do not
// free the returned pointer.
const char *congruence_version(void);

// Allocate a context with default configuration. Returns null only if
// construction panics. Release with [`congruence_context_free`].
struct CongruenceContext *congruence_context_new(void);

// Release a context created by [`congruence_context_new`]. Passing null
// is a no-op; passing any other pointer not produced by that constructor
// is undefined behavior.
//
// # Safety
// `ctx` must be null or a pointer returned by [`congruence_context_new`]
// that has not already been freed.
void congruence_context_free(struct CongruenceContext *ctx);

// Release a string written through an out-parameter of this library.
// Passing null is a no-op.
//
// # Safety
// `s` must be null or a pointer this library wrote through a `char **`
// out-parameter, not yet freed.
void congruence_string_free(char *s);

// Exact Bernoulli number B_n as a reduced fraction string "num/den"
// (or an integer string when the denominator is one).
//
// # Safety
// `ctx` must be a live context handle and `out` a valid pointer to a
// `char *`. On `Ok` the string in `*out` is owned by the caller and must
// be released with [`congruence_string_free`].
enum CongruenceStatus congruence_bernoulli(const struct CongruenceContext *ctx,
                                           uint64_t n,
                                           char **out);

// Newline-separated list of every registered claim id.
//
// # Safety
// `out` must be a valid pointer to a `char *`; on `Ok` the caller owns
// the string and must release it with [`congruence_string_free`].
enum CongruenceStatus congruence_claim_ids(char **out);

// Evaluate one claim at one point and return the report as a JSON object
// (fields: claim, p, modulus, lhs, rhs, holds, ns, detail). `power`
// selects the modulus exponent; pass 0 for the claim's default. The point
// is evaluated as given — domain filtering applies only to sweeps.
//
// # Safety
// `ctx` must be a live context handle, `claim_id` a NUL-terminated
// string, and `out` a valid pointer to a `char *`. On `Ok` the caller
// owns the string in `*out`.
enum CongruenceStatus congruence_run_claim(const struct CongruenceContext *ctx,
                                           const char *claim_id,
                                           uint64_t point,
                                           uint32_t power,
                                           char **out);

// Sweep one claim over the inclusive range `lo..hi` and return one JSON
// report per line. `power` as in [`congruence_run_claim`]; `parallelism`
// 0 means one worker per available core. When `out_failed` is non-null it
// receives the number of reports that did not hold.
//
// # Safety
// `ctx` must be a live context handle, `claim_id` a NUL-terminated
// string, `out` a valid pointer to a `char *`, and `out_failed` null or a
// valid `uint64_t *`. On `Ok` the caller owns the string in `*out`.
enum CongruenceStatus congruence_sweep(const struct CongruenceContext *ctx,
                                       const char *claim_id,
                                       uint64_t lo,
                                       uint64_t hi,
                                       uint32_t power,
                                       uint32_t parallelism,
                                       char **out,
                                       uint64_t *out_failed);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* CONGRUENCE_H */
