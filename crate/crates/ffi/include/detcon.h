/* detcon: deterministic entanglement concentration. */

#ifndef DETCON_H
#define DETCON_H

/* This file is generated by cbindgen from detcon-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible function.
typedef enum DetconStatus {
  // Success.
  DETCON_STATUS_OK = 0,
  // A required pointer argument was null.
  DETCON_STATUS_NULL_POINTER = 1,
  // A scalar argument was out of range (tolerance, Rényi order, index).
  DETCON_STATUS_INVALID_ARGUMENT = 2,
  // Input values violate a domain invariant (normalization, ranges).
  DETCON_STATUS_INVALID_INPUT = 3,
  // The request exceeds a brute-force resource cap.
  DETCON_STATUS_TOO_LARGE = 4,
} DetconStatus;

// Pairing order for plan construction.
typedef enum DetconStrategy {
  // Fold pairs left to right, carrying the residual.
  DETCON_STRATEGY_CHAIN = 0,
  // Rounds of adjacent pairings.
  DETCON_STRATEGY_TOURNAMENT = 1,
} DetconStrategy;

// Opaque ensemble of two-qubit pairs.
typedef struct DetconEnsemble DetconEnsemble;

// Opaque concentration plan.
typedef struct DetconPlan DetconPlan;

// Opaque canonical Schmidt spectrum.
typedef struct DetconSpectrum DetconSpectrum;

// One two-pair concentration event of a plan, by value.
typedef struct DetconStep {
  // Position of the left input in the ensemble.
  size_t left_index;
  // Position of the right input in the ensemble.
  size_t right_index;
  // True when the step extracts a Bell pair, false when it merges.
  bool extracts_bell;
  double input_a;
  double input_b;
  double output_residual_a;
} DetconStep;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Build a canonical spectrum from `len` values: validated, clamped,
// optionally renormalized, and sorted descending.
//
// # Safety
// `values` must point to `len` readable doubles; `out` must be a valid
// location for a pointer. On success `*out` owns the new handle and must be
// released with [`detcon_spectrum_free`].
enum DetconStatus detcon_spectrum_new(const double *values,
                                      size_t len,
                                      bool renormalize,
                                      double eps,
                                      struct DetconSpectrum **out);

// Release a spectrum handle. Null is ignored.
//
// # Safety
// `spectrum` must be null or a handle returned by this library that has not
// been freed yet.
void detcon_spectrum_free(struct DetconSpectrum *spectrum);

// Number of entries, or 0 for a null handle.
//
// # Safety
// `spectrum` must be null or a live handle.
size_t detcon_spectrum_len(const struct DetconSpectrum *spectrum);

// Copy the probabilities into `buffer`, which must hold exactly
// `detcon_spectrum_len` doubles.
//
// # Safety
// `spectrum` must be null or a live handle; `buffer` must point to `len`
// writable doubles.
enum DetconStatus detcon_spectrum_probs(const struct DetconSpectrum *spectrum,
                                        double *buffer,
                                        size_t len);

// Von Neumann entropy in bits; NaN for a null handle.
//
// # Safety
// `spectrum` must be null or a live handle.
double detcon_spectrum_entropy(const struct DetconSpectrum *spectrum);

// Rényi entropy of order `t` in bits (finite `t ≥ 0`, `t ≠ 1`).
//
// # Safety
// `spectrum` must be null or a live handle; `out` must be writable.
enum DetconStatus detcon_spectrum_renyi(const struct DetconSpectrum *spectrum,
                                        double t,
                                        double *out);

// Deterministic entanglement `D = −log₂(max entry)` in Bell-pair units;
// NaN for a null handle.
//
// # Safety
// `spectrum` must be null or a live handle.
double detcon_spectrum_d(const struct DetconSpectrum *spectrum);

// Bell pairs deterministically extractable from the state; 0 for a null
// handle.
//
// # Safety
// `spectrum` must be null or a live handle.
size_t detcon_spectrum_k_max(const struct DetconSpectrum *spectrum, double eps);

// Tensor product of two spectra.
//
// # Safety
// `x` and `y` must be live handles; `out` must be writable. On success
// `*out` owns the new handle.
enum DetconStatus detcon_spectrum_tensor(const struct DetconSpectrum *x,
                                         const struct DetconSpectrum *y,
                                         struct DetconSpectrum **out);

// The drain spectrum: `(m, …, m, 1 − d·m, 0, …)` with `d = ⌊1/m⌋`, padded
// to the input length.
//
// # Safety
// `spectrum` must be a live handle; `out` must be writable. On success
// `*out` owns the new handle.
enum DetconStatus detcon_spectrum_drain(const struct DetconSpectrum *spectrum,
                                        double eps,
                                        struct DetconSpectrum **out);

// Whether `x ≺ y` in the majorization order.
//
// # Safety
// `x` and `y` must be live handles; `out` must be writable.
enum DetconStatus detcon_majorizes(const struct DetconSpectrum *x,
                                   const struct DetconSpectrum *y,
                                   double eps,
                                   bool *out);

// Nielsen's criterion: can `initial` be deterministically transformed into
// `final_state` by LOCC?
//
// # Safety
// `initial` and `final_state` must be live handles; `out` must be writable.
enum DetconStatus detcon_nielsen_allows(const struct DetconSpectrum *initial,
                                        const struct DetconSpectrum *final_state,
                                        double eps,
                                        bool *out);

// Build an ensemble from the larger Schmidt coefficients squared, each in
// `[1/2, 1]`.
//
// # Safety
// `coefficients` must point to `len` readable doubles; `out` must be
// writable. On success `*out` owns the new handle and must be released with
// [`detcon_ensemble_free`].
enum DetconStatus detcon_ensemble_new(const double *coefficients,
                                      size_t len,
                                      double eps,
                                      struct DetconEnsemble **out);

// Release an ensemble handle. Null is ignored.
//
// # Safety
// `ensemble` must be null or an unfreed handle from this library.
void detcon_ensemble_free(struct DetconEnsemble *ensemble);

// Number of pairs, or 0 for a null handle.
//
// # Safety
// `ensemble` must be null or a live handle.
size_t detcon_ensemble_len(const struct DetconEnsemble *ensemble);

// Maximum number of Bell pairs deterministically extractable; 0 for a null
// handle.
//
// # Safety
// `ensemble` must be null or a live handle.
size_t detcon_ensemble_k_max(const struct DetconEnsemble *ensemble, double eps);

// Total deterministic entanglement `Σ D(pairᵢ)` in Bell-pair units; NaN for
// a null handle.
//
// # Safety
// `ensemble` must be null or a live handle.
double detcon_ensemble_d_sum(const struct DetconEnsemble *ensemble);

// Brute-force `k_max` by exhaustive majorization search (caps at 20 pairs).
//
// # Safety
// `ensemble` must be a live handle; `out` must be writable.
enum DetconStatus detcon_ensemble_k_max_oracle(const struct DetconEnsemble *ensemble,
                                               double eps,
                                               size_t *out);

// Brute-force `k_max` with a catalyst spectrum that must be returned intact
// (caps at 12 pairs and catalyst length 8).
//
// # Safety
// `ensemble` and `catalyst` must be live handles; `out` must be writable.
enum DetconStatus detcon_catalytic_k_max(const struct DetconEnsemble *ensemble,
                                         const struct DetconSpectrum *catalyst,
                                         double eps,
                                         size_t *out);

// Compute the optimal deterministic concentration plan for an ensemble.
//
// # Safety
// `ensemble` must be a live handle; `out` must be writable. On success
// `*out` owns the new handle and must be released with
// [`detcon_plan_free`].
enum DetconStatus detcon_plan_new(const struct DetconEnsemble *ensemble,
                                  enum DetconStrategy strategy,
                                  double eps,
                                  struct DetconPlan **out);

// Release a plan handle. Null is ignored.
//
// # Safety
// `plan` must be null or an unfreed handle from this library.
void detcon_plan_free(struct DetconPlan *plan);

// Number of Bell pairs the plan extracts; 0 for a null handle.
//
// # Safety
// `plan` must be null or a live handle.
size_t detcon_plan_bells(const struct DetconPlan *plan);

// Number of pairs left disentangled; 0 for a null handle.
//
// # Safety
// `plan` must be null or a live handle.
size_t detcon_plan_disentangled(const struct DetconPlan *plan);

// Number of recorded two-pair steps; 0 for a null handle.
//
// # Safety
// `plan` must be null or a live handle.
size_t detcon_plan_step_count(const struct DetconPlan *plan);

// Estimated LOCC operation count (four per step); 0 for a null handle.
//
// # Safety
// `plan` must be null or a live handle.
size_t detcon_plan_estimated_operations(const struct DetconPlan *plan);

// Whether the plan keeps a residual pair; its coefficient is written to
// `out_a` when non-null.
//
// # Safety
// `plan` must be null or a live handle; `out_a` must be null or writable.
bool detcon_plan_residual(const struct DetconPlan *plan, double *out_a);

// Copy step `index` into `out`.
//
// # Safety
// `plan` must be a live handle; `out` must be writable.
enum DetconStatus detcon_plan_step(const struct DetconPlan *plan,
                                   size_t index,
                                   struct DetconStep *out);

// Brute-force verification of a plan against the full `2ⁿ`-dimensional
// majorization relation (caps at 20 pairs).
//
// # Safety
// `ensemble` and `plan` must be live handles; `out` must be writable.
enum DetconStatus detcon_plan_verify(const struct DetconEnsemble *ensemble,
                                     const struct DetconPlan *plan,
                                     double eps,
                                     bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DETCON_H */
