/* C interface to the genus-2 theta evaluation library. */

#ifndef THETA_G2_H
#define THETA_G2_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every entry point.
typedef enum theta_g2_status {
  THETA_G2_STATUS_OK = 0,
  // A required pointer argument was null.
  THETA_G2_STATUS_NULL_POINTER = 1,
  // The imaginary part of the period matrix is not positive definite.
  THETA_G2_STATUS_NOT_CONVERGENT = 2,
  // `Im(tau12) <= 0`.
  THETA_G2_STATUS_NEGATIVE_TAU12_IM = 3,
  // The tail tolerance would need a truncation radius beyond the cap.
  THETA_G2_STATUS_TOL_TOO_SMALL = 4,
  // The characteristic string is not four digits of 0 or 1.
  THETA_G2_STATUS_BAD_CHARACTERISTIC = 5,
  // The hyperelliptic denominator is numerically zero at this point.
  THETA_G2_STATUS_DENOMINATOR_NEAR_ZERO = 6,
  // Some other argument was out of range.
  THETA_G2_STATUS_INVALID_ARGUMENT = 7,
} theta_g2_status;

// Opaque validated period matrix.
typedef struct theta_g2_period_matrix theta_g2_period_matrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Validate the moduli `(tau1, tau2, tau12)` and store them behind an
// opaque handle. On success writes the handle to `out`; free it with
// [`theta_g2_period_matrix_free`].
//
// # Safety
// `out` must be null or valid for writing one pointer.
enum theta_g2_status theta_g2_period_matrix_new(double tau1_re,
                                                double tau1_im,
                                                double tau2_re,
                                                double tau2_im,
                                                double tau12_re,
                                                double tau12_im,
                                                struct theta_g2_period_matrix **out);

// Release a handle returned by [`theta_g2_period_matrix_new`]. A null
// pointer is ignored.
//
// # Safety
// `matrix` must be null or a handle from [`theta_g2_period_matrix_new`]
// that has not been freed.
void theta_g2_period_matrix_free(struct theta_g2_period_matrix *matrix);

// Evaluate `theta[characteristic](u, v)` for the handle's moduli.
//
// `characteristic` is the NUL-terminated four-digit string `acbd`.
// `tail_tolerance <= 0` selects the default (1e-12). The value is written
// to `(*out_re, *out_im)`.
//
// # Safety
// `matrix` must be a live handle, `characteristic` null or a
// NUL-terminated string, and the out-pointers null or writable.
enum theta_g2_status theta_g2_theta(const struct theta_g2_period_matrix *matrix,
                                    const char *characteristic,
                                    double u_re,
                                    double u_im,
                                    double v_re,
                                    double v_im,
                                    double tail_tolerance,
                                    double *out_re,
                                    double *out_im);

// Evaluate the hyperelliptic ratio
// `F[characteristic](u, v) = theta[characteristic](u, v) / theta[0011](u, v)`.
//
// # Safety
// Same contract as [`theta_g2_theta`].
enum theta_g2_status theta_g2_hyperelliptic_f(const struct theta_g2_period_matrix *matrix,
                                              const char *characteristic,
                                              double u_re,
                                              double u_im,
                                              double v_re,
                                              double v_im,
                                              double tail_tolerance,
                                              double *out_re,
                                              double *out_im);

// Write the six odd half-period pairs (alpha, beta) as 24 doubles:
// `[alpha0_re, alpha0_im, beta0_re, beta0_im, alpha1_re, ...]`.
// `out` must point to at least 24 doubles.
//
// # Safety
// `matrix` must be a live handle and `out` null or valid for writing 24
// doubles.
enum theta_g2_status theta_g2_odd_half_periods(const struct theta_g2_period_matrix *matrix,
                                               double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* THETA_G2_H */
