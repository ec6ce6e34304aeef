/* Point-mass perturbation toolkit: C interface to the shared library.
 *
 * All functions return pm_status; outputs are written through pointers.
 * On any failure pm_last_error() describes the problem for the calling
 * thread.  Handles are opaque and must be released with the matching
 * *_free function.
 */
#ifndef POINTMASS_H
#define POINTMASS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pm_status {
  PM_OK = 0,
  PM_ERR_INVALID_ARGUMENT = 1,
  PM_ERR_INVALID_COEFFICIENT = 2,
  PM_ERR_NOT_IN_CLASS = 3,
  PM_ERR_CONDITIONING = 4,
  PM_ERR_OVERFLOW = 5,
  PM_ERR_NUMERIC = 6,
  PM_ERR_IO = 7,
  PM_ERR_VERIFICATION = 100 /* a run executed checks and some failed */
} pm_status;

/* Message for the last failing call on this thread; empty string if none. */
const char* pm_last_error(void);

/* ---- Verblunsky sequences ---------------------------------------------- */

typedef struct pm_sequence pm_sequence;

/* alpha_{2k} = 0, alpha_{2k+1} = tau_inf - 1/sqrt(k) (ramped below the first
 * admissible index); -1 < tau_inf < 0. */
pm_status pm_sequence_interleaved(double tau_inf, pm_sequence** out);

/* alpha_{2k} = 0, alpha_{2k+1} = tau for all k; -1 < tau < 1. */
pm_status pm_sequence_interleaved_constant(double tau, pm_sequence** out);

/* Finite list of real coefficients; zero beyond the prefix. */
pm_status pm_sequence_from_list(const double* alpha, size_t count, pm_sequence** out);

void pm_sequence_free(pm_sequence* seq);

pm_status pm_sequence_alpha(const pm_sequence* seq, size_t n, double* re, double* im);

/* ---- point-mass insertion ---------------------------------------------- */

/* Delta_{2m}(1) and Delta_{2m+1}(1) for an interleaved sequence, ratio-space
 * fast path (any m, no overflow). */
pm_status pm_delta_at_one(const pm_sequence* seq, double beta, size_t m,
                          double* delta_even, double* delta_odd);

/* Perturbed coefficients alpha_n + Delta_n(e^{i omega}) for n < count;
 * either output array may be NULL. */
pm_status pm_perturb(const pm_sequence* seq, double omega, double beta, size_t count,
                     double* alpha_re, double* alpha_im);

/* ---- recursion coefficients on the line -------------------------------- */

typedef struct pm_jacobi pm_jacobi;

/* Coefficient-level map of a real sequence to (a_n, b_n), n = 1..count. */
pm_status pm_jacobi_from_sequence(const pm_sequence* seq, size_t count,
                                  pm_jacobi** out);

void pm_jacobi_free(pm_jacobi* jc);

size_t pm_jacobi_size(const pm_jacobi* jc);

/* 1-based n; either output may be NULL. */
pm_status pm_jacobi_get(const pm_jacobi* jc, size_t n, double* a, double* b);

/* ---- configured runs ---------------------------------------------------- */

typedef struct pm_config pm_config;

pm_status pm_config_create(pm_config** out);
void pm_config_free(pm_config* config);

/* Flat keys: mode (circle|line|fit|verify|pipeline), tau_inf, y, x0, beta,
 * n_max, ratio, oracle_depth, out.  Later assignments win. */
pm_status pm_config_set(pm_config* config, const char* key, const char* value);

/* Reads key=value lines ('#' comments and blank lines ignored). */
pm_status pm_config_load(pm_config* config, const char* path);

/* Validates the accumulated settings and executes the run, writing the CSV
 * or JSON artifact to `out` (stdout when unset).  PM_ERR_VERIFICATION means
 * the run completed but a requested check failed. */
pm_status pm_run(const pm_config* config);

#ifdef __cplusplus
}
#endif

#endif /* POINTMASS_H */
