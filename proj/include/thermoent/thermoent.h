/* Copyright 2026 The thermoent Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libthermoent.
 *
 * Every function returns a te_status. Objects are opaque handles created by
 * te_*_create / loaders and released with the matching te_*_free, which
 * accept NULL. On failure te_last_error() returns a message for the calling
 * thread; it stays valid until the next failing call on that thread.
 *
 * Quantifier kinds, Bell states and sides are plain ints so the header has
 * no enum ABI concerns.
 */

#ifndef THERMOENT_THERMOENT_H
#define THERMOENT_THERMOENT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(THERMOENT_BUILDING)
#define TE_API __declspec(dllexport)
#else
#define TE_API __declspec(dllimport)
#endif
#else
#define TE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The values of the I/O, no-transition, parse and
 * invalid-state codes double as CLI exit codes. */
typedef enum te_status {
  TE_OK = 0,
  TE_ERR_INVALID_ARGUMENT = 1,
  TE_ERR_IO = 2,
  TE_ERR_NO_TRANSITION = 3,
  TE_ERR_PARSE = 4,
  TE_ERR_INVALID_STATE = 5,
  TE_ERR_NOT_HERMITIAN = 6,
  TE_ERR_SOLVER = 7,
  TE_ERR_INTERNAL = 8
} te_status;

/* Quantifier kinds. */
#define TE_Q_CONCURRENCE 0
#define TE_Q_EOF 1
#define TE_Q_NEGATIVITY 2
#define TE_Q_LOG_NEGATIVITY 3
#define TE_Q_INDICATOR 4
#define TE_Q_COUNT 5

/* Bell states (Phi+, Phi-, Psi+, Psi-). */
#define TE_BELL_PHI_PLUS 0
#define TE_BELL_PHI_MINUS 1
#define TE_BELL_PSI_PLUS 2
#define TE_BELL_PSI_MINUS 3

#define TE_SIDE_LEFT 0
#define TE_SIDE_RIGHT 1

/* Outcome of the critical-point search when no sign change is found. */
#define TE_TRANSITION_FOUND 0
#define TE_TRANSITION_ALL_SEPARABLE 1
#define TE_TRANSITION_ALL_ENTANGLED 2

/* Reported in place of an order when no jump is found through order 2. */
#define TE_ORDER_ANALYTIC (-1)

typedef struct te_state te_state;
typedef struct te_series te_series;
typedef struct te_transition te_transition;
typedef struct te_ew te_ew;
typedef struct te_path te_path;
typedef struct te_path_report te_path_report;

TE_API const char* te_last_error(void);
TE_API const char* te_version(void);

/* Short column name of a quantifier kind ("C", "Ef", "N", "EN", "IM"),
 * or NULL for an unknown kind. */
TE_API const char* te_quantifier_name(int kind);
/* Inverse of te_quantifier_name. */
TE_API te_status te_quantifier_parse(const char* name, int* kind);

/* Shortest round-trip decimal capped at 12 significant digits. Writes at
 * most cap bytes including the terminator. */
TE_API te_status te_format_real(double value, char* buf, size_t cap);

/* ---- States -------------------------------------------------------------- */

TE_API te_status te_state_load(const char* path, te_state** out);
TE_API te_status te_state_save(const te_state* state, const char* path);
/* entries: dim*dim interleaved (re, im) pairs, row-major. */
TE_API te_status te_state_from_entries(const int* dims, size_t num_dims,
                                       const double* entries, te_state** out);
TE_API te_status te_state_gibbs(double x, double y, double z, double beta,
                                te_state** out);
TE_API te_status te_state_bell(int which, te_state** out);
TE_API te_status te_state_ghz(int num_qubits, te_state** out);
TE_API te_status te_state_maximally_mixed(const int* dims, size_t num_dims,
                                          te_state** out);
/* lambda a + (1 - lambda) b. */
TE_API te_status te_state_mix(const te_state* a, const te_state* b, double lambda,
                              te_state** out);
TE_API void te_state_free(te_state* state);

TE_API te_status te_state_dim(const te_state* state, int* dim);
TE_API te_status te_state_num_subsystems(const te_state* state, int* count);
TE_API te_status te_state_entry(const te_state* state, int row, int col,
                                double* re, double* im);
/* Bell-basis populations (Phi+, Phi-, Psi+, Psi-); two-qubit states only. */
TE_API te_status te_state_bell_populations(const te_state* state, double out[4]);

TE_API te_status te_quantifier(const te_state* state, int kind, double* value);

/* ---- Sweeps -------------------------------------------------------------- */

TE_API te_status te_sweep(double x, double y, double z, double beta_min,
                          double beta_max, int points, const int* kinds,
                          size_t num_kinds, int jobs, te_series** out);
TE_API void te_series_free(te_series* series);
TE_API te_status te_series_size(const te_series* series, size_t* points);
TE_API te_status te_series_beta(const te_series* series, size_t index, double* beta);
/* column indexes the kinds array passed to te_sweep. */
TE_API te_status te_series_value(const te_series* series, size_t column,
                                 size_t index, double* value);
/* d/dbeta column: centered differences, one-sided at the endpoints and at the
 * two grid points straddling beta_c. */
TE_API te_status te_series_derivative(const te_series* series, size_t column,
                                      size_t index, double* value);
/* beta_c used for the derivative columns; *found = 0 if none in the bracket. */
TE_API te_status te_series_beta_c(const te_series* series, int* found, double* beta_c);

/* ---- Transition analysis ------------------------------------------------- */

/* Returns TE_ERR_NO_TRANSITION (with *out still set, so the outcome can be
 * queried) when the bracket has no sign change. */
TE_API te_status te_analyze_transition(double x, double y, double z,
                                       double beta_lo, double beta_hi,
                                       te_transition** out);
TE_API void te_transition_free(te_transition* report);
/* TE_TRANSITION_FOUND / _ALL_SEPARABLE / _ALL_ENTANGLED. */
TE_API te_status te_transition_outcome(const te_transition* report, int* outcome);
TE_API te_status te_transition_beta_c(const te_transition* report, double* beta_c);
/* lambda_min of the partial transpose at beta_c. */
TE_API te_status te_transition_boundary_value(const te_transition* report,
                                              double* value);
/* order in {0,1,2} or TE_ORDER_ANALYTIC. */
TE_API te_status te_transition_order(const te_transition* report, int kind,
                                     int* order);
/* order in {0,1,2}; side TE_SIDE_LEFT/RIGHT. */
TE_API te_status te_transition_derivative(const te_transition* report, int kind,
                                          int order, int side, double* value,
                                          double* error, int* divergent);

/* One-sided Richardson derivative of a user callback. */
typedef double (*te_real_fn)(double x, void* user);
TE_API te_status te_one_sided_derivative(te_real_fn f, void* user, double x0,
                                         int side, int order, double h0,
                                         double* value, double* error,
                                         int* divergent);

/* Chain-rule residuals for E_N(N) and E_f(C) at one beta. */
TE_API te_status te_chain_rule_en(double x, double y, double z, double beta,
                                  double* residual);
TE_API te_status te_chain_rule_ef(double x, double y, double z, double beta,
                                  double* residual);

/* ---- Witnessed entanglement ---------------------------------------------- */

/* cut: subsystems on the transposed side. Solver failures return
 * TE_ERR_SOLVER with *out set to the best certified pair. */
TE_API te_status te_witnessed_entanglement(const te_state* state, const int* cut,
                                           size_t cut_size, te_ew** out);
TE_API void te_ew_free(te_ew* result);
TE_API te_status te_ew_value(const te_ew* result, double* value);
TE_API te_status te_ew_duality_gap(const te_ew* result, double* gap);
TE_API te_status te_ew_iterations(const te_ew* result, int* iterations);
/* 1 when PPT equals separability for the cut (value exact), else 0. */
TE_API te_status te_ew_exact(const te_ew* result, int* exact);
TE_API te_status te_ew_dim(const te_ew* result, int* dim);
TE_API te_status te_ew_witness_entry(const te_ew* result, int row, int col,
                                     double* re, double* im);
/* min Tr(W sigma) over Haar-random product states across the cut. */
TE_API te_status te_ew_product_check(const te_ew* result, const te_state* state,
                                     int samples, uint64_t seed, double* minimum);

/* Number of distinct bipartitions of n subsystems, and the k-th one written
 * into side[] (capacity n). */
TE_API te_status te_bipartition_count(int num_subsystems, size_t* count);
TE_API te_status te_bipartition_get(int num_subsystems, size_t index, int* side,
                                    size_t* side_size);

/* ---- Paths --------------------------------------------------------------- */

TE_API te_status te_path_gibbs(double x, double y, double z, double t_min,
                               double t_max, int points, te_path** out);
/* (1 - t) a + t b. */
TE_API te_status te_path_mix(const te_state* a, const te_state* b, double t_min,
                             double t_max, int points, te_path** out);
TE_API void te_path_free(te_path* path);

/* theta_w, delta_smooth <= 0 select the defaults (0.5, 0.05). A report is
 * returned even when some solves fail (status TE_ERR_SOLVER). */
TE_API te_status te_track_witness_path(const te_path* path, double theta_w,
                                       double delta_smooth, te_path_report** out);
TE_API void te_path_report_free(te_path_report* report);
TE_API te_status te_path_report_size(const te_path_report* report, size_t* points);
TE_API te_status te_path_report_point(const te_path_report* report, size_t index,
                                      double* t, double* value, double* gap,
                                      double* witness_jump, int* flagged,
                                      int* solved);
TE_API te_status te_path_report_slopes(const te_path_report* report, size_t index,
                                       double* left, double* right);
TE_API te_status te_path_report_flag_count(const te_path_report* report,
                                           size_t* count);
TE_API te_status te_path_report_flag(const te_path_report* report, size_t k,
                                     size_t* index);
TE_API te_status te_path_report_kink_count(const te_path_report* report,
                                           size_t* count);
TE_API te_status te_path_report_kink(const te_path_report* report, size_t k,
                                     size_t* index);

#ifdef __cplusplus
}
#endif

#endif /* THERMOENT_THERMOENT_H */
