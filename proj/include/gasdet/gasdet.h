/* Copyright 2026 The gasdet authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the gasdet simulator: RIS-assisted SC-FDE links, QUBO
 * reduction of the detection metric, Grover-adaptive-search detection on an
 * embedded statevector simulator, and the experiment harness.
 *
 * All functions return GASDET_OK (0) or a gasdet_status error code; handle
 * output parameters are only valid on GASDET_OK. gasdet_last_error() returns
 * a thread-local description of the most recent failure.
 */

#ifndef GASDET_GASDET_H
#define GASDET_GASDET_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gasdet_status {
  GASDET_OK = 0,
  GASDET_ERR_INVALID_ARGUMENT = 1,
  GASDET_ERR_RESOURCE_LIMIT = 2,
  GASDET_ERR_WIDTH = 3,
  GASDET_ERR_CONFIG = 4,
  GASDET_ERR_INTERNAL = 5
} gasdet_status;

const char* gasdet_version(void);
const char* gasdet_status_name(int status);
const char* gasdet_last_error(void);

/* Strings returned through `char**` parameters are heap-allocated; release
 * them with gasdet_string_free. */
void gasdet_string_free(char* text);

/* ---- seeded generator ---------------------------------------------------- */

typedef struct gasdet_rng gasdet_rng;
gasdet_rng* gasdet_rng_new(uint64_t seed);
void gasdet_rng_free(gasdet_rng* rng);

/* ---- channel ------------------------------------------------------------- */

typedef struct gasdet_channel gasdet_channel;

/* Draws an R-element RIS channel (l_ui- and l_ib-tap Rayleigh links with a
 * uniform power delay profile), configures the RIS phases per `strategy`
 * ("first" | "central" | "max") and forms the cascaded realization for an
 * n-sample block. */
int gasdet_channel_sample(int n, int l_ui, int l_ib, int r_elements,
                          const char* strategy, gasdet_rng* rng,
                          gasdet_channel** out);
int gasdet_channel_taps(const gasdet_channel* ch, int* len);

/* Buffers must hold `len` doubles, with len from gasdet_channel_taps /
 * the block length used at sampling time. */
int gasdet_channel_impulse(const gasdet_channel* ch, double* re, double* im);
int gasdet_channel_lambda(const gasdet_channel* ch, double* re, double* im);
void gasdet_channel_free(gasdet_channel* ch);

/* ---- QUBO ----------------------------------------------------------------- */

typedef struct gasdet_qubo gasdet_qubo;

/* Builds the detection QUBO from the n channel eigenvalues and the n
 * frequency-domain receive samples (unitary DFT convention). Energies equal
 * the exact metric ||y - H x(b)||^2. */
int gasdet_qubo_build(int n, const double* lambda_re, const double* lambda_im,
                      const double* yf_re, const double* yf_im, gasdet_qubo** out);
int gasdet_qubo_energy(const gasdet_qubo* q, const uint8_t* bits, int n, double* energy);

/* exact != 0 enumerates all bitstrings (n <= 24); otherwise coefficient
 * interval bounds. */
int gasdet_qubo_bounds(const gasdet_qubo* q, int exact, double* e_min, double* e_max);
int gasdet_register_width(double e_min, double e_max, int margin, int* m);
int gasdet_qubo_dump(const gasdet_qubo* q, char** text);
void gasdet_qubo_free(gasdet_qubo* q);

/* ---- GAS ------------------------------------------------------------------ */

typedef struct gasdet_gas_options {
  double lambda_growth;   /* > 1, default 8/7 */
  int max_iterations;     /* default 50 */
  int patience;           /* consecutive non-improving iterations, default 12 */
  int fixed_iterations;   /* nonzero: ignore patience */
  int width_margin;       /* extra value-register qubits */
  const uint8_t* initial_bits; /* length n, or NULL for a random start */
  int depolarize_two;     /* two-qubit depolarizing on controlled rotations */
  double p2;
  int depolarize_one;
  double p1;
  int readout;            /* assignment-matrix readout noise */
} gasdet_gas_options;

void gasdet_gas_options_init(gasdet_gas_options* opts);

typedef struct gasdet_gas_result gasdet_gas_result;

int gasdet_gas_run(const gasdet_qubo* q, const gasdet_gas_options* opts,
                   uint64_t seed, gasdet_gas_result** out);
int gasdet_gas_best(const gasdet_gas_result* res, uint8_t* bits, int n, double* energy);
int gasdet_gas_iterations(const gasdet_gas_result* res, int* iterations);
int gasdet_gas_register_width(const gasdet_gas_result* res, int* m);

/* Query bookkeeping: classical evaluations (iterations + 1), total Grover
 * applications, and the expected count sum(ceil(k_i - 1)/2). */
int gasdet_gas_queries(const gasdet_gas_result* res, long* classical,
                       long* grover_calls, double* expected_grover);

/* Per-iteration CSV: trial,iter,gamma,k,L,measured_bits,energy,improved
 * (trial column fixed to 0). */
int gasdet_gas_trace_csv(const gasdet_gas_result* res, char** text);
void gasdet_gas_result_free(gasdet_gas_result* res);

/* ---- resource formulas ----------------------------------------------------- */

/* counts[0..5] = H, Rz, CRz, CCRz, higher-controlled, IQFT blocks. */
int gasdet_budget_state_prep(int n, int m, int l_taps, long counts[6]);
int gasdet_grover_optimal(double search_size, double marked, long* iterations);

/* ---- experiment harness ----------------------------------------------------- */

typedef struct gasdet_experiment gasdet_experiment;

/* `config_text` uses the flat `key = value` schema described in the README. */
int gasdet_experiment_new(const char* config_text, gasdet_experiment** out);
int gasdet_experiment_run(gasdet_experiment* exp);

/* Valid until the experiment is freed. Empty string when not applicable. */
const char* gasdet_experiment_output(const gasdet_experiment* exp);
const char* gasdet_experiment_trace(const gasdet_experiment* exp);
void gasdet_experiment_free(gasdet_experiment* exp);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GASDET_GASDET_H */
