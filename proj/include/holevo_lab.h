// Copyright 2026 The holevo-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to holevo-lab. All functions return an hl_status; on failure a
 * message is available from hl_last_error() on the calling thread. Strings
 * returned through char** must be released with hl_string_free. Handles are
 * immutable after construction and may be shared across threads. */
#ifndef HOLEVO_LAB_H_
#define HOLEVO_LAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(HOLEVO_LAB_BUILDING)
#define HL_API __attribute__((visibility("default")))
#else
#define HL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int hl_status;

enum {
  HL_OK = 0,
  HL_NOT_HERMITIAN = 1,
  HL_NO_CONVERGENCE = 2,
  HL_NOT_PSD = 3,
  HL_NOT_DENSITY = 4,
  HL_NO_BIPARTITE_SPLIT = 5,
  HL_DIMENSION_MISMATCH = 6,
  HL_BAD_RANK = 7,
  HL_NOT_ORTHONORMAL = 8,
  HL_NOT_PARTITION = 9,
  HL_COMPLETION_FAILURE = 10,
  HL_INVALID_CHANNEL = 11,
  HL_INVALID_ENSEMBLE = 12,
  HL_CONDITION_VIOLATED = 13,
  HL_RECONSTRUCTION_FAILURE = 14,
  HL_NOT_UNITARY = 15,
  HL_NOT_PURE = 16,
  HL_CONFIG_ERROR = 17,
  HL_PARSE_ERROR = 18,
  HL_IO_ERROR = 19,
  HL_INVALID_ARGUMENT = 20,
  HL_INTERNAL = 21
};

enum { HL_SUBSYSTEM_A = 0, HL_SUBSYSTEM_B = 1 };

typedef struct hl_matrix hl_matrix;
typedef struct hl_state hl_state;
typedef struct hl_channel hl_channel;
typedef struct hl_ensemble hl_ensemble;
typedef struct hl_config hl_config;

HL_API const char* hl_version(void);
HL_API const char* hl_status_name(hl_status status);
HL_API const char* hl_last_error(void);
HL_API void hl_string_free(char* s);

/* Matrices. `entries` is row-major, interleaved (re, im), 2*rows*cols doubles. */
HL_API hl_status hl_matrix_create(size_t rows, size_t cols, const double* entries, hl_matrix** out);
HL_API hl_status hl_matrix_from_json(const char* json, hl_matrix** out);
HL_API hl_status hl_matrix_to_json(const hl_matrix* m, char** out);
HL_API void hl_matrix_free(hl_matrix* m);
HL_API size_t hl_matrix_rows(const hl_matrix* m);
HL_API size_t hl_matrix_cols(const hl_matrix* m);
HL_API hl_status hl_matrix_get(const hl_matrix* m, size_t i, size_t j, double* re, double* im);
/* Eigenvalues of a Hermitian matrix in descending order; `len` must equal rows. */
HL_API hl_status hl_matrix_eigvalsh(const hl_matrix* m, double* values, size_t len);
HL_API hl_status hl_matrix_sqrt(const hl_matrix* m, hl_matrix** out);
HL_API hl_status hl_matrix_trace_norm(const hl_matrix* m, double* out);

/* Density matrices. dim_a = dim_b = 0 means no bipartite split. A NULL config
 * selects default tolerances. */
HL_API hl_status hl_state_create(const hl_matrix* m, size_t dim_a, size_t dim_b, const hl_config* cfg,
                                 hl_state** out);
HL_API hl_status hl_state_from_json(const char* json, const hl_config* cfg, hl_state** out);
HL_API hl_status hl_state_to_json(const hl_state* s, char** out);
HL_API hl_status hl_state_random(size_t dim_a, size_t dim_b, size_t rank, uint64_t seed, hl_state** out);
HL_API void hl_state_free(hl_state* s);
HL_API size_t hl_state_dim(const hl_state* s);
HL_API hl_status hl_state_matrix(const hl_state* s, hl_matrix** out);
HL_API hl_status hl_state_entropy(const hl_state* s, double* bits);
HL_API hl_status hl_state_fidelity(const hl_state* a, const hl_state* b, double* out);
HL_API hl_status hl_state_partial_trace(const hl_state* s, int keep, hl_state** out);

/* Channels. */
HL_API hl_status hl_channel_from_json(const char* json, const hl_config* cfg, hl_channel** out);
HL_API hl_status hl_channel_to_json(const hl_channel* ch, char** out);
HL_API hl_status hl_channel_random(size_t dim, size_t num_kraus, uint64_t seed, hl_channel** out);
HL_API void hl_channel_free(hl_channel* ch);
HL_API size_t hl_channel_outcomes(const hl_channel* ch);
HL_API hl_status hl_channel_completeness_residual(const hl_channel* ch, double* out);
HL_API hl_status hl_channel_apply(const hl_channel* ch, const hl_state* rho, hl_state** out);
HL_API hl_status hl_channel_dilate(const hl_channel* ch, char** json_out);

/* Ensembles. */
HL_API hl_status hl_ensemble_from_json(const char* json, const hl_config* cfg, hl_ensemble** out);
HL_API hl_status hl_ensemble_to_json(const hl_ensemble* e, char** out);
HL_API hl_status hl_ensemble_induce(const hl_state* rho_ab, const hl_channel* ch, const hl_config* cfg,
                                    hl_ensemble** out);
HL_API void hl_ensemble_free(hl_ensemble* e);
HL_API size_t hl_ensemble_size(const hl_ensemble* e);
HL_API hl_status hl_ensemble_holevo(const hl_ensemble* e, double* bits);
HL_API hl_status hl_ensemble_correlation_min_eig(const hl_ensemble* e, double* out);

/* Campaign configuration. Scenario names: theorem1, theorem2, counterexample,
 * naimark, lemma2, kchain. Zero-valued sizes are sampled per trial. */
HL_API hl_status hl_config_create(const char* scenario, hl_config** out);
HL_API void hl_config_free(hl_config* cfg);
HL_API hl_status hl_config_set_trials(hl_config* cfg, size_t trials);
HL_API hl_status hl_config_set_dims(hl_config* cfg, size_t dim_a, size_t dim_b);
HL_API hl_status hl_config_set_ensemble_size(hl_config* cfg, size_t n);
HL_API hl_status hl_config_set_kraus(hl_config* cfg, size_t k);
HL_API hl_status hl_config_set_rank(hl_config* cfg, size_t rank);
HL_API hl_status hl_config_set_seed(hl_config* cfg, uint64_t seed);
HL_API hl_status hl_config_set_threads(hl_config* cfg, size_t threads);
HL_API hl_status hl_config_set_tol(hl_config* cfg, const char* key, double value);
HL_API hl_status hl_config_set_output(hl_config* cfg, const char* path);
HL_API hl_status hl_config_set_format(hl_config* cfg, const char* format);   /* jsonl | csv */
HL_API hl_status hl_config_set_triples(hl_config* cfg, const char* generator); /* commuting | generic */
HL_API hl_status hl_config_to_json(const hl_config* cfg, char** out);
/* Newline-separated list of tolerance keys. */
HL_API const char* hl_tolerance_keys(void);

/* Runs the campaign. `summary` receives the JSON summary and, when non-NULL,
 * `report` receives the rendered rows. `exit_status` is 0 on success and 1 on
 * a property violation. */
HL_API hl_status hl_run_campaign(const hl_config* cfg, char** summary, char** report, int* exit_status);
/* Regenerates one trial row, including its inputs when include_inputs != 0. */
HL_API hl_status hl_run_trial(const hl_config* cfg, size_t index, int include_inputs, char** row);

/* Single-instance checks. Scenarios: theorem1, theorem2, correlation,
 * two-state, naimark, lemma1, lemma2, kchain. */
HL_API hl_status hl_check_instance(const char* scenario, const char* const* documents, size_t count,
                                   const hl_config* cfg, char** verdict);
HL_API hl_status hl_check_instance_files(const char* scenario, const char* const* paths, size_t count,
                                         const hl_config* cfg, char** verdict);

#ifdef __cplusplus
}
#endif

#endif /* HOLEVO_LAB_H_ */
