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

#include "holevo_lab.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <utility>
#include <vector>

#include "holevo/channel.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/error.hpp"
#include "holevo/harness.hpp"
#include "holevo/json_io.hpp"
#include "holevo/linalg.hpp"
#include "holevo/qstate.hpp"
#include "holevo/rng.hpp"

struct hl_matrix {
    holevo::Matrix value;
};
struct hl_state {
    holevo::DensityMatrix value;
};
struct hl_channel {
    holevo::KrausChannel value;
};
struct hl_ensemble {
    holevo::Ensemble value;
};
struct hl_config {
    holevo::CampaignConfig value;
};

namespace {

using holevo::ErrorCode;
using holevo::io::Json;

thread_local std::string g_last_error;

hl_status record(ErrorCode code, std::string message) {
    g_last_error = std::move(message);
    return static_cast<hl_status>(code);
}

template <class F>
hl_status guard(F&& body) {
    try {
        body();
        g_last_error.clear();
        return HL_OK;
    } catch (const holevo::Error& e) {
        return record(e.code(), e.what());
    } catch (const nlohmann::json::exception& e) {
        return record(ErrorCode::ParseError, e.what());
    } catch (const std::bad_alloc&) {
        return record(ErrorCode::Internal, "out of memory");
    } catch (const std::exception& e) {
        return record(ErrorCode::Internal, e.what());
    } catch (...) {
        return record(ErrorCode::Internal, "unknown exception");
    }
}

void require(bool ok, const char* what) {
    if (!ok) holevo::fail(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

const holevo::Tolerances& tolerances(const hl_config* cfg) {
    static const holevo::Tolerances defaults{};
    return cfg ? cfg->value.tolerances : defaults;
}

Json parse(const char* text, const char* source) {
    require(text != nullptr, "null document");
    return holevo::io::parse_document(text, source);
}

}  // namespace

extern "C" {

const char* hl_version(void) { return "0.1.0"; }

const char* hl_status_name(hl_status status) {
    if (status < 0 || status > HL_INTERNAL) return "Unknown";
    return holevo::error_code_name(static_cast<ErrorCode>(status)).data();
}

const char* hl_last_error(void) { return g_last_error.c_str(); }

void hl_string_free(char* s) { delete[] s; }

hl_status hl_matrix_create(size_t rows, size_t cols, const double* entries, hl_matrix** out) {
    return guard([&] {
        require(out != nullptr && (entries != nullptr || rows * cols == 0), "null argument");
        std::vector<holevo::Complex> data(rows * cols);
        for (std::size_t k = 0; k < data.size(); ++k) data[k] = {entries[2 * k], entries[2 * k + 1]};
        *out = new hl_matrix{holevo::Matrix(rows, cols, std::move(data))};
    });
}

hl_status hl_matrix_from_json(const char* json, hl_matrix** out) {
    return guard([&] {
        require(out != nullptr, "null output");
        *out = new hl_matrix{holevo::io::matrix_from_json(parse(json, "matrix"))};
    });
}

hl_status hl_matrix_to_json(const hl_matrix* m, char** out) {
    return guard([&] {
        require(m && out, "null argument");
        *out = dup_string(holevo::io::to_json(m->value).dump());
    });
}

void hl_matrix_free(hl_matrix* m) { delete m; }

size_t hl_matrix_rows(const hl_matrix* m) { return m ? m->value.rows() : 0; }
size_t hl_matrix_cols(const hl_matrix* m) { return m ? m->value.cols() : 0; }

hl_status hl_matrix_get(const hl_matrix* m, size_t i, size_t j, double* re, double* im) {
    return guard([&] {
        require(m && re && im, "null argument");
        if (i >= m->value.rows() || j >= m->value.cols()) holevo::fail(ErrorCode::DimensionMismatch, "index out of range");
        *re = m->value(i, j).real();
        *im = m->value(i, j).imag();
    });
}

hl_status hl_matrix_eigvalsh(const hl_matrix* m, double* values, size_t len) {
    return guard([&] {
        require(m && values, "null argument");
        if (len != m->value.rows()) holevo::fail(ErrorCode::DimensionMismatch, "output length must equal rows");
        const auto eig = holevo::hermitian_eig(m->value);
        for (std::size_t k = 0; k < len; ++k) values[k] = eig.eigenvalues[k];
    });
}

hl_status hl_matrix_sqrt(const hl_matrix* m, hl_matrix** out) {
    return guard([&] {
        require(m && out, "null argument");
        *out = new hl_matrix{holevo::matrix_sqrt(m->value, {})};
    });
}

hl_status hl_matrix_trace_norm(const hl_matrix* m, double* out) {
    return guard([&] {
        require(m && out, "null argument");
        *out = holevo::trace_norm(m->value);
    });
}

hl_status hl_state_create(const hl_matrix* m, size_t dim_a, size_t dim_b, const hl_config* cfg, hl_state** out) {
    return guard([&] {
        require(m && out, "null argument");
        std::optional<holevo::BipartiteDims> dims;
        if (dim_a != 0 || dim_b != 0) dims = holevo::BipartiteDims{dim_a, dim_b};
        *out = new hl_state{holevo::DensityMatrix(m->value, dims, tolerances(cfg))};
    });
}

hl_status hl_state_from_json(const char* json, const hl_config* cfg, hl_state** out) {
    return guard([&] {
        require(out != nullptr, "null output");
        *out = new hl_state{holevo::io::density_from_json(parse(json, "state"), tolerances(cfg))};
    });
}

hl_status hl_state_to_json(const hl_state* s, char** out) {
    return guard([&] {
        require(s && out, "null argument");
        *out = dup_string(holevo::io::to_json(s->value).dump());
    });
}

hl_status hl_state_random(size_t dim_a, size_t dim_b, size_t rank, uint64_t seed, hl_state** out) {
    return guard([&] {
        require(out != nullptr, "null output");
        holevo::Rng rng(seed);
        if (dim_b == 0) {
            *out = new hl_state{holevo::random_density(dim_a, rank, rng)};
        } else {
            *out = new hl_state{holevo::random_bipartite(dim_a, dim_b, rank, rng)};
        }
    });
}

void hl_state_free(hl_state* s) { delete s; }

size_t hl_state_dim(const hl_state* s) { return s ? s->value.dim() : 0; }

hl_status hl_state_matrix(const hl_state* s, hl_matrix** out) {
    return guard([&] {
        require(s && out, "null argument");
        *out = new hl_matrix{s->value.matrix()};
    });
}

hl_status hl_state_entropy(const hl_state* s, double* bits) {
    return guard([&] {
        require(s && bits, "null argument");
        *bits = holevo::von_neumann_entropy(s->value);
    });
}

hl_status hl_state_fidelity(const hl_state* a, const hl_state* b, double* out) {
    return guard([&] {
        require(a && b && out, "null argument");
        *out = holevo::fidelity(a->value, b->value);
    });
}

hl_status hl_state_partial_trace(const hl_state* s, int keep, hl_state** out) {
    return guard([&] {
        require(s && out, "null argument");
        require(keep == HL_SUBSYSTEM_A || keep == HL_SUBSYSTEM_B, "keep must be HL_SUBSYSTEM_A or HL_SUBSYSTEM_B");
        const auto which = keep == HL_SUBSYSTEM_A ? holevo::Subsystem::A : holevo::Subsystem::B;
        *out = new hl_state{holevo::partial_trace(s->value, which)};
    });
}

hl_status hl_channel_from_json(const char* json, const hl_config* cfg, hl_channel** out) {
    return guard([&] {
        require(out != nullptr, "null output");
        *out = new hl_channel{holevo::io::channel_from_json(parse(json, "channel"), tolerances(cfg))};
    });
}

hl_status hl_channel_to_json(const hl_channel* ch, char** out) {
    return guard([&] {
        require(ch && out, "null argument");
        *out = dup_string(holevo::io::to_json(ch->value).dump());
    });
}

hl_status hl_channel_random(size_t dim, size_t num_kraus, uint64_t seed, hl_channel** out) {
    return guard([&] {
        require(out != nullptr, "null output");
        holevo::Rng rng(seed);
        *out = new hl_channel{holevo::random_channel(dim, num_kraus, rng)};
    });
}

void hl_channel_free(hl_channel* ch) { delete ch; }

size_t hl_channel_outcomes(const hl_channel* ch) { return ch ? ch->value.num_outcomes() : 0; }

hl_status hl_channel_completeness_residual(const hl_channel* ch, double* out) {
    return guard([&] {
        require(ch && out, "null argument");
        *out = holevo::validate(ch->value);
    });
}

hl_status hl_channel_apply(const hl_channel* ch, const hl_state* rho, hl_state** out) {
    return guard([&] {
        require(ch && rho && out, "null argument");
        *out = new hl_state{holevo::apply(ch->value, rho->value)};
    });
}

hl_status hl_channel_dilate(const hl_channel* ch, char** json_out) {
    return guard([&] {
        require(ch && json_out, "null argument");
        *json_out = dup_string(holevo::io::to_json(holevo::naimark_dilate(ch->value)).dump());
    });
}

hl_status hl_ensemble_from_json(const char* json, const hl_config* cfg, hl_ensemble** out) {
    return guard([&] {
        require(out != nullptr, "null output");
        *out = new hl_ensemble{holevo::io::ensemble_from_json(parse(json, "ensemble"), tolerances(cfg))};
    });
}

hl_status hl_ensemble_to_json(const hl_ensemble* e, char** out) {
    return guard([&] {
        require(e && out, "null argument");
        *out = dup_string(holevo::io::to_json(e->value).dump());
    });
}

hl_status hl_ensemble_induce(const hl_state* rho_ab, const hl_channel* ch, const hl_config* cfg, hl_ensemble** out) {
    return guard([&] {
        require(rho_ab && ch && out, "null argument");
        auto induced = holevo::induce_ensemble(rho_ab->value, ch->value, holevo::KrausForm::Kraus, tolerances(cfg));
        *out = new hl_ensemble{std::move(induced.ensemble)};
    });
}

void hl_ensemble_free(hl_ensemble* e) { delete e; }

size_t hl_ensemble_size(const hl_ensemble* e) { return e ? e->value.size() : 0; }

hl_status hl_ensemble_holevo(const hl_ensemble* e, double* bits) {
    return guard([&] {
        require(e && bits, "null argument");
        *bits = holevo::holevo(e->value);
    });
}

hl_status hl_ensemble_correlation_min_eig(const hl_ensemble* e, double* out) {
    return guard([&] {
        require(e && out, "null argument");
        *out = holevo::correlation_matrix(e->value).min_eigenvalue;
    });
}

hl_status hl_config_create(const char* scenario, hl_config** out) {
    return guard([&] {
        require(scenario && out, "null argument");
        holevo::CampaignConfig cfg;
        cfg.scenario = holevo::parse_scenario(scenario);
        *out = new hl_config{std::move(cfg)};
    });
}

void hl_config_free(hl_config* cfg) { delete cfg; }

#define HL_CONFIG_SETTER(name, field)                         \
    hl_status name(hl_config* cfg, size_t v) {                \
        return guard([&] {                                    \
            require(cfg != nullptr, "null config");           \
            cfg->value.field = v;                             \
        });                                                   \
    }

HL_CONFIG_SETTER(hl_config_set_trials, trials)
HL_CONFIG_SETTER(hl_config_set_ensemble_size, ensemble_size)
HL_CONFIG_SETTER(hl_config_set_kraus, kraus_count)
HL_CONFIG_SETTER(hl_config_set_rank, rank)
HL_CONFIG_SETTER(hl_config_set_threads, threads)

#undef HL_CONFIG_SETTER

hl_status hl_config_set_dims(hl_config* cfg, size_t dim_a, size_t dim_b) {
    return guard([&] {
        require(cfg != nullptr, "null config");
        cfg->value.dim_a = dim_a;
        cfg->value.dim_b = dim_b;
    });
}

hl_status hl_config_set_seed(hl_config* cfg, uint64_t seed) {
    return guard([&] {
        require(cfg != nullptr, "null config");
        cfg->value.seed = seed;
    });
}

hl_status hl_config_set_tol(hl_config* cfg, const char* key, double value) {
    return guard([&] {
        require(cfg && key, "null argument");
        cfg->value.tolerances.set(key, value);
    });
}

hl_status hl_config_set_output(hl_config* cfg, const char* path) {
    return guard([&] {
        require(cfg != nullptr, "null config");
        cfg->value.output_path = path ? path : "";
    });
}

hl_status hl_config_set_format(hl_config* cfg, const char* format) {
    return guard([&] {
        require(cfg && format, "null argument");
        const std::string f = format;
        if (f == "jsonl") {
            cfg->value.format = holevo::ReportFormat::Jsonl;
        } else if (f == "csv") {
            cfg->value.format = holevo::ReportFormat::Csv;
        } else {
            holevo::fail(ErrorCode::ConfigError, "format must be jsonl or csv, got '" + f + "'");
        }
    });
}

hl_status hl_config_set_triples(hl_config* cfg, const char* generator) {
    return guard([&] {
        require(cfg && generator, "null argument");
        const std::string g = generator;
        if (g == "commuting") {
            cfg->value.triples = holevo::TripleGenerator::Commuting;
        } else if (g == "generic") {
            cfg->value.triples = holevo::TripleGenerator::Generic;
        } else {
            holevo::fail(ErrorCode::ConfigError, "triples must be commuting or generic, got '" + g + "'");
        }
    });
}

hl_status hl_config_to_json(const hl_config* cfg, char** out) {
    return guard([&] {
        require(cfg && out, "null argument");
        *out = dup_string(holevo::config_to_json(cfg->value).dump());
    });
}

const char* hl_tolerance_keys(void) {
    static const std::string keys = [] {
        std::string s;
        for (const auto& k : holevo::Tolerances::keys()) s += k + "\n";
        return s;
    }();
    return keys.c_str();
}

hl_status hl_run_campaign(const hl_config* cfg, char** summary, char** report, int* exit_status) {
    return guard([&] {
        require(cfg && summary && exit_status, "null argument");
        const auto result = holevo::run_campaign(cfg->value);
        if (report) *report = dup_string(holevo::render_report(cfg->value, result.reports));
        *summary = dup_string(holevo::summary_to_json(result.summary).dump());
        *exit_status = result.summary.exit_status;
    });
}

hl_status hl_run_trial(const hl_config* cfg, size_t index, int include_inputs, char** row) {
    return guard([&] {
        require(cfg && row, "null argument");
        cfg->value.validate();
        *row = dup_string(holevo::run_trial(cfg->value, index, include_inputs != 0).row.dump());
    });
}

hl_status hl_check_instance(const char* scenario, const char* const* documents, size_t count, const hl_config* cfg,
                            char** verdict) {
    return guard([&] {
        require(scenario && verdict && (documents || count == 0), "null argument");
        std::vector<Json> docs;
        for (std::size_t k = 0; k < count; ++k) {
            docs.push_back(parse(documents[k], ("document " + std::to_string(k + 1)).c_str()));
        }
        *verdict = dup_string(holevo::check_instance(scenario, docs, tolerances(cfg)).dump());
    });
}

hl_status hl_check_instance_files(const char* scenario, const char* const* paths, size_t count, const hl_config* cfg,
                                  char** verdict) {
    return guard([&] {
        require(scenario && verdict && (paths || count == 0), "null argument");
        std::vector<Json> docs;
        for (std::size_t k = 0; k < count; ++k) {
            require(paths[k] != nullptr, "null path");
            docs.push_back(holevo::io::read_document(paths[k]));
        }
        *verdict = dup_string(holevo::check_instance(scenario, docs, tolerances(cfg)).dump());
    });
}

}  // extern "C"
