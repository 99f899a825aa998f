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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holevo/json_io.hpp"
#include "holevo/tolerances.hpp"

namespace holevo {

enum class Scenario { Theorem1, Theorem2, Counterexample, Naimark, Lemma2, KChain };
enum class ReportFormat { Jsonl, Csv };
enum class TripleGenerator { Commuting, Generic };
enum class Verdict { Pass, Fail, ConditionNotMet, NoneFound };

std::string_view scenario_name(Scenario s);
Scenario parse_scenario(std::string_view name);
std::string_view verdict_name(Verdict v);

/// A zero in any of the size fields means "sample per trial" from the
/// scenario's default range.
struct CampaignConfig {
    Scenario scenario = Scenario::Theorem1;
    std::size_t trials = 0;
    std::size_t dim_a = 0;          // d_A, or the state dimension d for ensemble scenarios
    std::size_t dim_b = 0;
    std::size_t ensemble_size = 0;  // N, or the block count K for kchain
    std::size_t kraus_count = 0;
    std::size_t rank = 0;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    std::string output_path;
    ReportFormat format = ReportFormat::Jsonl;
    TripleGenerator triples = TripleGenerator::Commuting;
    std::size_t threads = 0;  // 0: hardware concurrency

    /// Throws ConfigError.
    void validate() const;
};

struct TrialReport {
    std::size_t trial = 0;
    Verdict verdict = Verdict::Fail;
    std::optional<double> margin;
    io::Json row;
};

struct CampaignSummary {
    Scenario scenario = Scenario::Theorem1;
    std::size_t trials = 0;  // trials actually evaluated
    std::size_t passes = 0;
    std::size_t fails = 0;
    std::size_t condition_not_met = 0;
    std::size_t none_found = 0;
    std::optional<double> worst_margin;
    double elapsed_seconds = 0.0;
    int exit_status = 0;
    io::Json witness;  // counterexample scenario only
};

struct CampaignResult {
    CampaignSummary summary;
    std::vector<TrialReport> reports;
};

/// One trial, drawn from stream (cfg.seed, index). With `include_inputs` the
/// row also carries the generated inputs, for replaying a logged failure.
TrialReport run_trial(const CampaignConfig& cfg, std::size_t index, bool include_inputs = false);

/// Runs every trial (concurrently where the scenario allows), writes the
/// report and a "<out>.meta.json" timing file when output_path is set.
/// Exit status: 0 when no trial failed (counterexample: when a violator was
/// found), 1 otherwise.
CampaignResult run_campaign(const CampaignConfig& cfg);

/// Report body exactly as written to disk; depends only on the config and rows.
std::string render_report(const CampaignConfig& cfg, const std::vector<TrialReport>& reports);

io::Json summary_to_json(const CampaignSummary& s);
io::Json config_to_json(const CampaignConfig& cfg);

/// Single-instance verdict. Scenarios and their documents:
///   theorem1: state, channel      theorem2: ensemble      correlation: ensemble
///   two-state: ensemble           naimark: channel [, state on B]
///   lemma1: block                 lemma2: {"U", "V", "W"}  kchain: chain [, chain]
/// The result always carries "scenario" and "verdict".
io::Json check_instance(std::string_view scenario, const std::vector<io::Json>& docs, const Tolerances& tol = {});

}  // namespace holevo
