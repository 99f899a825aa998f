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

// holevo-lab command-line front end. Links only the C interface.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holevo_lab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::size_t trials = 100;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    std::size_t ensemble_size = 0;
    std::size_t kraus = 0;
    std::size_t rank = 0;
    std::uint64_t seed = 42;
    std::vector<std::string> tol;
    std::string out;
    std::string format = "jsonl";
    std::string triples = "commuting";
    std::size_t threads = 0;
    std::optional<std::size_t> replay;
    std::string instance_scenario;
    std::vector<std::string> inputs;
};

struct ConfigDeleter {
    void operator()(hl_config* c) const { hl_config_free(c); }
};
using ConfigPtr = std::unique_ptr<hl_config, ConfigDeleter>;

struct CString {
    char* p = nullptr;
    ~CString() { hl_string_free(p); }
};

class Failure {
public:
    explicit Failure(hl_status s) : status(s) {}
    hl_status status;
};

void check(hl_status s) {
    if (s != HL_OK) throw Failure(s);
}

int report_failure() {
    std::cerr << "holevo-lab: " << hl_last_error() << '\n';
    return kExitUsage;
}

ConfigPtr make_config(const std::string& scenario, const Options& o) {
    hl_config* raw = nullptr;
    check(hl_config_create(scenario.c_str(), &raw));
    ConfigPtr cfg(raw);
    check(hl_config_set_trials(raw, o.trials));
    check(hl_config_set_dims(raw, o.dim_a, o.dim_b));
    check(hl_config_set_ensemble_size(raw, o.ensemble_size));
    check(hl_config_set_kraus(raw, o.kraus));
    check(hl_config_set_rank(raw, o.rank));
    check(hl_config_set_seed(raw, o.seed));
    check(hl_config_set_threads(raw, o.threads));
    check(hl_config_set_format(raw, o.format.c_str()));
    check(hl_config_set_triples(raw, o.triples.c_str()));
    check(hl_config_set_output(raw, o.out.c_str()));
    for (const auto& item : o.tol) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            std::cerr << "holevo-lab: --tol expects KEY=VALUE, got '" << item << "'\n";
            throw Failure(HL_CONFIG_ERROR);
        }
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            std::cerr << "holevo-lab: --tol value for '" << item.substr(0, eq) << "' is not a number\n";
            throw Failure(HL_CONFIG_ERROR);
        }
        check(hl_config_set_tol(raw, item.substr(0, eq).c_str(), value));
    }
    return cfg;
}

int run_campaign(const std::string& scenario, const Options& o) {
    ConfigPtr cfg = make_config(scenario, o);
    if (o.replay) {
        CString row;
        check(hl_run_trial(cfg.get(), *o.replay, 1, &row.p));
        std::cout << row.p << '\n';
        return kExitOk;
    }
    CString summary;
    CString report;
    int exit_status = 0;
    check(hl_run_campaign(cfg.get(), &summary.p, o.out.empty() ? &report.p : nullptr, &exit_status));
    if (o.out.empty()) {
        std::cout << report.p;
        std::cerr << summary.p << '\n';
    } else {
        std::cout << summary.p << '\n';
    }
    return exit_status == 0 ? kExitOk : kExitViolation;
}

int run_instance(const Options& o) {
    ConfigPtr cfg = make_config("theorem1", o);
    std::vector<const char*> paths;
    for (const auto& p : o.inputs) paths.push_back(p.c_str());
    CString verdict;
    check(hl_check_instance_files(o.instance_scenario.c_str(), paths.data(), paths.size(), cfg.get(), &verdict.p));
    std::cout << verdict.p << '\n';
    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary | std::ios::trunc);
        f << verdict.p << '\n';
        if (!f) {
            std::cerr << "holevo-lab: cannot write '" << o.out << "'\n";
            return kExitUsage;
        }
    }
    const std::string text = verdict.p;
    return text.find("\"verdict\":\"fail\"") == std::string::npos ? kExitOk : kExitViolation;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--tol", o.tol, "Tolerance override KEY=VAL (repeatable)")->take_all();
    cmd->add_option("--out", o.out, "Write the report to PATH");
}

void add_campaign(CLI::App* cmd, Options& o) {
    add_common(cmd, o);
    cmd->add_option("--trials", o.trials, "Number of trials")->capture_default_str();
    cmd->add_option("--dim-a", o.dim_a, "Dimension of A (state dimension d for ensemble scenarios); 0 samples");
    cmd->add_option("--dim-b", o.dim_b, "Dimension of B; 0 samples");
    cmd->add_option("--ensemble-size", o.ensemble_size, "Ensemble size N (block count K for kchain-check)");
    cmd->add_option("--kraus", o.kraus, "Kraus operator count; 0 samples");
    cmd->add_option("--rank", o.rank, "Rank of the bipartite state; 0 samples");
    cmd->add_option("--seed", o.seed, "Master seed")->envname("HOLEVO_LAB_SEED")->capture_default_str();
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
    cmd->add_option("--threads", o.threads, "Worker threads; 0 uses all cores");
    cmd->add_option("--replay", o.replay, "Print the row and inputs of one trial index and exit");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeded verification campaigns for Holevo-quantity bounds"};
    app.set_version_flag("--version", std::string(hl_version()));
    app.require_subcommand(1);
    Options o;

    const std::vector<std::pair<std::string, std::string>> campaigns = {
        {"verify-theorem1", "theorem1"},        {"verify-theorem2", "theorem2"},
        {"search-counterexample", "counterexample"}, {"naimark-check", "naimark"},
        {"lemma2-check", "lemma2"},             {"kchain-check", "kchain"}};
    const std::vector<std::string> help = {
        "Bound the induced Holevo quantity by both marginal entropies",
        "Bound a three-state Holevo quantity by the correlation-matrix entropy",
        "Search pure four-state ensembles for a non-PSD correlation matrix",
        "Check the projective dilation of random channels",
        "Check the three-block unitary positivity criterion",
        "Check chain and stacked forms of the K-block projector"};
    std::vector<CLI::App*> cmds;
    for (std::size_t k = 0; k < campaigns.size(); ++k) {
        CLI::App* cmd = app.add_subcommand(campaigns[k].first, help[k]);
        add_campaign(cmd, o);
        if (campaigns[k].second == "theorem2") {
            cmd->add_option("--triples", o.triples, "Triple generator")
                ->check(CLI::IsMember({"commuting", "generic"}))
                ->capture_default_str();
        }
        cmds.push_back(cmd);
    }
    CLI::App* instance = app.add_subcommand("instance", "Check a single instance read from JSON files");
    add_common(instance, o);
    instance->add_option("scenario", o.instance_scenario,
                         "theorem1 | theorem2 | correlation | two-state | naimark | lemma1 | lemma2 | kchain")
        ->required();
    instance->add_option("inputs", o.inputs, "Input JSON documents")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        for (std::size_t k = 0; k < cmds.size(); ++k) {
            if (cmds[k]->parsed()) return run_campaign(campaigns[k].second, o);
        }
        return run_instance(o);
    } catch (const Failure& f) {
        return f.status == HL_CONFIG_ERROR && hl_last_error()[0] == '\0' ? kExitUsage : report_failure();
    }
}
