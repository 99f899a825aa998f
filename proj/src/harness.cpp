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

#include "holevo/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "holevo/blockpos.hpp"
#include "holevo/channel.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/error.hpp"
#include "holevo/rng.hpp"

namespace holevo {

using io::Json;

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Theorem1: return "theorem1";
        case Scenario::Theorem2: return "theorem2";
        case Scenario::Counterexample: return "counterexample";
        case Scenario::Naimark: return "naimark";
        case Scenario::Lemma2: return "lemma2";
        case Scenario::KChain: return "kchain";
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name) {
    for (Scenario s : {Scenario::Theorem1, Scenario::Theorem2, Scenario::Counterexample, Scenario::Naimark,
                       Scenario::Lemma2, Scenario::KChain}) {
        if (scenario_name(s) == name) return s;
    }
    fail(ErrorCode::ConfigError, "unknown scenario '" + std::string(name) + "'");
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::ConditionNotMet: return "condition_not_met";
        case Verdict::NoneFound: return "none_found";
    }
    return "unknown";
}

void CampaignConfig::validate() const {
    if (trials < 1) fail(ErrorCode::ConfigError, "trials must be at least 1");
    const auto at_most = [](std::size_t v, std::size_t hi, const char* name) {
        if (v > hi) fail(ErrorCode::ConfigError, std::string(name) + " must be at most " + std::to_string(hi));
    };
    at_most(dim_a, 64, "dim-a");
    at_most(dim_b, 64, "dim-b");
    switch (scenario) {
        case Scenario::Theorem1:
        case Scenario::Naimark:
            if (dim_a && dim_b && rank > dim_a * dim_b) fail(ErrorCode::ConfigError, "rank exceeds dA * dB");
            if (dim_a * std::max<std::size_t>(dim_b, 4) * std::max<std::size_t>(kraus_count, 6) > 512 &&
                scenario == Scenario::Naimark) {
                fail(ErrorCode::ConfigError, "dilated space too large");
            }
            break;
        case Scenario::Theorem2:
            if (ensemble_size != 0 && ensemble_size != 3) fail(ErrorCode::ConfigError, "theorem2 needs ensemble size 3");
            break;
        case Scenario::Counterexample:
            if (ensemble_size != 0 && ensemble_size < 2) fail(ErrorCode::ConfigError, "ensemble size must be >= 2");
            break;
        case Scenario::KChain:
            if (ensemble_size != 0 && ensemble_size < 2) fail(ErrorCode::ConfigError, "block count K must be >= 2");
            break;
        case Scenario::Lemma2: break;
    }
}

namespace {

std::string hex64(std::uint64_t x) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = kHex[x & 0xfU];
        x >>= 4;
    }
    return out;
}

std::size_t pick(std::size_t fixed, std::size_t lo, std::size_t hi, Rng& rng) {
    return fixed != 0 ? fixed : lo + rng.uniform_index(hi - lo + 1);
}

Json base_row(const CampaignConfig& cfg, std::size_t index) {
    const std::uint64_t stream = Rng::stream_seed(cfg.seed, index);
    return Json{{"scenario", scenario_name(cfg.scenario)},
                {"trial", index},
                {"seed", cfg.seed},
                {"input_digest", hex64(stream)}};
}

TrialReport finish(Json row, std::size_t index, Verdict v, std::optional<double> margin = std::nullopt) {
    row["verdict"] = verdict_name(v);
    return TrialReport{index, v, margin, std::move(row)};
}

TrialReport theorem1_trial(const CampaignConfig& cfg, std::size_t index, bool inputs) {
    const Tolerances& tol = cfg.tolerances;
    Rng rng = Rng::for_stream(cfg.seed, index);
    const std::size_t da = pick(cfg.dim_a, 2, 4, rng);
    const std::size_t db = pick(cfg.dim_b, 2, 4, rng);
    const std::size_t rank = pick(cfg.rank, 1, da * db, rng);
    const std::size_t k = pick(cfg.kraus_count, 1, db * db, rng);
    const DensityMatrix rho = random_bipartite(da, db, rank, rng);
    const KrausChannel ch = random_channel(db, k, rng);
    const Theorem1Check c = check_theorem1(rho, ch, tol);

    Json row = base_row(cfg, index);
    row.update(Json{{"dA", da}, {"dB", db}, {"K", k}, {"rank", rank}, {"chi", c.chi}, {"S_A", c.entropy_a},
                    {"S_B", c.entropy_b}, {"margin", c.margin}, {"outcomes", c.outcomes},
                    {"dropped_mass", c.dropped_mass}, {"average_residual", c.average_residual},
                    {"form_deviation", c.form_deviation}});
    if (inputs) row["inputs"] = Json{{"state", io::to_json(rho)}, {"channel", io::to_json(ch)}};
    const bool ok = c.pass && c.average_residual <= 1e-9 && c.form_deviation <= tol.dilation_tol;
    return finish(std::move(row), index, ok ? Verdict::Pass : Verdict::Fail, c.margin);
}

TrialReport theorem2_trial(const CampaignConfig& cfg, std::size_t index, bool inputs) {
    const Tolerances& tol = cfg.tolerances;
    Rng rng = Rng::for_stream(cfg.seed, index);
    const std::size_t d = pick(cfg.dim_a, 3, 3, rng);
    const Ensemble ens = cfg.triples == TripleGenerator::Commuting ? random_commuting_triple(d, rng, tol)
                                                                   : random_mixed_ensemble(3, d, rng, tol);
    const Theorem2Check c = check_theorem2(ens, tol);

    Json row = base_row(cfg, index);
    row.update(Json{{"d", d},
                    {"generator", cfg.triples == TripleGenerator::Commuting ? "commuting" : "generic"},
                    {"residual_uvw", c.residual_uvw},
                    {"product_ranks", c.product_ranks},
                    {"chi", c.chi},
                    {"S_corr", c.s_corr},
                    {"corr_min_eig", c.corr_min_eigenvalue},
                    {"condition_met", c.condition_met}});
    if (inputs) row["inputs"] = Json{{"ensemble", io::to_json(ens)}};
    if (!c.condition_met) {
        row["exploratory_margin"] = c.margin;
        return finish(std::move(row), index, Verdict::ConditionNotMet);
    }
    row.update(Json{{"margin", c.margin}, {"rho_ab_min_eig", c.rho_ab_min_eigenvalue},
                    {"trace_b_residual", c.trace_b_residual}, {"trace_a_residual", c.trace_a_residual},
                    {"induced_chi", c.induced_chi}});
    const bool ok = c.verdict == Theorem2Verdict::Pass && c.trace_a_residual <= 1e-8 && c.trace_b_residual <= 1e-8;
    return finish(std::move(row), index, ok ? Verdict::Pass : Verdict::Fail, c.margin);
}

TrialReport counterexample_trial(const CampaignConfig& cfg, std::size_t index, bool inputs) {
    const Tolerances& tol = cfg.tolerances;
    const std::size_t n = cfg.ensemble_size ? cfg.ensemble_size : 4;
    const std::size_t d = cfg.dim_a ? cfg.dim_a : 2;
    Rng rng = Rng::for_stream(cfg.seed, index);
    const Ensemble ens = random_pure_ensemble(n, d, rng, tol);
    const CorrelationMatrix c = correlation_matrix(ens, tol);
    Json row = base_row(cfg, index);
    row.update(Json{{"N", n}, {"d", d}, {"min_eig", c.min_eigenvalue}});
    if (inputs) row["inputs"] = Json{{"ensemble", io::to_json(ens)}};
    if (c.min_eigenvalue >= -tol.counterexample_tol) return finish(std::move(row), index, Verdict::NoneFound);
    const auto eig = hermitian_eig(c.mat, tol.herm_tol);
    const Vector w = eig.eigenvectors.col(eig.eigenvectors.cols() - 1);
    const double rq = inner(w, c.mat * std::span<const Complex>(w)).real();
    Json witness = Json::array();
    for (const auto& z : w) witness.push_back(Json::array({z.real(), z.imag()}));
    row.update(Json{{"witness", std::move(witness)}, {"rayleigh", rq}, {"correlation", io::to_json(c.mat)},
                    {"ensemble", io::to_json(ens)}});
    return finish(std::move(row), index, Verdict::Pass);
}

TrialReport naimark_trial(const CampaignConfig& cfg, std::size_t index, bool inputs) {
    const Tolerances& tol = cfg.tolerances;
    Rng rng = Rng::for_stream(cfg.seed, index);
    const std::size_t db = pick(cfg.dim_b, 2, 4, rng);
    const std::size_t k = pick(cfg.kraus_count, 1, 6, rng);
    const std::size_t da = pick(cfg.dim_a, 2, 3, rng);
    const std::size_t rank = pick(cfg.rank, 1, da * db, rng);
    const KrausChannel ch = random_channel(db, k, rng);
    const DensityMatrix rho = random_bipartite(da, db, rank, rng);

    const NaimarkDilation dil = naimark_dilate(ch, tol);
    const DilationResiduals res = dilation_residuals(dil, ch);
    const double stats = dilation_statistics_residual(dil, ch, partial_trace(rho, Subsystem::B, tol));
    const InducedEnsemble direct = induce_ensemble(rho, ch, KrausForm::Kraus, tol);
    const InducedEnsemble dilated = induce_ensemble_dilated(rho, dil, tol);
    const double deviation = ensemble_deviation(direct, dilated);

    Json row = base_row(cfg, index);
    row.update(Json{{"dA", da}, {"dB", db}, {"K", k}, {"rank", rank}, {"ancilla_dim", dil.ancilla_dim},
                    {"compression_residual", res.max_compression}, {"projector_residual", res.max_projector},
                    {"resolution_residual", res.resolution}, {"statistics_residual", stats},
                    {"ensemble_deviation", deviation}});
    if (inputs) row["inputs"] = Json{{"state", io::to_json(rho)}, {"channel", io::to_json(ch)}};
    const bool ok = res.max_compression <= tol.dilation_tol && res.max_projector <= tol.projector_tol &&
                    res.resolution <= tol.projector_tol && stats <= tol.projector_tol &&
                    deviation <= tol.dilation_tol;
    return finish(std::move(row), index, ok ? Verdict::Pass : Verdict::Fail);
}

TrialReport lemma2_trial(const CampaignConfig& cfg, std::size_t index, bool inputs) {
    const Tolerances& tol = cfg.tolerances;
    Rng rng = Rng::for_stream(cfg.seed, index);
    const std::size_t d = pick(cfg.dim_a, 2, 4, rng);
    const bool constructed = index % 2 == 0;
    const Matrix u = random_haar_unitary(d, rng);
    const Matrix w = random_haar_unitary(d, rng);
    const Matrix v = constructed ? u * w : random_haar_unitary(d, rng);
    const Lemma2Result r = lemma2_check(u, v, w, tol);

    Json row = base_row(cfg, index);
    row.update(Json{{"d", d}, {"construction", constructed ? "V=UW" : "independent"}, {"is_psd", r.is_psd},
                    {"min_eig", r.min_eigenvalue}, {"residual_vuw", r.residual_vuw}, {"consistent", r.consistent}});
    if (inputs) row["inputs"] = Json{{"U", io::to_json(u)}, {"V", io::to_json(v)}, {"W", io::to_json(w)}};
    bool ok = r.consistent;
    if (!constructed && r.residual_vuw > 0.1) ok = ok && r.min_eigenvalue < 0.0;
    return finish(std::move(row), index, ok ? Verdict::Pass : Verdict::Fail);
}

TrialReport kchain_trial(const CampaignConfig& cfg, std::size_t index, bool inputs) {
    const Tolerances& tol = cfg.tolerances;
    Rng rng = Rng::for_stream(cfg.seed, index);
    const std::size_t k = pick(cfg.ensemble_size, 3, 5, rng);
    const std::size_t d = pick(cfg.dim_a, 2, 3, rng);
    const UnitaryChain chain = random_chain(k, d, rng);
    const UnitaryChain stack = stack_from_chain(chain);
    const Matrix pa = chain_to_p(chain, tol);
    const KBlockResiduals res = kblock_residuals(pa, k, d, tol);
    const double equivalence = forms_equivalence_check(chain, stack, tol);
    const UnitaryChain back = chain_from_stack(stack);
    double roundtrip = 0.0;
    for (std::size_t i = 0; i < chain.factors.size(); ++i)
        roundtrip = std::max(roundtrip, distance(chain.factors[i], back.factors[i]));

    Json row = base_row(cfg, index);
    row.update(Json{{"K", k}, {"d", d}, {"idempotence_residual", res.idempotence},
                    {"trace_residual", res.trace}, {"min_eig", res.min_eigenvalue},
                    {"equivalence_residual", equivalence}, {"roundtrip_residual", roundtrip}});
    bool ok = res.idempotence <= 1e-8 && res.trace <= 1e-8 && equivalence <= 1e-9 && roundtrip <= 1e-9 &&
              res.min_eigenvalue >= -tol.block_psd_tol;
    if (k == 3) {
        const Lemma2Result l2 = lemma2_check(chain.factors[0], chain.factors[0] * chain.factors[1],
                                             chain.factors[1], tol);
        row["lemma2_min_eig"] = l2.min_eigenvalue;
        ok = ok && l2.is_psd && l2.consistent;
    }
    if (inputs) row["inputs"] = Json{{"chain", io::to_json(chain)}};
    return finish(std::move(row), index, ok ? Verdict::Pass : Verdict::Fail);
}

std::string csv_cell(const Json& row, const char* key) {
    const auto it = row.find(key);
    if (it == row.end() || it->is_null()) return {};
    if (it->is_string()) return it->get<std::string>();
    return it->dump();
}

}  // namespace

TrialReport run_trial(const CampaignConfig& cfg, std::size_t index, bool include_inputs) {
    switch (cfg.scenario) {
        case Scenario::Theorem1: return theorem1_trial(cfg, index, include_inputs);
        case Scenario::Theorem2: return theorem2_trial(cfg, index, include_inputs);
        case Scenario::Counterexample: return counterexample_trial(cfg, index, include_inputs);
        case Scenario::Naimark: return naimark_trial(cfg, index, include_inputs);
        case Scenario::Lemma2: return lemma2_trial(cfg, index, include_inputs);
        case Scenario::KChain: return kchain_trial(cfg, index, include_inputs);
    }
    fail(ErrorCode::Internal, "unhandled scenario");
}

std::string render_report(const CampaignConfig& cfg, const std::vector<TrialReport>& reports) {
    std::ostringstream out;
    if (cfg.format == ReportFormat::Csv) {
        out << "trial,dA,dB,K,chi,S_A,S_B,margin,verdict\n";
        for (const auto& r : reports) {
            const Json& row = r.row;
            const std::string da = row.contains("dA") ? csv_cell(row, "dA") : csv_cell(row, "d");
            out << r.trial << ',' << da << ',' << csv_cell(row, "dB") << ',' << csv_cell(row, "K") << ','
                << csv_cell(row, "chi") << ',' << csv_cell(row, "S_A") << ',' << csv_cell(row, "S_B") << ','
                << csv_cell(row, "margin") << ',' << csv_cell(row, "verdict") << '\n';
        }
    } else {
        for (const auto& r : reports) out << r.row.dump() << '\n';
    }
    return out.str();
}

Json config_to_json(const CampaignConfig& cfg) {
    Json tol = Json::object();
    for (const auto& key : Tolerances::keys()) tol[key] = cfg.tolerances.get(key);
    return Json{{"scenario", scenario_name(cfg.scenario)},
                {"trials", cfg.trials},
                {"dim_a", cfg.dim_a},
                {"dim_b", cfg.dim_b},
                {"ensemble_size", cfg.ensemble_size},
                {"kraus", cfg.kraus_count},
                {"rank", cfg.rank},
                {"seed", cfg.seed},
                {"triples", cfg.triples == TripleGenerator::Commuting ? "commuting" : "generic"},
                {"format", cfg.format == ReportFormat::Csv ? "csv" : "jsonl"},
                {"tolerances", std::move(tol)}};
}

Json summary_to_json(const CampaignSummary& s) {
    Json j{{"scenario", scenario_name(s.scenario)},
           {"trials", s.trials},
           {"passes", s.passes},
           {"fails", s.fails},
           {"condition_not_met", s.condition_not_met},
           {"none_found", s.none_found},
           {"elapsed_seconds", s.elapsed_seconds},
           {"exit_status", s.exit_status}};
    j["worst_margin"] = s.worst_margin ? Json(*s.worst_margin) : Json(nullptr);
    if (s.scenario == Scenario::Theorem2 && s.trials > 0) {
        j["condition_met_fraction"] = static_cast<double>(s.passes + s.fails) / static_cast<double>(s.trials);
    }
    if (s.scenario == Scenario::Counterexample) {
        j["found"] = !s.witness.is_null();
        if (!s.witness.is_null()) j["witness"] = s.witness;
    }
    return j;
}

CampaignResult run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const auto started = std::chrono::steady_clock::now();
    CampaignResult result;
    auto& reports = result.reports;

    if (cfg.scenario == Scenario::Counterexample) {
        // Sequential: the search stops at the first violator.
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            reports.push_back(run_trial(cfg, t));
            if (reports.back().verdict == Verdict::Pass) break;
        }
    } else {
        reports.resize(cfg.trials);
        const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
        const std::size_t workers = std::min(cfg.threads ? cfg.threads : hw, cfg.trials);
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        {
            std::vector<std::jthread> pool;
            for (std::size_t w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    for (std::size_t t = next++; t < cfg.trials; t = next++) {
                        try {
                            reports[t] = run_trial(cfg, t);
                        } catch (...) {
                            std::lock_guard lock(error_mutex);
                            if (!error) error = std::current_exception();
                            next = cfg.trials;
                        }
                    }
                });
            }
        }
        if (error) std::rethrow_exception(error);
    }

    CampaignSummary& s = result.summary;
    s.scenario = cfg.scenario;
    s.trials = reports.size();
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::Pass: ++s.passes; break;
            case Verdict::Fail: ++s.fails; break;
            case Verdict::ConditionNotMet: ++s.condition_not_met; break;
            case Verdict::NoneFound: ++s.none_found; break;
        }
        if (r.margin) s.worst_margin = s.worst_margin ? std::min(*s.worst_margin, *r.margin) : *r.margin;
    }
    if (cfg.scenario == Scenario::Counterexample) {
        const bool found = !reports.empty() && reports.back().verdict == Verdict::Pass;
        if (found) {
            const Json& row = reports.back().row;
            s.witness = Json{{"trial", row["trial"]}, {"min_eig", row["min_eig"]}, {"vector", row["witness"]},
                             {"rayleigh", row["rayleigh"]}};
        }
        s.exit_status = found ? 0 : 1;
    } else {
        s.exit_status = s.fails == 0 ? 0 : 1;
    }
    s.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path, std::ios::binary | std::ios::trunc);
        if (!out) fail(ErrorCode::IoError, "cannot write '" + cfg.output_path + "'");
        out << render_report(cfg, reports);
        if (!out) fail(ErrorCode::IoError, "write to '" + cfg.output_path + "' failed");

        std::ofstream csv(cfg.output_path + ".summary.csv", std::ios::binary | std::ios::trunc);
        if (!csv) fail(ErrorCode::IoError, "cannot write summary next to '" + cfg.output_path + "'");
        csv << "scenario,trials,passes,fails,condition_not_met,none_found,worst_margin,exit_status\n"
            << scenario_name(s.scenario) << ',' << s.trials << ',' << s.passes << ',' << s.fails << ','
            << s.condition_not_met << ',' << s.none_found << ','
            << (s.worst_margin ? Json(*s.worst_margin).dump() : std::string()) << ',' << s.exit_status << '\n';

        const std::time_t now = std::time(nullptr);
        char stamp[32] = {};
        std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        Json meta{{"written_at", stamp}, {"elapsed_seconds", s.elapsed_seconds}, {"config", config_to_json(cfg)},
                  {"summary", summary_to_json(s)}};
        std::ofstream meta_out(cfg.output_path + ".meta.json", std::ios::binary | std::ios::trunc);
        if (!meta_out) fail(ErrorCode::IoError, "cannot write metadata next to '" + cfg.output_path + "'");
        meta_out << meta.dump(2) << '\n';
    }
    return result;
}

namespace {

void expect_docs(std::string_view scenario, const std::vector<Json>& docs, std::size_t lo, std::size_t hi) {
    if (docs.size() < lo || docs.size() > hi) {
        fail(ErrorCode::ConfigError, std::string(scenario) + " takes " + std::to_string(lo) +
                                         (lo == hi ? "" : "-" + std::to_string(hi)) + " input document(s), got " +
                                         std::to_string(docs.size()));
    }
}

Json witness_json(const ContractionWitness& w) {
    return Json{{"R1", io::to_json(w.r1)}, {"R2", io::to_json(w.r2)}, {"R3", io::to_json(w.r3)}, {"norms", w.norms}};
}

}  // namespace

Json check_instance(std::string_view scenario, const std::vector<Json>& docs, const Tolerances& tol) {
    Json out{{"scenario", scenario}};
    bool ok = false;
    if (scenario == "theorem1") {
        expect_docs(scenario, docs, 2, 2);
        const DensityMatrix rho = io::density_from_json(docs[0], tol, "state");
        const KrausChannel ch = io::channel_from_json(docs[1], tol, "channel");
        const Theorem1Check c = check_theorem1(rho, ch, tol);
        out.update(Json{{"chi", c.chi}, {"S_A", c.entropy_a}, {"S_B", c.entropy_b}, {"margin", c.margin},
                        {"outcomes", c.outcomes}, {"dropped_mass", c.dropped_mass},
                        {"average_residual", c.average_residual}, {"form_deviation", c.form_deviation},
                        {"completeness_residual", validate(ch)}});
        ok = c.pass;
    } else if (scenario == "theorem2") {
        expect_docs(scenario, docs, 1, 1);
        const Ensemble ens = io::ensemble_from_json(docs[0], tol);
        const Theorem2Check c = check_theorem2(ens, tol);
        out.update(Json{{"residual_uvw", c.residual_uvw}, {"product_ranks", c.product_ranks}, {"chi", c.chi},
                        {"S_corr", c.s_corr}, {"corr_min_eig", c.corr_min_eigenvalue},
                        {"condition_met", c.condition_met}});
        if (!c.condition_met) {
            out["exploratory_margin"] = c.margin;
            out["verdict"] = verdict_name(Verdict::ConditionNotMet);
            return out;
        }
        out.update(Json{{"margin", c.margin}, {"rho_ab_min_eig", c.rho_ab_min_eigenvalue},
                        {"trace_b_residual", c.trace_b_residual}, {"trace_a_residual", c.trace_a_residual}});
        ok = c.verdict == Theorem2Verdict::Pass;
    } else if (scenario == "correlation") {
        expect_docs(scenario, docs, 1, 1);
        const Ensemble ens = io::ensemble_from_json(docs[0], tol);
        const CorrelationMatrix c = correlation_matrix(ens, tol);
        out.update(Json{{"correlation", io::to_json(c.mat)}, {"min_eig", c.min_eigenvalue},
                        {"is_psd", c.min_eigenvalue >= -tol.psd_tol}, {"source_digest", c.source_digest},
                        {"chi", holevo(ens, LogBase::Bits, tol)}});
        ok = true;
    } else if (scenario == "two-state") {
        expect_docs(scenario, docs, 1, 1);
        const Ensemble ens = io::ensemble_from_json(docs[0], tol);
        const double residual = two_state_equality_check(ens, tol);
        out["residual"] = residual;
        ok = residual <= 1e-9;
    } else if (scenario == "naimark") {
        expect_docs(scenario, docs, 1, 2);
        const KrausChannel ch = io::channel_from_json(docs[0], tol, "channel");
        const NaimarkDilation dil = naimark_dilate(ch, tol);
        const DilationResiduals res = dilation_residuals(dil, ch);
        out.update(Json{{"dilation", io::to_json(dil)}, {"compression_residuals", res.compression},
                        {"projector_residual", res.max_projector}, {"resolution_residual", res.resolution}});
        ok = res.max_compression <= tol.dilation_tol && res.max_projector <= tol.projector_tol &&
             res.resolution <= tol.projector_tol;
        if (docs.size() == 2) {
            const DensityMatrix rho_b = io::density_from_json(docs[1], tol, "state");
            const double stats = dilation_statistics_residual(dil, ch, rho_b);
            out["statistics_residual"] = stats;
            ok = ok && stats <= tol.projector_tol;
        }
    } else if (scenario == "lemma1") {
        expect_docs(scenario, docs, 1, 1);
        const Block3 blk = io::block3_from_json(docs[0]);
        const PsdVerdict v = is_psd_block(blk, tol);
        out.update(Json{{"is_psd", v.is_psd}, {"min_eig", v.min_eigenvalue}});
        ok = true;
        if (v.is_psd) {
            const ContractionWitness w = lemma1_witness(blk, tol);
            out["witnesses"] = witness_json(w);
            out["residuals"] = Json{{"D", w.residual_d}, {"F", w.residual_f}, {"E", w.residual_e}};
            try {
                lemma1_decompose(blk, tol);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::ReconstructionFailure) throw;
                out["error"] = e.detail();
                ok = false;
            }
        }
    } else if (scenario == "lemma2") {
        expect_docs(scenario, docs, 1, 1);
        const Matrix u = io::matrix_from_json(docs[0].value("U", Json()), "U");
        const Matrix v = io::matrix_from_json(docs[0].value("V", Json()), "V");
        const Matrix w = io::matrix_from_json(docs[0].value("W", Json()), "W");
        const Lemma2Result r = lemma2_check(u, v, w, tol);
        out.update(Json{{"is_psd", r.is_psd}, {"min_eig", r.min_eigenvalue}, {"residual_vuw", r.residual_vuw},
                        {"consistent", r.consistent}});
        ok = r.consistent;
    } else if (scenario == "kchain") {
        expect_docs(scenario, docs, 1, 2);
        const UnitaryChain a = io::chain_from_json(docs[0], "chain");
        const Matrix p = to_p(a, tol);
        const KBlockResiduals res = kblock_residuals(p, a.blocks(), a.dim(), tol);
        out.update(Json{{"K", a.blocks()}, {"d", a.dim()}, {"P", io::to_json(p)},
                        {"idempotence_residual", res.idempotence}, {"trace_residual", res.trace},
                        {"min_eig", res.min_eigenvalue}, {"is_psd", res.min_eigenvalue >= -tol.block_psd_tol}});
        ok = res.idempotence <= 1e-8 && res.min_eigenvalue >= -tol.block_psd_tol;
        if (docs.size() == 2) {
            const UnitaryChain b = io::chain_from_json(docs[1], "chain2");
            const double eq = forms_equivalence_check(a, b, tol);
            out["equivalence_residual"] = eq;
            ok = ok && eq < 1e-9;
        }
    } else {
        fail(ErrorCode::ConfigError, "unknown instance scenario '" + std::string(scenario) + "'");
    }
    out["verdict"] = verdict_name(ok ? Verdict::Pass : Verdict::Fail);
    return out;
}

}  // namespace holevo
