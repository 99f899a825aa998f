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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "holevo/blockpos.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/error.hpp"
#include "holevo/harness.hpp"
#include "test_support.hpp"

namespace holevo {
namespace {

using io::Json;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

CampaignConfig campaign(Scenario s, std::size_t trials, std::uint64_t seed) {
    CampaignConfig c;
    c.scenario = s;
    c.trials = trials;
    c.seed = seed;
    return c;
}

Outcome theorem1_campaign() {
    const CampaignResult r = run_campaign(campaign(Scenario::Theorem1, 1000, 42));
    std::size_t violations = 0;
    double worst = 1e300;
    for (const auto& rep : r.reports) {
        const double chi = rep.row["chi"].get<double>();
        const double bound = std::min(rep.row["S_A"].get<double>(), rep.row["S_B"].get<double>());
        worst = std::min(worst, bound - chi);
        if (chi > bound + 1e-7 || rep.verdict != Verdict::Pass) ++violations;
    }
    return {violations == 0 && r.reports.size() == 1000,
            std::to_string(r.reports.size()) + " trials, " + std::to_string(violations) + " violations, worst margin " +
                fmt("%.3e", worst)};
}

Outcome tightness() {
    const double s = 1 / std::sqrt(2.0);
    const DensityMatrix bell = DensityMatrix::pure(Vector{s, 0.0, 0.0, s}, BipartiteDims{2, 2});
    const Theorem1Check b = check_theorem1(bell, projective_from_basis(basis_from_columns(Matrix::identity(2))));
    const double dev = std::max({std::abs(b.chi - 1), std::abs(b.entropy_a - 1), std::abs(b.entropy_b - 1)});
    Rng rng(2024);
    double worst_product = 0.0;
    for (int k = 0; k < 50; ++k) {
        const std::size_t da = 2 + rng.uniform_index(3), db = 2 + rng.uniform_index(3);
        const DensityMatrix a = random_density(da, 1 + rng.uniform_index(da), rng);
        const DensityMatrix bb = random_density(db, 1 + rng.uniform_index(db), rng);
        const DensityMatrix ab(kron(a.matrix(), bb.matrix()), BipartiteDims{da, db});
        const KrausChannel ch = random_channel(db, 1 + rng.uniform_index(db * db), rng);
        worst_product = std::max(worst_product, check_theorem1(ab, ch).chi);
    }
    return {dev <= 1e-9 && worst_product <= 1e-9,
            "Bell deviation " + fmt("%.2e", dev) + ", max product chi " + fmt("%.2e", worst_product) + " over 50"};
}

Outcome refinement() {
    Rng rng(3003);
    double worst = 1e300;
    std::size_t bad = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t da = 2 + rng.uniform_index(2), db = 2 + rng.uniform_index(3);
        const DensityMatrix rho = random_bipartite(da, db, 1 + rng.uniform_index(da * db), rng);
        const auto basis = basis_from_columns(random_haar_unitary(db, rng));
        const RefinementCheck r = refinement_check(rho, random_partition(db, rng), basis);
        worst = std::min(worst, r.gap);
        if (r.gap < -1e-9) ++bad;
    }
    return {bad == 0, "200 pairs, min gap " + fmt("%.3e", worst)};
}

Outcome naimark() {
    const CampaignResult r = run_campaign(campaign(Scenario::Naimark, 200, 4004));
    double comp = 0, proj = 0, resol = 0, dev = 0;
    std::size_t max_db = 0, max_k = 0;
    for (const auto& rep : r.reports) {
        comp = std::max(comp, rep.row["compression_residual"].get<double>());
        proj = std::max(proj, rep.row["projector_residual"].get<double>());
        resol = std::max(resol, rep.row["resolution_residual"].get<double>());
        dev = std::max(dev, rep.row["ensemble_deviation"].get<double>());
        max_db = std::max(max_db, rep.row["dB"].get<std::size_t>());
        max_k = std::max(max_k, rep.row["K"].get<std::size_t>());
    }
    const bool ok = comp <= 1e-8 && proj <= 1e-9 && resol <= 1e-9 && dev <= 1e-8 && max_db <= 4 && max_k <= 6;
    return {ok, "compression " + fmt("%.1e", comp) + ", projector " + fmt("%.1e", proj) + ", resolution " +
                    fmt("%.1e", resol) + ", ensemble deviation " + fmt("%.1e", dev)};
}

Outcome correlation_positivity() {
    Rng rng(5005);
    double worst = 1e300;
    std::size_t bad = 0;
    for (std::size_t n : {2u, 3u}) {
        for (int k = 0; k < 500; ++k) {
            const std::size_t d = 2 + rng.uniform_index(3);
            const Ensemble e = k % 2 ? random_pure_ensemble(n, d, rng) : random_mixed_ensemble(n, d, rng);
            const double m = correlation_matrix(e).min_eigenvalue;
            worst = std::min(worst, m);
            if (m < -1e-9) ++bad;
        }
    }
    return {bad == 0, "1000 ensembles, min eigenvalue " + fmt("%.3e", worst)};
}

Outcome counterexample() {
    CampaignConfig c = campaign(Scenario::Counterexample, 10000, 6006);
    c.ensemble_size = 4;
    c.dim_a = 2;
    const CampaignResult r = run_campaign(c);
    if (r.summary.exit_status != 0) return {false, "no violator in 10000 trials"};
    const Json& row = r.reports.back().row;
    // Independent recheck: rebuild the ensemble from the logged row, recompute
    // C from pure-state overlaps and diagonalize with Eigen.
    const Ensemble e = io::ensemble_from_json(row["ensemble"]);
    const std::size_t n = e.size();
    Eigen::MatrixXd cm(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector vi = hermitian_eig(e[i].rho.matrix()).eigenvectors.col(0);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector vj = hermitian_eig(e[j].rho.matrix()).eigenvectors.col(0);
            cm(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::sqrt(e[i].p * e[j].p) * std::abs(inner(vi, vj));
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cm);
    const double ref_min = solver.eigenvalues()(0);
    const double logged = row["min_eig"].get<double>();
    Eigen::VectorXd w(n);
    for (std::size_t i = 0; i < n; ++i) w(static_cast<Eigen::Index>(i)) = row["witness"][i][0].get<double>();
    const double rayleigh = w.dot(cm * w) / w.squaredNorm();
    const bool ok = ref_min < -1e-6 && std::abs(ref_min - logged) < 1e-9 && rayleigh < -1e-6;
    return {ok, "trial " + std::to_string(row["trial"].get<std::size_t>()) + ", min eigenvalue " +
                    fmt("%.3e", logged) + ", independent " + fmt("%.3e", ref_min) + ", witness Rayleigh " +
                    fmt("%.3e", rayleigh)};
}

Outcome two_state() {
    Rng rng(7007);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const Ensemble e = random_pure_ensemble(2, 2 + rng.uniform_index(3), rng);
        worst = std::max(worst, two_state_equality_check(e));
    }
    return {worst <= 1e-9, "200 pairs, max |chi - S(C)| " + fmt("%.3e", worst)};
}

Outcome theorem2() {
    CampaignConfig c = campaign(Scenario::Theorem2, 500, 8008);
    c.dim_a = 3;
    const CampaignResult r = run_campaign(c);
    double res = 0, tr = 0, min_eig = 1e300, margin = 1e300;
    std::size_t bad = 0;
    for (const auto& rep : r.reports) {
        if (rep.verdict == Verdict::ConditionNotMet) {
            ++bad;
            continue;
        }
        const Json& row = rep.row;
        res = std::max(res, row["residual_uvw"].get<double>());
        tr = std::max({tr, row["trace_a_residual"].get<double>(), row["trace_b_residual"].get<double>()});
        min_eig = std::min(min_eig, row["rho_ab_min_eig"].get<double>());
        margin = std::min(margin, row["margin"].get<double>());
    }
    const bool ok = bad == 0 && res <= 1e-10 && tr <= 1e-8 && min_eig >= -1e-8 && margin >= -1e-7;
    return {ok, "residual_UVW " + fmt("%.1e", res) + ", min eig " + fmt("%.1e", min_eig) + ", trace residual " +
                    fmt("%.1e", tr) + ", worst margin " + fmt("%.3e", margin)};
}

Outcome lemma2() {
    Rng rng(9009);
    double worst_good = 1e300;
    std::size_t bad = 0, independent_checked = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t d = 2 + rng.uniform_index(3);
        const Matrix u = random_haar_unitary(d, rng), w = random_haar_unitary(d, rng);
        const Lemma2Result good = lemma2_check(u, u * w, w);
        worst_good = std::min(worst_good, good.min_eigenvalue);
        if (good.min_eigenvalue < -1e-9 || !good.consistent) ++bad;
        const Lemma2Result ind = lemma2_check(u, random_haar_unitary(d, rng), w);
        if (!ind.consistent) ++bad;
        if (ind.residual_vuw > 0.1) {
            ++independent_checked;
            if (!(ind.min_eigenvalue < 0.0)) ++bad;
        }
    }
    return {bad == 0, "V=UW min eig " + fmt("%.2e", worst_good) + ", " + std::to_string(independent_checked) +
                          " independent trials non-PSD check, " + std::to_string(bad) + " failures"};
}

Outcome lemma1() {
    Rng rng(1010);
    double norm = 0, res = 0;
    std::size_t failures = 0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t n1 = 1 + rng.uniform_index(3), n2 = 1 + rng.uniform_index(3), n3 = 1 + rng.uniform_index(3);
        const std::size_t n = n1 + n2 + n3;
        const Matrix x = random_ginibre(1 + rng.uniform_index(n), n, rng);
        const Matrix g = x.adjoint() * x;
        const Block3 b{g.block(0, 0, n1, n1), g.block(n1, n1, n2, n2), g.block(n1 + n2, n1 + n2, n3, n3),
                       g.block(0, n1, n1, n2), g.block(0, n1 + n2, n1, n3), g.block(n1, n1 + n2, n2, n3)};
        try {
            const ContractionWitness c = lemma1_decompose(b);
            norm = std::max({norm, c.norms[0], c.norms[1], c.norms[2]});
            res = std::max({res, c.residual_d, c.residual_f, c.residual_e});
        } catch (const Error&) {
            ++failures;
        }
    }
    return {failures == 0 && norm <= 1 + 1e-8 && res <= 1e-7,
            "max norm " + fmt("%.12f", norm) + ", max residual " + fmt("%.2e", res) + ", " +
                std::to_string(failures) + " reconstruction failures"};
}

Outcome kchain() {
    Rng rng(1111);
    double idem = 0, eq = 0;
    for (std::size_t k = 3; k <= 5; ++k) {
        for (std::size_t d = 2; d <= 3; ++d) {
            for (int rep = 0; rep < 20; ++rep) {
                const UnitaryChain chain = random_chain(k, d, rng);
                idem = std::max(idem, kblock_residuals(chain_to_p(chain), k, d).idempotence);
                eq = std::max(eq, forms_equivalence_check(chain, stack_from_chain(chain)));
            }
        }
    }
    return {idem <= 1e-8 && eq <= 1e-9, "||P^2 - KP|| " + fmt("%.2e", idem) + ", form residual " + fmt("%.2e", eq)};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome determinism() {
    const auto dir = std::filesystem::temp_directory_path() / "holevo_acceptance";
    std::filesystem::create_directories(dir);
    bool same = true;
    std::size_t bytes = 0;
    for (Scenario s : {Scenario::Theorem1, Scenario::Theorem2, Scenario::Naimark, Scenario::KChain}) {
        CampaignConfig c = campaign(s, 200, 1212);
        c.output_path = (dir / "first.jsonl").string();
        c.threads = 1;
        run_campaign(c);
        c.output_path = (dir / "second.jsonl").string();
        c.threads = 0;
        run_campaign(c);
        const std::string a = slurp(dir / "first.jsonl");
        same = same && !a.empty() && a == slurp(dir / "second.jsonl");
        bytes += a.size();
    }
    std::filesystem::remove_all(dir);
    return {same, std::to_string(bytes) + " bytes compared across 4 scenarios"};
}

}  // namespace
}  // namespace holevo

int main() {
    using holevo::Outcome;
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"theorem1 campaign: chi <= min(S_A, S_B) + 1e-7 over 1000 trials", holevo::theorem1_campaign},
        {"tightness: Bell chi = S_A = S_B = 1, product chi <= 1e-9", holevo::tightness},
        {"refinement: coarse conditional entropy >= fine - 1e-9 over 200 pairs", holevo::refinement},
        {"naimark dilation over 200 random channels", holevo::naimark},
        {"correlation matrix PSD for N = 2, 3 (1000 ensembles)", holevo::correlation_positivity},
        {"N = 4 counterexample found in 10000 trials and rechecked", holevo::counterexample},
        {"two pure states: |chi - S(C)| <= 1e-9 over 200 pairs", holevo::two_state},
        {"theorem2 pipeline on 500 commuting qutrit triples", holevo::theorem2},
        {"lemma2 biconditional, 200 trials each direction", holevo::lemma2},
        {"lemma1 witness on 200 random PSD block matrices", holevo::lemma1},
        {"K-block forms: P^2 = KP, chain = stack", holevo::kchain},
        {"determinism: identical configs give identical reports", holevo::determinism},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2zu %s | %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                    o.detail.c_str(), secs);
        if (!o.pass) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
