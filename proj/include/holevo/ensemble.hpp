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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "holevo/channel.hpp"
#include "holevo/qstate.hpp"

namespace holevo {

struct EnsembleEntry {
    double p = 0.0;
    DensityMatrix rho;
};

/// Weighted family {(p_mu, rho_mu)} of states on one space. Probabilities
/// must exceed prob_floor and sum to one within `sum_tol`
/// (prob_sum_tol when not given).
class Ensemble {
public:
    explicit Ensemble(std::vector<EnsembleEntry> entries, const Tolerances& tol = {},
                      std::optional<double> sum_tol = std::nullopt);

    const std::vector<EnsembleEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::size_t dim() const noexcept { return entries_.front().rho.dim(); }
    const EnsembleEntry& operator[](std::size_t i) const { return entries_[i]; }

    std::vector<double> probabilities() const;
    /// sum_mu p_mu rho_mu
    Matrix average() const;

private:
    std::vector<EnsembleEntry> entries_;
};

/// FNV-1a over the probabilities and matrix entries, as 16 hex digits.
std::string digest(const Ensemble& ens);

/// S(sum p rho) - sum p S(rho).
double holevo(const Ensemble& ens, LogBase base = LogBase::Bits, const Tolerances& tol = {});

/// Which operator sandwiches rho_AB: the Kraus operator itself or the
/// square root of its POVM element. Both induce the same ensemble.
enum class KrausForm { Kraus, PovmRoot };

struct InducedEnsemble {
    Ensemble ensemble;
    std::vector<std::size_t> outcomes;        // channel outcome index of each kept entry
    std::vector<double> outcome_probabilities;  // p_mu for every outcome, dropped ones included
    double dropped_mass = 0.0;
};

/// Ensemble on A induced by measuring B with operators {O_mu}:
/// p_mu = Tr[(1 (x) O) rho (1 (x) O)^dagger], rho_{A,mu} = Tr_B[...] / p_mu.
/// Outcomes with p_mu <= prob_floor are dropped, never renormalized.
InducedEnsemble induce_ensemble(const DensityMatrix& rho_ab, const KrausChannel& ch, KrausForm form = KrausForm::Kraus,
                                const Tolerances& tol = {});
InducedEnsemble induce_ensemble(const DensityMatrix& rho_ab, std::span<const Matrix> operators,
                                const Tolerances& tol = {});
/// Same ensemble through the dilation: rho_AB (x) |0><0|_C measured by {P_mu}.
InducedEnsemble induce_ensemble_dilated(const DensityMatrix& rho_ab, const NaimarkDilation& dil,
                                        const Tolerances& tol = {});

/// Max entrywise deviation between two induced ensembles over probabilities
/// and states; +inf when the kept outcome sets differ.
double ensemble_deviation(const InducedEnsemble& a, const InducedEnsemble& b);

struct Theorem1Check {
    double chi = 0.0;
    double entropy_a = 0.0;
    double entropy_b = 0.0;
    double margin = 0.0;  // min(S_A, S_B) - chi
    bool pass = false;
    std::size_t outcomes = 0;
    double dropped_mass = 0.0;
    double average_residual = 0.0;  // ||sum p rho_{A,mu} - rho_A||_F
    double form_deviation = 0.0;    // Kraus vs POVM-root induced ensembles
};

Theorem1Check check_theorem1(const DensityMatrix& rho_ab, const KrausChannel& ch, const Tolerances& tol = {});

struct RefinementCheck {
    double coarse_conditional = 0.0;  // sum_mu p_mu S(rho_{A,mu}), projector channel
    double fine_conditional = 0.0;    // sum_{mu,i} p_{mu,i} S(rho_{A,mu,i}), rank-one refinement
    double gap = 0.0;                 // coarse - fine, >= 0
    double chi_coarse = 0.0;
    double chi_fine = 0.0;
};

RefinementCheck refinement_check(const DensityMatrix& rho_ab, const std::vector<std::vector<std::size_t>>& partition,
                                 const std::vector<Vector>& basis, const Tolerances& tol = {});

struct CorrelationMatrix {
    Matrix mat;  // [sqrt(p_i p_j F_ij)], real symmetric
    std::string source_digest;
    double min_eigenvalue = 0.0;
};

CorrelationMatrix correlation_matrix(const Ensemble& ens, const Tolerances& tol = {});

/// Left polar unitaries of the three pairwise root products:
/// |sqrt(r2) sqrt(r1)| = U sqrt(r2) sqrt(r1), (3,1) -> V, (3,2) -> W.
struct PolarTriple {
    Matrix u;
    Matrix v;
    Matrix w;
    double residual_uvw = 0.0;                  // ||V - UW||_F
    std::array<std::size_t, 3> product_ranks{};  // ranks of the (2,1), (3,1), (3,2) products
    std::array<double, 3> polar_residuals{};     // || |X| - Omega X ||_F
};

PolarTriple polar_triple(const DensityMatrix& rho1, const DensityMatrix& rho2, const DensityMatrix& rho3,
                         const Tolerances& tol = {});

/// Reorders a matrix on C^{outer} (x) C^{inner} stored outer-major into
/// inner-major order, i.e. swaps the two tensor factors.
Matrix swap_tensor_factors(const Matrix& m, std::size_t outer, std::size_t inner);

/// The 3x3 block state with blocks sqrt(p_i p_j) sqrt(rho_i) X_ij sqrt(rho_j),
/// X = [[1, U, V], [U^dagger, 1, W], [V^dagger, W^dagger, 1]], B the block index.
/// Returned A-major with dims (d, 3). Throws ConditionViolated when
/// ||V - UW||_F > cond_tol and NotPSD when the assembly is not PSD.
DensityMatrix build_rho_ab_theorem2(const Ensemble& ens3, const PolarTriple& triple, const Tolerances& tol = {});

enum class Theorem2Verdict { Pass, Fail, ConditionNotMet };

struct Theorem2Check {
    double residual_uvw = 0.0;
    std::array<std::size_t, 3> product_ranks{};
    double chi = 0.0;
    double s_corr = 0.0;
    double margin = 0.0;  // s_corr - chi; exploratory only when the condition fails
    double corr_min_eigenvalue = 0.0;
    bool condition_met = false;
    // Filled only when the condition holds.
    double rho_ab_min_eigenvalue = 0.0;
    double trace_b_residual = 0.0;  // ||Tr_B rho_AB - sum p rho||_F
    double trace_a_residual = 0.0;  // ||Tr_A rho_AB - C||_F
    double induced_chi = 0.0;       // chi of the ensemble induced by measuring B in the block basis
    Theorem2Verdict verdict = Theorem2Verdict::ConditionNotMet;
};

Theorem2Check check_theorem2(const Ensemble& ens3, const Tolerances& tol = {});

/// |chi - S(C)| for two pure states. Throws NotPure.
double two_state_equality_check(const Ensemble& ens2, const Tolerances& tol = {});

struct Counterexample {
    std::size_t trial = 0;
    Ensemble ensemble;
    Matrix correlation;
    double min_eigenvalue = 0.0;
    Vector witness;  // unit eigenvector for min_eigenvalue
    double rayleigh = 0.0;  // <w|C|w>, recomputed directly
};

/// Draws `trials` random pure-state N-ensembles on C^dim (trial t uses stream
/// (seed, t)) and returns the first whose correlation matrix has an eigenvalue
/// below -counterexample_tol.
std::optional<Counterexample> counterexample_search(std::size_t n, std::size_t dim, std::size_t trials,
                                                    std::uint64_t seed, const Tolerances& tol = {});

/// Flat Dirichlet sample.
std::vector<double> random_simplex(std::size_t n, Rng& rng);
Ensemble random_pure_ensemble(std::size_t n, std::size_t dim, Rng& rng, const Tolerances& tol = {});
Ensemble random_mixed_ensemble(std::size_t n, std::size_t dim, Rng& rng, const Tolerances& tol = {});
/// Three full-rank states diagonal in one shared Haar basis, spectra drawn as
/// normalized squared Gaussians.
Ensemble random_commuting_triple(std::size_t dim, Rng& rng, const Tolerances& tol = {});
/// Random set partition of {0..d-1} into non-empty groups.
std::vector<std::vector<std::size_t>> random_partition(std::size_t d, Rng& rng);

}  // namespace holevo
