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

#include "holevo/ensemble.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

Ensemble::Ensemble(std::vector<EnsembleEntry> entries, const Tolerances& tol, std::optional<double> sum_tol)
    : entries_(std::move(entries)) {
    if (entries_.empty()) fail(ErrorCode::InvalidEnsemble, "ensemble is empty");
    const std::size_t d = entries_.front().rho.dim();
    double total = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (!std::isfinite(e.p) || e.p <= tol.prob_floor || e.p > 1.0 + tol.prob_sum_tol) {
            fail(ErrorCode::InvalidEnsemble, "probability " + std::to_string(i) + " = " + std::to_string(e.p) +
                                                 " outside (prob_floor, 1]");
        }
        if (e.rho.dim() != d) fail(ErrorCode::DimensionMismatch, "ensemble states differ in dimension");
        total += e.p;
    }
    const double limit = sum_tol.value_or(tol.prob_sum_tol);
    if (std::abs(total - 1.0) > limit) {
        fail(ErrorCode::InvalidEnsemble, "probabilities sum to " + std::to_string(total));
    }
}

std::vector<double> Ensemble::probabilities() const {
    std::vector<double> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.p);
    return out;
}

Matrix Ensemble::average() const {
    Matrix avg(dim(), dim());
    for (const auto& e : entries_) avg += e.rho.matrix() * Complex(e.p);
    return avg.hermitian_part();
}

std::string digest(const Ensemble& ens) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const auto mix = [&](double x) {
        const auto bits = std::bit_cast<std::uint64_t>(x);
        for (int k = 0; k < 8; ++k) {
            h ^= (bits >> (8 * k)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& e : ens.entries()) {
        mix(e.p);
        for (const auto& z : e.rho.matrix().entries()) {
            mix(z.real());
            mix(z.imag());
        }
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int k = 15; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = kHex[h & 0xfU];
        h >>= 4;
    }
    return out;
}

double holevo(const Ensemble& ens, LogBase base, const Tolerances& tol) {
    const auto avg_eig = hermitian_eig(ens.average(), tol.herm_tol);
    double chi = entropy_of_spectrum(avg_eig.eigenvalues, base, tol.psd_tol);
    for (const auto& e : ens.entries()) chi -= e.p * von_neumann_entropy(e.rho, base, tol);
    return chi;
}

namespace {

InducedEnsemble induce_raw(const Matrix& rho, BipartiteDims dims, std::span<const Matrix> operators,
                           const Tolerances& tol) {
    const Matrix id_a = Matrix::identity(dims.dim_a);
    std::vector<EnsembleEntry> entries;
    std::vector<std::size_t> kept;
    std::vector<double> probabilities;
    double dropped = 0.0;
    for (std::size_t mu = 0; mu < operators.size(); ++mu) {
        const Matrix& op = operators[mu];
        if (!op.is_square() || op.rows() != dims.dim_b) {
            fail(ErrorCode::DimensionMismatch, "measurement operator " + std::to_string(mu) + " does not act on B");
        }
        const Matrix lift = kron(id_a, op);
        const Matrix x = lift * rho * lift.adjoint();
        const double p = x.trace().real();
        probabilities.push_back(p);
        if (p <= tol.prob_floor) {
            dropped += std::max(p, 0.0);
            continue;
        }
        Matrix reduced = partial_trace(x, dims, Subsystem::A);
        reduced *= Complex(1.0 / p);
        entries.push_back({p, DensityMatrix(reduced.hermitian_part(), std::nullopt, tol)});
        kept.push_back(mu);
    }
    if (entries.empty()) fail(ErrorCode::InvalidEnsemble, "every outcome has probability below prob_floor");
    Ensemble ens(std::move(entries), tol, tol.kraus_tol + dropped);
    return InducedEnsemble{std::move(ens), std::move(kept), std::move(probabilities), dropped};
}

void require_split(const DensityMatrix& rho_ab) {
    if (!rho_ab.dims()) fail(ErrorCode::NoBipartiteSplit, "induced ensembles need a bipartite state");
}

}  // namespace

InducedEnsemble induce_ensemble(const DensityMatrix& rho_ab, std::span<const Matrix> operators,
                                const Tolerances& tol) {
    require_split(rho_ab);
    return induce_raw(rho_ab.matrix(), *rho_ab.dims(), operators, tol);
}

InducedEnsemble induce_ensemble(const DensityMatrix& rho_ab, const KrausChannel& ch, KrausForm form,
                                const Tolerances& tol) {
    require_split(rho_ab);
    if (ch.dim() != rho_ab.dims()->dim_b) {
        fail(ErrorCode::DimensionMismatch, "channel acts on dimension " + std::to_string(ch.dim()) +
                                               " but d_B = " + std::to_string(rho_ab.dims()->dim_b));
    }
    if (form == KrausForm::Kraus) return induce_raw(rho_ab.matrix(), *rho_ab.dims(), ch.kraus(), tol);
    const auto roots = ch.povm_roots(tol);
    return induce_raw(rho_ab.matrix(), *rho_ab.dims(), roots, tol);
}

InducedEnsemble induce_ensemble_dilated(const DensityMatrix& rho_ab, const NaimarkDilation& dil,
                                        const Tolerances& tol) {
    require_split(rho_ab);
    const auto dims = *rho_ab.dims();
    if (dims.dim_b != dil.system_dim) fail(ErrorCode::DimensionMismatch, "dilation does not act on B");
    Matrix anchor(dil.ancilla_dim, dil.ancilla_dim);
    anchor(dil.anchor_index, dil.anchor_index) = 1.0;
    // A-major kron keeps the composite index a * (d_B K) + (b K + c).
    const Matrix extended = kron(rho_ab.matrix(), anchor);
    return induce_raw(extended, {dims.dim_a, dims.dim_b * dil.ancilla_dim}, dil.projectors, tol);
}

double ensemble_deviation(const InducedEnsemble& a, const InducedEnsemble& b) {
    if (a.outcomes != b.outcomes) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.ensemble.size(); ++i) {
        const auto& ea = a.ensemble[i];
        const auto& eb = b.ensemble[i];
        if (ea.rho.dim() != eb.rho.dim()) return std::numeric_limits<double>::infinity();
        worst = std::max(worst, std::abs(ea.p - eb.p));
        const auto za = ea.rho.matrix().entries();
        const auto zb = eb.rho.matrix().entries();
        for (std::size_t k = 0; k < za.size(); ++k) worst = std::max(worst, std::abs(za[k] - zb[k]));
    }
    return worst;
}

Theorem1Check check_theorem1(const DensityMatrix& rho_ab, const KrausChannel& ch, const Tolerances& tol) {
    require_split(rho_ab);
    const DensityMatrix rho_a = partial_trace(rho_ab, Subsystem::A, tol);
    const DensityMatrix rho_b = partial_trace(rho_ab, Subsystem::B, tol);
    const InducedEnsemble induced = induce_ensemble(rho_ab, ch, KrausForm::Kraus, tol);
    const InducedEnsemble via_roots = induce_ensemble(rho_ab, ch, KrausForm::PovmRoot, tol);

    Theorem1Check r;
    r.chi = holevo(induced.ensemble, LogBase::Bits, tol);
    r.entropy_a = von_neumann_entropy(rho_a, LogBase::Bits, tol);
    r.entropy_b = von_neumann_entropy(rho_b, LogBase::Bits, tol);
    r.margin = std::min(r.entropy_a, r.entropy_b) - r.chi;
    r.pass = r.margin >= -tol.theorem_tol;
    r.outcomes = induced.ensemble.size();
    r.dropped_mass = induced.dropped_mass;
    r.average_residual = distance(induced.ensemble.average(), rho_a.matrix());
    r.form_deviation = ensemble_deviation(induced, via_roots);
    return r;
}

namespace {

double conditional_entropy(const Ensemble& ens, const Tolerances& tol) {
    double s = 0.0;
    for (const auto& e : ens.entries()) s += e.p * von_neumann_entropy(e.rho, LogBase::Bits, tol);
    return s;
}

}  // namespace

RefinementCheck refinement_check(const DensityMatrix& rho_ab, const std::vector<std::vector<std::size_t>>& partition,
                                 const std::vector<Vector>& basis, const Tolerances& tol) {
    const KrausChannel coarse = projectors_from_partition(partition, basis, tol);
    const KrausChannel fine = projective_from_basis(basis, tol);
    const InducedEnsemble ec = induce_ensemble(rho_ab, coarse, KrausForm::Kraus, tol);
    const InducedEnsemble ef = induce_ensemble(rho_ab, fine, KrausForm::Kraus, tol);
    RefinementCheck r;
    r.coarse_conditional = conditional_entropy(ec.ensemble, tol);
    r.fine_conditional = conditional_entropy(ef.ensemble, tol);
    r.gap = r.coarse_conditional - r.fine_conditional;
    r.chi_coarse = holevo(ec.ensemble, LogBase::Bits, tol);
    r.chi_fine = holevo(ef.ensemble, LogBase::Bits, tol);
    return r;
}

CorrelationMatrix correlation_matrix(const Ensemble& ens, const Tolerances& tol) {
    const std::size_t n = ens.size();
    std::vector<Matrix> roots;
    roots.reserve(n);
    for (const auto& e : ens.entries()) roots.push_back(matrix_sqrt(e.rho.matrix(), tol));
    CorrelationMatrix c;
    c.mat = Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        c.mat(i, i) = ens[i].p;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double root_f = trace_norm(roots[i] * roots[j]);
            const double v = std::sqrt(ens[i].p * ens[j].p) * root_f;
            c.mat(i, j) = v;
            c.mat(j, i) = v;
        }
    }
    c.source_digest = digest(ens);
    c.min_eigenvalue = min_eigenvalue(c.mat, tol.herm_tol);
    return c;
}

PolarTriple polar_triple(const DensityMatrix& rho1, const DensityMatrix& rho2, const DensityMatrix& rho3,
                         const Tolerances& tol) {
    if (rho1.dim() != rho2.dim() || rho1.dim() != rho3.dim()) {
        fail(ErrorCode::DimensionMismatch, "polar triple needs states of one dimension");
    }
    const Matrix s1 = matrix_sqrt(rho1.matrix(), tol);
    const Matrix s2 = matrix_sqrt(rho2.matrix(), tol);
    const Matrix s3 = matrix_sqrt(rho3.matrix(), tol);
    const std::array<Matrix, 3> products{s2 * s1, s3 * s1, s3 * s2};

    PolarTriple t;
    std::array<Matrix, 3> unitaries;
    for (std::size_t k = 0; k < 3; ++k) {
        const PolarFactors pf = polar_left(products[k]);
        unitaries[k] = pf.unitary;
        t.polar_residuals[k] = distance(pf.positive, pf.unitary * products[k]);
        t.product_ranks[k] = numerical_rank(products[k], tol.rank_tol);
    }
    t.u = std::move(unitaries[0]);
    t.v = std::move(unitaries[1]);
    t.w = std::move(unitaries[2]);
    t.residual_uvw = distance(t.v, t.u * t.w);
    return t;
}

Matrix swap_tensor_factors(const Matrix& m, std::size_t outer, std::size_t inner) {
    if (!m.is_square() || m.rows() != outer * inner) fail(ErrorCode::DimensionMismatch, "tensor factor swap");
    Matrix out(m.rows(), m.cols());
    for (std::size_t oi = 0; oi < outer; ++oi)
        for (std::size_t ii = 0; ii < inner; ++ii)
            for (std::size_t oj = 0; oj < outer; ++oj)
                for (std::size_t ij = 0; ij < inner; ++ij)
                    out(ii * outer + oi, ij * outer + oj) = m(oi * inner + ii, oj * inner + ij);
    return out;
}

DensityMatrix build_rho_ab_theorem2(const Ensemble& ens3, const PolarTriple& triple, const Tolerances& tol) {
    if (ens3.size() != 3) fail(ErrorCode::InvalidArgument, "three-state construction needs an ensemble of size 3");
    if (triple.residual_uvw > tol.cond_tol) {
        fail(ErrorCode::ConditionViolated, "||V - UW||_F = " + std::to_string(triple.residual_uvw));
    }
    const std::size_t d = ens3.dim();
    std::array<Matrix, 3> roots;
    for (std::size_t i = 0; i < 3; ++i) roots[i] = matrix_sqrt(ens3[i].rho.matrix(), tol);

    const Matrix id = Matrix::identity(d);
    const std::array<std::array<Matrix, 3>, 3> middle{{
        {id, triple.u, triple.v},
        {triple.u.adjoint(), id, triple.w},
        {triple.v.adjoint(), triple.w.adjoint(), id},
    }};

    Matrix blocks(3 * d, 3 * d);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            Matrix b = i == j ? ens3[i].rho.matrix() * Complex(ens3[i].p)
                              : roots[i] * middle[i][j] * roots[j] * Complex(std::sqrt(ens3[i].p * ens3[j].p));
            blocks.set_block(i * d, j * d, b);
        }
    }
    // Block index is B (outer), A sits inside the blocks; storage is A-major.
    const Matrix stored = swap_tensor_factors(blocks.hermitian_part(), 3, d);
    const double lmin = min_eigenvalue(stored, tol.herm_tol);
    if (lmin < -tol.block_psd_tol) fail(ErrorCode::NotPSD, "assembled state has eigenvalue " + std::to_string(lmin));
    Tolerances relaxed = tol;
    relaxed.psd_tol = std::max(tol.psd_tol, tol.block_psd_tol);
    return DensityMatrix(stored, BipartiteDims{d, 3}, relaxed);
}

namespace {

double clipped_entropy(const Matrix& m, const Tolerances& tol) {
    auto eig = hermitian_eig(m, tol.herm_tol);
    for (auto& x : eig.eigenvalues) x = std::max(x, 0.0);
    return entropy_of_spectrum(eig.eigenvalues, LogBase::Bits, tol.psd_tol);
}

}  // namespace

Theorem2Check check_theorem2(const Ensemble& ens3, const Tolerances& tol) {
    if (ens3.size() != 3) fail(ErrorCode::InvalidArgument, "three-state check needs an ensemble of size 3");
    Theorem2Check r;
    const PolarTriple triple = polar_triple(ens3[0].rho, ens3[1].rho, ens3[2].rho, tol);
    const CorrelationMatrix c = correlation_matrix(ens3, tol);
    r.residual_uvw = triple.residual_uvw;
    r.product_ranks = triple.product_ranks;
    r.chi = holevo(ens3, LogBase::Bits, tol);
    r.s_corr = clipped_entropy(c.mat, tol);
    r.corr_min_eigenvalue = c.min_eigenvalue;
    r.margin = r.s_corr - r.chi;
    r.condition_met = triple.residual_uvw <= tol.cond_tol;
    if (!r.condition_met) {
        r.verdict = Theorem2Verdict::ConditionNotMet;
        return r;
    }
    try {
        const DensityMatrix rho_ab = build_rho_ab_theorem2(ens3, triple, tol);
        r.rho_ab_min_eigenvalue = min_eigenvalue(rho_ab.matrix(), tol.herm_tol);
        r.trace_b_residual = distance(partial_trace(rho_ab.matrix(), *rho_ab.dims(), Subsystem::A), ens3.average());
        r.trace_a_residual = distance(partial_trace(rho_ab.matrix(), *rho_ab.dims(), Subsystem::B), c.mat);
        std::vector<Matrix> basis_projectors;
        for (std::size_t b = 0; b < 3; ++b) {
            Matrix p(3, 3);
            p(b, b) = 1.0;
            basis_projectors.push_back(std::move(p));
        }
        r.induced_chi = holevo(induce_ensemble(rho_ab, basis_projectors, tol).ensemble, LogBase::Bits, tol);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotPSD && e.code() != ErrorCode::NotDensity) throw;
        r.rho_ab_min_eigenvalue = -std::numeric_limits<double>::infinity();
        r.verdict = Theorem2Verdict::Fail;
        return r;
    }
    r.verdict = r.margin >= -tol.theorem_tol ? Theorem2Verdict::Pass : Theorem2Verdict::Fail;
    return r;
}

double two_state_equality_check(const Ensemble& ens2, const Tolerances& tol) {
    if (ens2.size() != 2) fail(ErrorCode::InvalidArgument, "equality check needs exactly two states");
    for (std::size_t i = 0; i < 2; ++i) {
        const double purity = ens2[i].rho.purity();
        if (std::abs(purity - 1.0) > 1e-9) {
            fail(ErrorCode::NotPure, "state " + std::to_string(i) + " has purity " + std::to_string(purity));
        }
    }
    const CorrelationMatrix c = correlation_matrix(ens2, tol);
    return std::abs(holevo(ens2, LogBase::Bits, tol) - clipped_entropy(c.mat, tol));
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
    std::vector<double> w(n);
    double total = 0.0;
    for (auto& x : w) {
        x = -std::log(rng.uniform());
        total += x;
    }
    for (auto& x : w) x /= total;
    return w;
}

Ensemble random_pure_ensemble(std::size_t n, std::size_t dim, Rng& rng, const Tolerances& tol) {
    const auto p = random_simplex(n, rng);
    std::vector<EnsembleEntry> entries;
    for (std::size_t i = 0; i < n; ++i) entries.push_back({p[i], random_pure(dim, rng)});
    return Ensemble(std::move(entries), tol);
}

Ensemble random_mixed_ensemble(std::size_t n, std::size_t dim, Rng& rng, const Tolerances& tol) {
    const auto p = random_simplex(n, rng);
    std::vector<EnsembleEntry> entries;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t rank = 1 + rng.uniform_index(dim);
        entries.push_back({p[i], random_density(dim, rank, rng)});
    }
    return Ensemble(std::move(entries), tol);
}

Ensemble random_commuting_triple(std::size_t dim, Rng& rng, const Tolerances& tol) {
    const Matrix q = random_haar_unitary(dim, rng);
    const auto p = random_simplex(3, rng);
    std::vector<EnsembleEntry> entries;
    for (std::size_t i = 0; i < 3; ++i) {
        std::vector<double> spectrum(dim);
        double total = 0.0;
        for (auto& x : spectrum) {
            const double g = rng.normal();
            x = g * g;
            total += x;
        }
        for (auto& x : spectrum) x /= total;
        Matrix rho = q * Matrix::diagonal(std::span<const double>(spectrum)) * q.adjoint();
        entries.push_back({p[i], DensityMatrix(rho.hermitian_part(), std::nullopt, tol)});
    }
    return Ensemble(std::move(entries), tol);
}

std::vector<std::vector<std::size_t>> random_partition(std::size_t d, Rng& rng) {
    std::vector<std::size_t> label(d);
    for (auto& l : label) l = rng.uniform_index(d);
    std::map<std::size_t, std::size_t> group_of;
    std::vector<std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < d; ++i) {
        auto [it, inserted] = group_of.emplace(label[i], groups.size());
        if (inserted) groups.emplace_back();
        groups[it->second].push_back(i);
    }
    return groups;
}

std::optional<Counterexample> counterexample_search(std::size_t n, std::size_t dim, std::size_t trials,
                                                    std::uint64_t seed, const Tolerances& tol) {
    if (n < 2 || dim < 1) fail(ErrorCode::InvalidArgument, "search needs N >= 2 and dim >= 1");
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_stream(seed, t);
        Ensemble ens = random_pure_ensemble(n, dim, rng, tol);
        CorrelationMatrix c = correlation_matrix(ens, tol);
        if (c.min_eigenvalue >= -tol.counterexample_tol) continue;
        const auto eig = hermitian_eig(c.mat, tol.herm_tol);
        Vector w = eig.eigenvectors.col(eig.eigenvectors.cols() - 1);
        const double rq = inner(w, c.mat * std::span<const Complex>(w)).real() / inner(w, w).real();
        return Counterexample{t, std::move(ens), std::move(c.mat), eig.eigenvalues.back(), std::move(w), rq};
    }
    return std::nullopt;
}

}  // namespace holevo
