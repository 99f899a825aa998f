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

#include "holevo/blockpos.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "holevo/error.hpp"

namespace holevo {
namespace {

void check_block_dims(const Block3& blk) {
    const auto sq = [](const Matrix& m) { return m.is_square(); };
    if (!sq(blk.a) || !sq(blk.b) || !sq(blk.c)) fail(ErrorCode::DimensionMismatch, "diagonal blocks must be square");
    const std::size_t n1 = blk.a.rows();
    const std::size_t n2 = blk.b.rows();
    const std::size_t n3 = blk.c.rows();
    const auto shape = [](const Matrix& m, std::size_t r, std::size_t c) { return m.rows() == r && m.cols() == c; };
    if (!shape(blk.d, n1, n2) || !shape(blk.e, n1, n3) || !shape(blk.f, n2, n3)) {
        fail(ErrorCode::DimensionMismatch, "cross blocks do not match the diagonal block sizes");
    }
}

// sqrt(H) and its pseudo-inverse on eigenvalues above `cut`; eigenvalues at
// or below the cut count as zero in both.
struct RootPair {
    Matrix root;
    Matrix root_pinv;
    Matrix support;
    double lambda_max = 0.0;
};

RootPair psd_roots(const Matrix& h, double cut, const Tolerances& tol) {
    const auto eig = hermitian_eig(h.hermitian_part(), tol.herm_tol);
    RootPair r;
    r.lambda_max = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    r.root = spectral_apply(eig, [&](double x) { return x > cut ? std::sqrt(x) : 0.0; }).hermitian_part();
    r.root_pinv = spectral_apply(eig, [&](double x) { return x > cut ? 1.0 / std::sqrt(x) : 0.0; }).hermitian_part();
    r.support = spectral_apply(eig, [&](double x) { return x > cut ? 1.0 : 0.0; }).hermitian_part();
    return r;
}

RootPair psd_roots_relative(const Matrix& h, const Tolerances& tol) {
    const auto eig = hermitian_eig(h.hermitian_part(), tol.herm_tol);
    const double lmax = eig.eigenvalues.empty() ? 0.0 : std::max(eig.eigenvalues.front(), 0.0);
    return psd_roots(h, tol.rank_tol * lmax, tol);
}

}  // namespace

Matrix assemble(const Block3& blk) {
    check_block_dims(blk);
    const std::size_t n1 = blk.a.rows();
    const std::size_t n2 = blk.b.rows();
    const std::size_t n3 = blk.c.rows();
    Matrix m(n1 + n2 + n3, n1 + n2 + n3);
    m.set_block(0, 0, blk.a);
    m.set_block(0, n1, blk.d);
    m.set_block(0, n1 + n2, blk.e);
    m.set_block(n1, 0, blk.d.adjoint());
    m.set_block(n1, n1, blk.b);
    m.set_block(n1, n1 + n2, blk.f);
    m.set_block(n1 + n2, 0, blk.e.adjoint());
    m.set_block(n1 + n2, n1, blk.f.adjoint());
    m.set_block(n1 + n2, n1 + n2, blk.c);
    return m;
}

PsdVerdict is_psd(const Matrix& m, const Tolerances& tol) {
    PsdVerdict v;
    v.min_eigenvalue = m.empty() ? 0.0 : min_eigenvalue(m, tol.herm_tol);
    v.is_psd = v.min_eigenvalue >= -tol.block_psd_tol;
    return v;
}

PsdVerdict is_psd_block(const Block3& blk, const Tolerances& tol) { return is_psd(assemble(blk), tol); }

ContractionWitness lemma1_witness(const Block3& blk, const Tolerances& tol) {
    check_block_dims(blk);
    const RootPair ra = psd_roots_relative(blk.a, tol);
    const RootPair rb = psd_roots_relative(blk.b, tol);
    const RootPair rc = psd_roots_relative(blk.c, tol);

    ContractionWitness w;
    w.r1 = ra.root_pinv * blk.d * rb.root_pinv;
    w.r2 = rb.root_pinv * blk.f * rc.root_pinv;

    const Matrix chained = ra.root * w.r1 * rb.support * w.r2 * rc.root;
    const Matrix schur_a = blk.a - ra.root * w.r1 * rb.support * w.r1.adjoint() * ra.root;
    const Matrix schur_c = blk.c - rc.root * w.r2.adjoint() * rb.support * w.r2 * rc.root;
    // Rounding leaves O(eps ||A||) eigenvalues in the residuals; cut relative
    // to the parent block rather than to the residual itself.
    const RootPair la = psd_roots(schur_a, tol.rank_tol * std::max(ra.lambda_max, 1e-300), tol);
    const RootPair lc = psd_roots(schur_c, tol.rank_tol * std::max(rc.lambda_max, 1e-300), tol);
    w.residual_factor_a = la.root;
    w.residual_factor_c = lc.root;
    w.r3 = la.root_pinv * (blk.e - chained) * lc.root_pinv;

    w.norms = {operator_norm(w.r1), operator_norm(w.r2), operator_norm(w.r3)};
    w.residual_d = distance(blk.d, ra.root * w.r1 * rb.root);
    w.residual_f = distance(blk.f, rb.root * w.r2 * rc.root);
    w.residual_e = distance(blk.e, chained + la.root * w.r3 * lc.root);
    return w;
}

ContractionWitness lemma1_decompose(const Block3& blk, const Tolerances& tol) {
    const PsdVerdict verdict = is_psd_block(blk, tol);
    if (!verdict.is_psd) fail(ErrorCode::NotPSD, "block min eigenvalue " + std::to_string(verdict.min_eigenvalue));
    ContractionWitness w = lemma1_witness(blk, tol);
    const double norm_limit = 1.0 + tol.contraction_tol;
    const bool ok = w.residual_d <= tol.witness_tol && w.residual_f <= tol.witness_tol &&
                    w.residual_e <= tol.witness_e_tol &&
                    std::all_of(w.norms.begin(), w.norms.end(), [&](double n) { return n <= norm_limit; });
    if (!ok) {
        std::ostringstream msg;
        msg << "residuals D=" << w.residual_d << " F=" << w.residual_f << " E=" << w.residual_e << " norms R1="
            << w.norms[0] << " R2=" << w.norms[1] << " R3=" << w.norms[2];
        fail(ErrorCode::ReconstructionFailure, msg.str());
    }
    return w;
}

namespace {

void require_unitary(const Matrix& u, const char* name, const Tolerances& tol) {
    const double r = unitarity_residual(u);
    if (!(r <= tol.unitary_tol)) {
        fail(ErrorCode::NotUnitary, std::string(name) + " has ||U^dagger U - 1||_F = " + std::to_string(r));
    }
}

}  // namespace

Matrix lemma2_matrix(const Matrix& u, const Matrix& v, const Matrix& w) {
    const std::size_t d = u.rows();
    if (!u.is_square() || v.rows() != d || w.rows() != d || !v.is_square() || !w.is_square()) {
        fail(ErrorCode::DimensionMismatch, "U, V, W must share one square dimension");
    }
    const Matrix id = Matrix::identity(d);
    Matrix m(3 * d, 3 * d);
    m.set_block(0, 0, id);
    m.set_block(0, d, u);
    m.set_block(0, 2 * d, v);
    m.set_block(d, 0, u.adjoint());
    m.set_block(d, d, id);
    m.set_block(d, 2 * d, w);
    m.set_block(2 * d, 0, v.adjoint());
    m.set_block(2 * d, d, w.adjoint());
    m.set_block(2 * d, 2 * d, id);
    return m;
}

Lemma2Result lemma2_check(const Matrix& u, const Matrix& v, const Matrix& w, const Tolerances& tol) {
    const Matrix m = lemma2_matrix(u, v, w);
    require_unitary(u, "U", tol);
    require_unitary(v, "V", tol);
    require_unitary(w, "W", tol);
    Lemma2Result r;
    const PsdVerdict verdict = is_psd(m, tol);
    r.is_psd = verdict.is_psd;
    r.min_eigenvalue = verdict.min_eigenvalue;
    r.residual_vuw = distance(v, u * w);
    r.consistent = r.is_psd == (r.residual_vuw <= tol.lemma2_residual_tol);
    return r;
}

void validate_chain(const UnitaryChain& chain, const Tolerances& tol) {
    if (chain.factors.empty()) fail(ErrorCode::InvalidArgument, "chain has no factors");
    const std::size_t d = chain.dim();
    for (std::size_t i = 0; i < chain.factors.size(); ++i) {
        const Matrix& f = chain.factors[i];
        if (!f.is_square() || f.rows() != d) fail(ErrorCode::DimensionMismatch, "chain factors differ in dimension");
        const std::string name = "factor " + std::to_string(i);
        require_unitary(f, name.c_str(), tol);
    }
}

Matrix chain_to_p(const UnitaryChain& chain, const Tolerances& tol) {
    if (chain.form != ChainForm::Chain) fail(ErrorCode::InvalidArgument, "expected a chain-form factor list");
    validate_chain(chain, tol);
    const std::size_t k = chain.blocks();
    const std::size_t d = chain.dim();
    Matrix p(k * d, k * d);
    for (std::size_t i = 0; i < k; ++i) {
        p.set_block(i * d, i * d, Matrix::identity(d));
        Matrix running = Matrix::identity(d);
        for (std::size_t j = i + 1; j < k; ++j) {
            running = running * chain.factors[j - 1];
            p.set_block(i * d, j * d, running);
            p.set_block(j * d, i * d, running.adjoint());
        }
    }
    return p;
}

Matrix stack_to_p(const UnitaryChain& chain, const Tolerances& tol) {
    if (chain.form != ChainForm::Stack) fail(ErrorCode::InvalidArgument, "expected a stack-form factor list");
    validate_chain(chain, tol);
    const std::size_t k = chain.blocks();
    const std::size_t d = chain.dim();
    Matrix column(k * d, d);
    for (std::size_t i = 0; i < k; ++i) column.set_block(i * d, 0, chain.factors[i]);
    return column * column.adjoint();
}

Matrix to_p(const UnitaryChain& chain, const Tolerances& tol) {
    return chain.form == ChainForm::Chain ? chain_to_p(chain, tol) : stack_to_p(chain, tol);
}

UnitaryChain stack_from_chain(const UnitaryChain& chain) {
    if (chain.form != ChainForm::Chain) fail(ErrorCode::InvalidArgument, "expected a chain-form factor list");
    const std::size_t k = chain.blocks();
    UnitaryChain out{std::vector<Matrix>(k), ChainForm::Stack};
    out.factors[k - 1] = Matrix::identity(chain.dim());
    for (std::size_t i = k - 1; i-- > 0;) out.factors[i] = chain.factors[i] * out.factors[i + 1];
    return out;
}

UnitaryChain chain_from_stack(const UnitaryChain& stack) {
    if (stack.form != ChainForm::Stack) fail(ErrorCode::InvalidArgument, "expected a stack-form factor list");
    UnitaryChain out{{}, ChainForm::Chain};
    for (std::size_t i = 0; i + 1 < stack.factors.size(); ++i) {
        out.factors.push_back(stack.factors[i] * stack.factors[i + 1].adjoint());
    }
    return out;
}

double forms_equivalence_check(const UnitaryChain& a, const UnitaryChain& b, const Tolerances& tol) {
    if (a.blocks() != b.blocks() || a.dim() != b.dim()) {
        fail(ErrorCode::DimensionMismatch, "chains differ in block count or dimension");
    }
    return distance(to_p(a, tol), to_p(b, tol));
}

KBlockResiduals kblock_residuals(const Matrix& p, std::size_t k, std::size_t d, const Tolerances& tol) {
    if (!p.is_square() || p.rows() != k * d) fail(ErrorCode::DimensionMismatch, "P is not K*d square");
    KBlockResiduals r;
    r.idempotence = distance(p * p, p * Complex(static_cast<double>(k)));
    r.hermiticity = hermiticity_residual(p);
    r.trace = std::abs(p.trace() - Complex(static_cast<double>(k * d)));
    const Matrix id = Matrix::identity(d);
    for (std::size_t i = 0; i < k; ++i) r.diagonal = std::max(r.diagonal, distance(p.block(i * d, i * d, d, d), id));
    r.min_eigenvalue = min_eigenvalue(p, tol.herm_tol);
    return r;
}

UnitaryChain random_chain(std::size_t k, std::size_t d, Rng& rng) {
    if (k < 2) fail(ErrorCode::InvalidArgument, "a chain needs K >= 2 blocks");
    UnitaryChain out{{}, ChainForm::Chain};
    for (std::size_t i = 0; i + 1 < k; ++i) out.factors.push_back(random_haar_unitary(d, rng));
    return out;
}

}  // namespace holevo
