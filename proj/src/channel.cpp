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

#include "holevo/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

KrausChannel::KrausChannel(std::vector<Matrix> kraus, std::string label, const Tolerances& tol)
    : kraus_(std::move(kraus)), label_(std::move(label)) {
    if (kraus_.empty()) fail(ErrorCode::InvalidChannel, "channel needs at least one Kraus operator");
    const std::size_t d = kraus_.front().rows();
    for (std::size_t mu = 0; mu < kraus_.size(); ++mu) {
        const Matrix& m = kraus_[mu];
        if (!m.is_square() || m.rows() != d || d == 0) {
            fail(ErrorCode::InvalidChannel, "Kraus operator " + std::to_string(mu) + " is not " + std::to_string(d) +
                                                "x" + std::to_string(d));
        }
        if (!m.all_finite()) fail(ErrorCode::InvalidChannel, "Kraus operator " + std::to_string(mu) + " not finite");
        if (m.frobenius_norm() < tol.kraus_floor) {
            fail(ErrorCode::InvalidChannel, "Kraus operator " + std::to_string(mu) + " is degenerate (norm below " +
                                                std::to_string(tol.kraus_floor) + ")");
        }
    }
    const double residual = completeness_residual(kraus_);
    if (residual > tol.kraus_tol) {
        fail(ErrorCode::InvalidChannel, "completeness residual " + std::to_string(residual));
    }
}

std::vector<Matrix> KrausChannel::povm() const {
    std::vector<Matrix> out;
    out.reserve(kraus_.size());
    for (const auto& m : kraus_) out.push_back((m.adjoint() * m).hermitian_part());
    return out;
}

std::vector<Matrix> KrausChannel::povm_roots(const Tolerances& tol) const {
    std::vector<Matrix> out;
    out.reserve(kraus_.size());
    for (const auto& e : povm()) out.push_back(matrix_sqrt(e, tol));
    return out;
}

double completeness_residual(const std::vector<Matrix>& kraus) {
    if (kraus.empty()) return std::numeric_limits<double>::infinity();
    const std::size_t d = kraus.front().cols();
    Matrix sum(d, d);
    for (const auto& m : kraus) sum += m.adjoint() * m;
    return distance(sum, Matrix::identity(d));
}

double validate(const KrausChannel& ch) { return completeness_residual(ch.kraus()); }

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho, const Tolerances& tol) {
    if (rho.dim() != ch.dim()) {
        fail(ErrorCode::DimensionMismatch, "channel on dimension " + std::to_string(ch.dim()) +
                                               " applied to state of dimension " + std::to_string(rho.dim()));
    }
    Matrix out(rho.dim(), rho.dim());
    for (const auto& m : ch.kraus()) out += m * rho.matrix() * m.adjoint();
    return DensityMatrix(out.hermitian_part(), rho.dims(), tol);
}

namespace {

void check_orthonormal(const std::vector<Vector>& basis) {
    if (basis.empty()) fail(ErrorCode::NotOrthonormal, "empty basis");
    const std::size_t d = basis.front().size();
    if (basis.size() != d) {
        fail(ErrorCode::NotOrthonormal, std::to_string(basis.size()) + " vectors do not span dimension " +
                                            std::to_string(d));
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (basis[i].size() != d) fail(ErrorCode::NotOrthonormal, "basis vectors differ in length");
        for (std::size_t j = i; j < d; ++j) {
            const Complex g = inner(basis[i], basis[j]);
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(g - expected) > 1e-10) {
                fail(ErrorCode::NotOrthonormal,
                     "<" + std::to_string(i) + "|" + std::to_string(j) + "> = " + std::to_string(std::abs(g)));
            }
        }
    }
}

}  // namespace

std::vector<Vector> basis_from_columns(const Matrix& u) {
    std::vector<Vector> out;
    out.reserve(u.cols());
    for (std::size_t j = 0; j < u.cols(); ++j) out.push_back(u.col(j));
    return out;
}

KrausChannel projective_from_basis(const std::vector<Vector>& basis, const Tolerances& tol) {
    check_orthonormal(basis);
    std::vector<Matrix> kraus;
    kraus.reserve(basis.size());
    for (const auto& v : basis) kraus.push_back(Matrix::outer(v, v));
    return KrausChannel(std::move(kraus), "projective", tol);
}

KrausChannel projectors_from_partition(const std::vector<std::vector<std::size_t>>& partition,
                                       const std::vector<Vector>& basis, const Tolerances& tol) {
    check_orthonormal(basis);
    const std::size_t d = basis.size();
    std::vector<int> seen(d, 0);
    for (const auto& group : partition) {
        if (group.empty()) fail(ErrorCode::NotPartition, "empty block in partition");
        for (std::size_t i : group) {
            if (i >= d) fail(ErrorCode::NotPartition, "index " + std::to_string(i) + " out of range");
            if (seen[i]++) fail(ErrorCode::NotPartition, "index " + std::to_string(i) + " appears twice");
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (!seen[i]) fail(ErrorCode::NotPartition, "index " + std::to_string(i) + " is not covered");
    }
    std::vector<Matrix> kraus;
    for (const auto& group : partition) {
        Matrix p(d, d);
        for (std::size_t i : group) p += Matrix::outer(basis[i], basis[i]);
        kraus.push_back(std::move(p));
    }
    return KrausChannel(std::move(kraus), "partition", tol);
}

NaimarkDilation naimark_dilate(const KrausChannel& ch, const Tolerances& tol) {
    const std::size_t d = ch.dim();
    const std::size_t k = ch.num_outcomes();
    const std::size_t n = d * k;
    const auto roots = ch.povm_roots(tol);

    // W|psi> = sum_mu sqrt(E_mu)|psi> (x) |mu>, as an n x d matrix.
    Matrix w(n, d);
    for (std::size_t mu = 0; mu < k; ++mu)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t j = 0; j < d; ++j) w(b * k + mu, j) = roots[mu](b, j);

    Matrix completed;
    try {
        completed = complete_to_unitary(w);
    } catch (const Error& e) {
        fail(ErrorCode::CompletionFailure, e.detail());
    }

    // complete_to_unitary puts W first; move W's columns onto the anchor slots
    // b*K + 0 and the completion onto the remaining slots in order.
    NaimarkDilation dil;
    dil.system_dim = d;
    dil.ancilla_dim = k;
    dil.anchor_index = 0;
    dil.unitary = Matrix(n, n);
    std::size_t next = d;
    for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t src = c == 0 ? b : next++;
            dil.unitary.set_col(b * k + c, completed.col(src));
        }
    }

    const Matrix u_dag = dil.unitary.adjoint();
    dil.projectors.reserve(k);
    for (std::size_t mu = 0; mu < k; ++mu) {
        // U^dagger (1_B (x) |mu><mu|) U = sum_b (row b*K+mu of U)^dagger (row b*K+mu of U)
        Matrix p(n, n);
        for (std::size_t b = 0; b < d; ++b) {
            const std::size_t r = b * k + mu;
            for (std::size_t i = 0; i < n; ++i) {
                const Complex ui = u_dag(i, r);
                if (ui == Complex{}) continue;
                for (std::size_t j = 0; j < n; ++j) p(i, j) += ui * dil.unitary(r, j);
            }
        }
        dil.projectors.push_back(p.hermitian_part());
    }
    return dil;
}

Matrix compress_to_anchor(const Matrix& p, const NaimarkDilation& dil) {
    const std::size_t d = dil.system_dim;
    const std::size_t k = dil.ancilla_dim;
    Matrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out(i, j) = p(i * k + dil.anchor_index, j * k + dil.anchor_index);
    return out;
}

DilationResiduals dilation_residuals(const NaimarkDilation& dil, const KrausChannel& ch) {
    DilationResiduals r;
    const auto povm = ch.povm();
    const std::size_t n = dil.system_dim * dil.ancilla_dim;
    Matrix sum(n, n);
    for (std::size_t mu = 0; mu < dil.projectors.size(); ++mu) {
        const Matrix& p = dil.projectors[mu];
        const double c = distance(compress_to_anchor(p, dil), povm[mu]);
        r.compression.push_back(c);
        r.max_compression = std::max(r.max_compression, c);
        r.max_projector = std::max({r.max_projector, distance(p * p, p), hermiticity_residual(p)});
        sum += p;
    }
    r.resolution = distance(sum, Matrix::identity(n));
    return r;
}

double dilation_statistics_residual(const NaimarkDilation& dil, const KrausChannel& ch, const DensityMatrix& rho_b) {
    if (rho_b.dim() != ch.dim()) fail(ErrorCode::DimensionMismatch, "state does not match channel dimension");
    Matrix anchor(dil.ancilla_dim, dil.ancilla_dim);
    anchor(dil.anchor_index, dil.anchor_index) = 1.0;
    const Matrix extended = kron(rho_b.matrix(), anchor);
    double worst = 0.0;
    for (std::size_t mu = 0; mu < ch.num_outcomes(); ++mu) {
        const double dilated = (dil.projectors[mu] * extended).trace().real();
        const Matrix& m = ch.kraus()[mu];
        const double direct = (m * rho_b.matrix() * m.adjoint()).trace().real();
        worst = std::max(worst, std::abs(dilated - direct));
    }
    return worst;
}

KrausChannel random_channel(std::size_t dim, std::size_t num_kraus, Rng& rng) {
    if (num_kraus == 0) fail(ErrorCode::InvalidArgument, "num_kraus must be at least 1");
    const Matrix v = random_isometry(dim * num_kraus, dim, rng);
    std::vector<Matrix> kraus;
    kraus.reserve(num_kraus);
    for (std::size_t mu = 0; mu < num_kraus; ++mu) kraus.push_back(v.block(mu * dim, 0, dim, dim));
    return KrausChannel(std::move(kraus), "random");
}

}  // namespace holevo
