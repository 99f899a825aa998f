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
#include <string>
#include <vector>

#include "holevo/qstate.hpp"

namespace holevo {

/// Quantum operation in Kraus form, sum_mu M_mu^dagger M_mu = 1.
/// Construction validates completeness and rejects degenerate operators.
class KrausChannel {
public:
    explicit KrausChannel(std::vector<Matrix> kraus, std::string label = {}, const Tolerances& tol = {});

    const std::vector<Matrix>& kraus() const noexcept { return kraus_; }
    const std::string& label() const noexcept { return label_; }
    std::size_t dim() const noexcept { return kraus_.front().rows(); }
    std::size_t num_outcomes() const noexcept { return kraus_.size(); }

    /// sqrt(M_mu^dagger M_mu), the POVM square roots.
    std::vector<Matrix> povm_roots(const Tolerances& tol = {}) const;
    std::vector<Matrix> povm() const;

private:
    std::vector<Matrix> kraus_;
    std::string label_;
};

/// ||sum M^dagger M - 1||_F for an arbitrary operator list.
double completeness_residual(const std::vector<Matrix>& kraus);
double validate(const KrausChannel& ch);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho, const Tolerances& tol = {});

/// Rank-one projectors |psi_mu><psi_mu| onto an orthonormal basis.
KrausChannel projective_from_basis(const std::vector<Vector>& basis, const Tolerances& tol = {});
/// Columns of a unitary as a basis.
std::vector<Vector> basis_from_columns(const Matrix& u);

/// P_mu = sum_{i in partition[mu]} |u_i><u_i|. Indices are 0-based and must
/// cover {0, ..., d-1} exactly once with non-empty groups.
KrausChannel projectors_from_partition(const std::vector<std::vector<std::size_t>>& partition,
                                       const std::vector<Vector>& basis, const Tolerances& tol = {});

/// Projective realization of a channel's POVM on H_B (x) H_C, dim H_C = K,
/// anchored at |0_C>. Composite index is b * K + c.
struct NaimarkDilation {
    std::vector<Matrix> projectors;
    std::size_t system_dim = 0;
    std::size_t ancilla_dim = 0;
    std::size_t anchor_index = 0;
    Matrix unitary;  // columns b*K + 0 hold the isometry W
};

NaimarkDilation naimark_dilate(const KrausChannel& ch, const Tolerances& tol = {});

struct DilationResiduals {
    std::vector<double> compression;  // ||<0|P_mu|0> - M^dagger M||_F per outcome
    double max_compression = 0.0;
    double max_projector = 0.0;       // max over mu of ||P^2 - P||_F and ||P - P^dagger||_F
    double resolution = 0.0;          // ||sum P - 1||_F
};

DilationResiduals dilation_residuals(const NaimarkDilation& dil, const KrausChannel& ch);

/// <0_C| P |0_C>
Matrix compress_to_anchor(const Matrix& p, const NaimarkDilation& dil);

/// max_mu |Tr(P_mu (rho_B (x) |0><0|)) - Tr(M_mu rho_B M_mu^dagger)|
double dilation_statistics_residual(const NaimarkDilation& dil, const KrausChannel& ch, const DensityMatrix& rho_b);

/// Kraus operators are the d x d blocks of a Haar isometry d -> d * num_kraus.
KrausChannel random_channel(std::size_t dim, std::size_t num_kraus, Rng& rng);

}  // namespace holevo
