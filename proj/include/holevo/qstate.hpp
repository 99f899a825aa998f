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
#include <optional>
#include <span>

#include "holevo/linalg.hpp"

namespace holevo {

struct BipartiteDims {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    friend bool operator==(const BipartiteDims&, const BipartiteDims&) = default;
};

enum class Subsystem { A, B };
enum class LogBase { Bits, Nats };

/// Trace-one PSD matrix, optionally split as H_A (x) H_B with A-major
/// composite index i = i_A * d_B + i_B.
class DensityMatrix {
public:
    /// Validates Hermiticity, unit trace and positivity; throws NotDensity.
    explicit DensityMatrix(Matrix m, std::optional<BipartiteDims> dims = std::nullopt, const Tolerances& tol = {});

    static DensityMatrix pure(std::span<const Complex> psi, std::optional<BipartiteDims> dims = std::nullopt);
    static DensityMatrix maximally_mixed(std::size_t dim);

    const Matrix& matrix() const noexcept { return mat_; }
    std::size_t dim() const noexcept { return mat_.rows(); }
    const std::optional<BipartiteDims>& dims() const noexcept { return dims_; }
    DensityMatrix with_dims(BipartiteDims dims) const;

    double purity() const;

private:
    Matrix mat_;
    std::optional<BipartiteDims> dims_;
};

/// -sum lambda log lambda with lambda log lambda := 0 for lambda <= 0.
/// Eigenvalues below -psd_tol throw NotDensity.
double entropy_of_spectrum(std::span<const double> eigenvalues, LogBase base = LogBase::Bits,
                           double psd_tol = Tolerances{}.psd_tol);
double von_neumann_entropy(const DensityMatrix& rho, LogBase base = LogBase::Bits, const Tolerances& tol = {});

/// Partial trace on a raw matrix over the factor not kept.
Matrix partial_trace(const Matrix& m, BipartiteDims dims, Subsystem keep);
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep, const Tolerances& tol = {});

/// Uhlmann fidelity (Tr|sqrt(rho) sqrt(sigma)|)^2.
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol = {});
double root_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol = {});

/// G G^dagger / Tr(G G^dagger) with G Ginibre of shape dim x rank.
DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);
DensityMatrix random_pure(std::size_t dim, Rng& rng);
DensityMatrix random_bipartite(std::size_t dim_a, std::size_t dim_b, std::size_t rank, Rng& rng);
Vector random_unit_vector(std::size_t dim, Rng& rng);

}  // namespace holevo
