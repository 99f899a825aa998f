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

#include "holevo/qstate.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

DensityMatrix::DensityMatrix(Matrix m, std::optional<BipartiteDims> dims, const Tolerances& tol) : dims_(dims) {
    if (!m.is_square() || m.empty()) fail(ErrorCode::NotDensity, "density matrix must be square and non-empty");
    if (!m.all_finite()) fail(ErrorCode::NotDensity, "density matrix has non-finite entries");
    if (dims && dims->dim_a * dims->dim_b != m.rows()) {
        fail(ErrorCode::DimensionMismatch, "bipartite split " + std::to_string(dims->dim_a) + "x" +
                                               std::to_string(dims->dim_b) + " does not match dimension " +
                                               std::to_string(m.rows()));
    }
    const double asym = hermiticity_residual(m);
    if (asym > tol.herm_tol * std::max(1.0, m.frobenius_norm())) {
        fail(ErrorCode::NotDensity, "not Hermitian (residual " + std::to_string(asym) + ")");
    }
    mat_ = m.hermitian_part();
    const double tr_err = std::abs(mat_.trace() - Complex(1.0));
    if (tr_err > tol.trace_tol) fail(ErrorCode::NotDensity, "trace differs from 1 by " + std::to_string(tr_err));
    const double lmin = min_eigenvalue(mat_, tol.herm_tol);
    if (lmin < -tol.psd_tol) fail(ErrorCode::NotDensity, "min eigenvalue " + std::to_string(lmin));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi, std::optional<BipartiteDims> dims) {
    const double n = norm(psi);
    if (!(n > 0.0)) fail(ErrorCode::NotDensity, "zero state vector");
    Vector unit(psi.begin(), psi.end());
    for (auto& z : unit) z /= n;
    return DensityMatrix(Matrix::outer(unit, unit), dims);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
    return DensityMatrix(Matrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::with_dims(BipartiteDims dims) const {
    if (dims.dim_a * dims.dim_b != dim()) fail(ErrorCode::DimensionMismatch, "bipartite split does not match");
    DensityMatrix out = *this;
    out.dims_ = dims;
    return out;
}

double DensityMatrix::purity() const {
    double s = 0.0;
    for (const auto& z : mat_.entries()) s += std::norm(z);
    return s;
}

double entropy_of_spectrum(std::span<const double> eigenvalues, LogBase base, double psd_tol) {
    double s = 0.0;
    for (double lambda : eigenvalues) {
        if (lambda < -psd_tol) fail(ErrorCode::NotDensity, "negative eigenvalue " + std::to_string(lambda));
        if (lambda <= 0.0) continue;
        s -= lambda * std::log(lambda);
    }
    return base == LogBase::Bits ? s / std::numbers::ln2 : s;
}

double von_neumann_entropy(const DensityMatrix& rho, LogBase base, const Tolerances& tol) {
    const auto eig = hermitian_eig(rho.matrix(), tol.herm_tol);
    return entropy_of_spectrum(eig.eigenvalues, base, tol.psd_tol);
}

Matrix partial_trace(const Matrix& m, BipartiteDims dims, Subsystem keep) {
    const std::size_t da = dims.dim_a;
    const std::size_t db = dims.dim_b;
    if (!m.is_square() || m.rows() != da * db) fail(ErrorCode::DimensionMismatch, "partial trace dimensions");
    if (keep == Subsystem::A) {
        Matrix out(da, da);
        for (std::size_t i = 0; i < da; ++i)
            for (std::size_t j = 0; j < da; ++j)
                for (std::size_t b = 0; b < db; ++b) out(i, j) += m(i * db + b, j * db + b);
        return out;
    }
    Matrix out(db, db);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t a = 0; a < da; ++a) out(i, j) += m(a * db + i, a * db + j);
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep, const Tolerances& tol) {
    if (!rho.dims()) fail(ErrorCode::NoBipartiteSplit, "state carries no bipartite split");
    return DensityMatrix(partial_trace(rho.matrix(), *rho.dims(), keep), std::nullopt, tol);
}

double root_fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
    if (rho.dim() != sigma.dim()) {
        fail(ErrorCode::DimensionMismatch,
             "fidelity of states with dimensions " + std::to_string(rho.dim()) + " and " + std::to_string(sigma.dim()));
    }
    return trace_norm(matrix_sqrt(rho.matrix(), tol) * matrix_sqrt(sigma.matrix(), tol));
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma, const Tolerances& tol) {
    const double f = root_fidelity(rho, sigma, tol);
    return f * f;
}

DensityMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
    if (dim == 0 || rank == 0 || rank > dim) {
        fail(ErrorCode::BadRank, "rank " + std::to_string(rank) + " outside [1, " + std::to_string(dim) + "]");
    }
    const Matrix g = random_ginibre(dim, rank, rng);
    Matrix m = g * g.adjoint();
    m *= Complex(1.0 / m.trace().real());
    return DensityMatrix(m.hermitian_part());
}

Vector random_unit_vector(std::size_t dim, Rng& rng) {
    Vector v(dim);
    for (auto& z : v) z = rng.complex_normal();
    const double n = norm(v);
    for (auto& z : v) z /= n;
    return v;
}

DensityMatrix random_pure(std::size_t dim, Rng& rng) {
    if (dim == 0) fail(ErrorCode::BadRank, "dimension must be positive");
    const Vector v = random_unit_vector(dim, rng);
    return DensityMatrix(Matrix::outer(v, v));
}

DensityMatrix random_bipartite(std::size_t dim_a, std::size_t dim_b, std::size_t rank, Rng& rng) {
    return random_density(dim_a * dim_b, rank, rng).with_dims({dim_a, dim_b});
}

}  // namespace holevo
