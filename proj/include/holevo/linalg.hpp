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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "holevo/rng.hpp"
#include "holevo/tolerances.hpp"

namespace holevo {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;

/// Dense row-major complex matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix diagonal(std::span<const double> values);
    static Matrix diagonal(std::span<const Complex> values);
    static Matrix column(std::span<const Complex> v);
    /// |v><w|
    static Matrix outer(std::span<const Complex> v, std::span<const Complex> w);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<Complex> entries() noexcept { return entries_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Matrix adjoint() const;
    Matrix transpose() const;
    Complex trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

    Vector col(std::size_t j) const;
    void set_col(std::size_t j, std::span<const Complex> v);

    Matrix block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const;
    void set_block(std::size_t row0, std::size_t col0, const Matrix& b);

    /// (M + M^dagger) / 2
    Matrix hermitian_part() const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(Complex s);

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

Matrix operator+(Matrix lhs, const Matrix& rhs);
Matrix operator-(Matrix lhs, const Matrix& rhs);
Matrix operator*(const Matrix& lhs, const Matrix& rhs);
Matrix operator*(Complex s, Matrix m);
Matrix operator*(Matrix m, Complex s);
Vector operator*(const Matrix& m, std::span<const Complex> v);

/// <v|w>, conjugate-linear in v.
Complex inner(std::span<const Complex> v, std::span<const Complex> w);
double norm(std::span<const Complex> v);

/// ||A - B||_F
double distance(const Matrix& a, const Matrix& b);
/// ||H - H^dagger||_F
double hermiticity_residual(const Matrix& h);
/// ||U^dagger U - 1||_F
double unitarity_residual(const Matrix& u);

struct HermitianEig {
    std::vector<double> eigenvalues;  // descending
    Matrix eigenvectors;              // columns, orthonormal
};

/// Cyclic complex Jacobi. Throws NotHermitian when
/// ||H - H^dagger||_F > tol * max(1, ||H||_F), NoConvergence after 100 sweeps.
HermitianEig hermitian_eig(const Matrix& h, double tol = Tolerances{}.herm_tol);

double min_eigenvalue(const Matrix& h, double tol = Tolerances{}.herm_tol);

/// Sum_i f(lambda_i) q_i q_i^dagger for an already computed decomposition.
template <typename F>
Matrix spectral_apply(const HermitianEig& eig, F&& f);

/// Principal square root of a PSD matrix. Eigenvalues in [-psd_tol, 0) are
/// clipped to zero; anything more negative throws NotPSD.
Matrix matrix_sqrt(const Matrix& h, const Tolerances& tol = {});

struct Svd {
    Matrix u;                  // rows x rows unitary
    std::vector<double> s;     // min(rows, cols) values, descending
    Matrix v;                  // cols x cols unitary
};

/// Full SVD by one-sided (Hestenes) Jacobi; X = U diag(S) V^dagger.
Svd svd(const Matrix& x);

std::vector<double> singular_values(const Matrix& x);
double trace_norm(const Matrix& x);
double operator_norm(const Matrix& x);

struct PolarFactors {
    Matrix unitary;   // Omega
    Matrix positive;  // |X| = Omega X = sqrt(X^dagger X)
};

/// Left polar factor in the convention |X| = Omega X. Omega = V U^dagger from
/// the full SVD X = U S V^dagger, which fixes a witness when X is singular.
PolarFactors polar_left(const Matrix& x);

/// Orthogonal projector onto eigenvectors with eigenvalue > rank_tol * lambda_max.
Matrix support_projection(const Matrix& h, const Tolerances& tol = {});
std::size_t numerical_rank(const Matrix& x, double rank_tol = Tolerances{}.rank_tol);

/// Moore-Penrose pseudo-inverse; singular values below rank_tol * s_max are zero.
Matrix pseudo_inverse(const Matrix& x, double rank_tol = Tolerances{}.rank_tol);

/// Kronecker product, A index major: (i_A d_B + i_B, j_A d_B + j_B).
Matrix kron(const Matrix& a, const Matrix& b);

/// Orthonormalizes `columns` (modified Gram-Schmidt, two passes) and extends
/// them to an n x n unitary. The first columns of the result span the input.
/// Throws CompletionFailure if the input columns are numerically dependent.
Matrix complete_to_unitary(const Matrix& columns);

/// Q factor of the Gram-Schmidt QR of `x` (n x k, k <= n); columns orthonormal.
Matrix orthonormalize_columns(const Matrix& x);

Matrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar unitary: QR of a Ginibre matrix with positive R diagonal.
Matrix random_haar_unitary(std::size_t dim, Rng& rng);
/// Haar isometry dim_in -> dim_out (dim_out >= dim_in), dim_out x dim_in.
Matrix random_isometry(std::size_t dim_out, std::size_t dim_in, Rng& rng);

template <typename F>
Matrix spectral_apply(const HermitianEig& eig, F&& f) {
    const std::size_t n = eig.eigenvectors.rows();
    Matrix out(n, n);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double w = f(eig.eigenvalues[k]);
        if (w == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex qi = eig.eigenvectors(i, k) * w;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += qi * std::conj(eig.eigenvectors(j, k));
        }
    }
    return out;
}

}  // namespace holevo
