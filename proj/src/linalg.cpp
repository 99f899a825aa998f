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

#include "holevo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "holevo/error.hpp"

namespace holevo {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        fail(ErrorCode::DimensionMismatch, "matrix entry count " + std::to_string(entries_.size()) +
                                               " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::diagonal(std::span<const Complex> values) {
    Matrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

Matrix Matrix::column(std::span<const Complex> v) {
    return Matrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

Matrix Matrix::outer(std::span<const Complex> v, std::span<const Complex> w) {
    Matrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Complex Matrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double Matrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

bool Matrix::all_finite() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

Vector Matrix::col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Matrix::set_col(std::size_t j, std::span<const Complex> v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

Matrix Matrix::block(std::size_t row0, std::size_t col0, std::size_t rows, std::size_t cols) const {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

void Matrix::set_block(std::size_t row0, std::size_t col0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(row0 + i, col0 + j) = b(i, j);
}

Matrix Matrix::hermitian_part() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

Matrix& Matrix::operator*=(Complex s) {
    for (auto& z : entries_) z *= s;
    return *this;
}

Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
Matrix operator*(Complex s, Matrix m) { return m *= s; }
Matrix operator*(Matrix m, Complex s) { return m *= s; }

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        fail(ErrorCode::DimensionMismatch, "matrix product " + std::to_string(lhs.rows()) + "x" +
                                               std::to_string(lhs.cols()) + " * " + std::to_string(rhs.rows()) +
                                               "x" + std::to_string(rhs.cols()));
    }
    Matrix out(lhs.rows(), rhs.cols());
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

Vector operator*(const Matrix& m, std::span<const Complex> v) {
    if (m.cols() != v.size()) fail(ErrorCode::DimensionMismatch, "matrix-vector product");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

Complex inner(std::span<const Complex> v, std::span<const Complex> w) {
    if (v.size() != w.size()) fail(ErrorCode::DimensionMismatch, "inner product");
    Complex s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += std::conj(v[i]) * w[i];
    return s;
}

double norm(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return std::sqrt(s);
}

double distance(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::DimensionMismatch, "distance");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += std::norm(a.entries()[k] - b.entries()[k]);
    return std::sqrt(s);
}

double hermiticity_residual(const Matrix& h) {
    if (!h.is_square()) fail(ErrorCode::DimensionMismatch, "hermiticity check needs a square matrix");
    double s = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = 0; j < h.cols(); ++j) s += std::norm(h(i, j) - std::conj(h(j, i)));
    return std::sqrt(s);
}

double unitarity_residual(const Matrix& u) {
    if (!u.is_square()) return std::numeric_limits<double>::infinity();
    return distance(u.adjoint() * u, Matrix::identity(u.rows()));
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-13;

void sort_descending(std::vector<double>& values, Matrix& vectors) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> sorted(n);
    Matrix permuted(vectors.rows(), n);
    for (std::size_t k = 0; k < n; ++k) {
        sorted[k] = values[order[k]];
        for (std::size_t i = 0; i < vectors.rows(); ++i) permuted(i, k) = vectors(i, order[k]);
    }
    values = std::move(sorted);
    vectors = std::move(permuted);
}

// t = tan(theta) annihilating the off-diagonal of a real 2x2 symmetric block,
// the smaller root of t^2 + 2 zeta t - 1 = 0.
double jacobi_tangent(double zeta) {
    if (zeta == 0.0) return 1.0;
    const double sign = zeta > 0.0 ? 1.0 : -1.0;
    return sign / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
}

}  // namespace

HermitianEig hermitian_eig(const Matrix& h, double tol) {
    if (!h.is_square()) fail(ErrorCode::NotHermitian, "eigendecomposition needs a square matrix");
    if (!h.all_finite()) fail(ErrorCode::NotHermitian, "matrix has non-finite entries");
    const double hnorm = h.frobenius_norm();
    const double asym = hermiticity_residual(h);
    if (asym > tol * std::max(1.0, hnorm)) {
        fail(ErrorCode::NotHermitian, "||H - H^dagger||_F = " + std::to_string(asym));
    }

    const std::size_t n = h.rows();
    Matrix a = h.hermitian_part();
    Matrix q = Matrix::identity(n);

    const auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a(i, j));
        return std::sqrt(s);
    };

    const double threshold = kOffDiagonalThreshold * hnorm;
    int sweep = 0;
    while (off_norm() > threshold) {
        if (++sweep > kMaxSweeps) fail(ErrorCode::NoConvergence, "Jacobi eigensolver exceeded sweep budget");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                const Complex apr = a(p, r);
                const double mag = std::abs(apr);
                if (mag == 0.0) continue;
                const Complex phase = apr / mag;
                const double zeta = (a(r, r).real() - a(p, p).real()) / (2.0 * mag);
                const double t = jacobi_tangent(zeta);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                // G = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, r).
                const Complex gpp = c;
                const Complex gpr = s;
                const Complex grp = -s * std::conj(phase);
                const Complex grr = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akr = a(k, r);
                    a(k, p) = akp * gpp + akr * grp;
                    a(k, r) = akp * gpr + akr * grr;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex ark = a(r, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(grp) * ark;
                    a(r, k) = std::conj(gpr) * apk + std::conj(grr) * ark;
                }
                a(p, r) = 0.0;
                a(r, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(r, r) = a(r, r).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex qkp = q(k, p);
                    const Complex qkr = q(k, r);
                    q(k, p) = qkp * gpp + qkr * grp;
                    q(k, r) = qkp * gpr + qkr * grr;
                }
            }
        }
    }

    HermitianEig out;
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i).real();
    out.eigenvectors = std::move(q);
    sort_descending(out.eigenvalues, out.eigenvectors);

#ifndef NDEBUG
    {
        const double eig_tol = Tolerances{}.eig_tol;
        Matrix recon = spectral_apply(out, [](double x) { return x; });
        const double residual = distance(recon, h.hermitian_part());
        // Accumulated rounding grows with n; the contract is stated at unit scale.
        if (residual > eig_tol * std::max(1.0, hnorm) * std::max<double>(1.0, static_cast<double>(n) / 8.0)) {
            fail(ErrorCode::Internal, "eigendecomposition reconstruction residual " + std::to_string(residual));
        }
    }
#endif
    return out;
}

double min_eigenvalue(const Matrix& h, double tol) {
    const auto eig = hermitian_eig(h, tol);
    return eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
}

Matrix matrix_sqrt(const Matrix& h, const Tolerances& tol) {
    const auto eig = hermitian_eig(h, tol.herm_tol);
    if (!eig.eigenvalues.empty() && eig.eigenvalues.back() < -tol.psd_tol) {
        fail(ErrorCode::NotPSD, "min eigenvalue " + std::to_string(eig.eigenvalues.back()));
    }
    return spectral_apply(eig, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }).hermitian_part();
}

namespace {

// One-sided Jacobi on the columns of `a` (m x n, m >= n). On return the
// columns of `a` are mutually orthogonal and a_in * v = a.
void hestenes(Matrix& a, Matrix& v) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const double eps = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<std::size_t>(m, 1));
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t r = p + 1; r < n; ++r) {
                double alpha = 0.0;
                double beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t k = 0; k < m; ++k) {
                    alpha += std::norm(a(k, p));
                    beta += std::norm(a(k, r));
                    gamma += std::conj(a(k, p)) * a(k, r);
                }
                const double mag = std::abs(gamma);
                if (mag == 0.0 || mag <= eps * std::sqrt(alpha * beta)) continue;
                rotated = true;
                const Complex phase = std::conj(gamma / mag);
                const double zeta = (beta - alpha) / (2.0 * mag);
                const double t = jacobi_tangent(zeta);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < m; ++k) {
                    const Complex ap = a(k, p);
                    const Complex ar = a(k, r) * phase;
                    a(k, p) = c * ap - s * ar;
                    a(k, r) = s * ap + c * ar;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vp = v(k, p);
                    const Complex vr = v(k, r) * phase;
                    v(k, p) = c * vp - s * vr;
                    v(k, r) = s * vp + c * vr;
                }
            }
        }
        if (!rotated) return;
    }
    fail(ErrorCode::NoConvergence, "one-sided Jacobi SVD exceeded sweep budget");
}

Svd svd_tall(const Matrix& x) {
    const std::size_t m = x.rows();
    const std::size_t n = x.cols();
    Matrix a = x;
    Matrix v = Matrix::identity(n);
    hestenes(a, v);

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = norm(a.col(j));
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    Svd out;
    out.s.resize(n);
    out.v = Matrix(n, n);
    const double smax = n == 0 ? 0.0 : sigma[order[0]];
    const double floor = smax * std::numeric_limits<double>::epsilon();
    Matrix basis(m, 0);
    std::vector<Vector> kept;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.s[k] = sigma[j];
        for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
        if (sigma[j] > floor && sigma[j] > 0.0) {
            Vector col = a.col(j);
            for (auto& z : col) z /= sigma[j];
            kept.push_back(std::move(col));
        }
    }
    // Columns for the zero singular values come from the unitary completion.
    Matrix partial(m, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) partial.set_col(k, kept[k]);
    out.u = complete_to_unitary(partial);
    return out;
}

}  // namespace

Svd svd(const Matrix& x) {
    if (!x.all_finite()) fail(ErrorCode::InvalidArgument, "svd of non-finite matrix");
    if (x.rows() >= x.cols()) return svd_tall(x);
    Svd t = svd_tall(x.adjoint());
    return Svd{std::move(t.v), std::move(t.s), std::move(t.u)};
}

std::vector<double> singular_values(const Matrix& x) { return svd(x).s; }

double trace_norm(const Matrix& x) {
    const auto s = singular_values(x);
    return std::accumulate(s.begin(), s.end(), 0.0);
}

double operator_norm(const Matrix& x) {
    if (x.empty()) return 0.0;
    const auto s = singular_values(x);
    return s.empty() ? 0.0 : s.front();
}

PolarFactors polar_left(const Matrix& x) {
    if (!x.is_square()) fail(ErrorCode::DimensionMismatch, "polar decomposition needs a square matrix");
    const Svd d = svd(x);
    PolarFactors out;
    out.unitary = d.v * d.u.adjoint();
    Matrix vs = d.v;
    for (std::size_t j = 0; j < vs.cols(); ++j)
        for (std::size_t i = 0; i < vs.rows(); ++i) vs(i, j) *= d.s[j];
    out.positive = (vs * d.v.adjoint()).hermitian_part();
    return out;
}

Matrix support_projection(const Matrix& h, const Tolerances& tol) {
    const auto eig = hermitian_eig(h, tol.herm_tol);
    if (eig.eigenvalues.empty()) return Matrix();
    if (eig.eigenvalues.back() < -tol.psd_tol) {
        fail(ErrorCode::NotPSD, "min eigenvalue " + std::to_string(eig.eigenvalues.back()));
    }
    const double cut = tol.rank_tol * std::max(eig.eigenvalues.front(), 0.0);
    return spectral_apply(eig, [&](double x) { return x > cut && x > 0.0 ? 1.0 : 0.0; }).hermitian_part();
}

std::size_t numerical_rank(const Matrix& x, double rank_tol) {
    if (x.empty()) return 0;
    const auto s = singular_values(x);
    if (s.empty() || s.front() == 0.0) return 0;
    return static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](double v) { return v > rank_tol * s.front(); }));
}

Matrix pseudo_inverse(const Matrix& x, double rank_tol) {
    const Svd d = svd(x);
    Matrix out(x.cols(), x.rows());
    const double cut = d.s.empty() ? 0.0 : rank_tol * d.s.front();
    for (std::size_t k = 0; k < d.s.size(); ++k) {
        if (!(d.s[k] > cut) || d.s[k] == 0.0) continue;
        const double w = 1.0 / d.s[k];
        for (std::size_t i = 0; i < x.cols(); ++i) {
            const Complex vi = d.v(i, k) * w;
            for (std::size_t j = 0; j < x.rows(); ++j) out(i, j) += vi * std::conj(d.u(j, k));
        }
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex s = a(ia, ja);
            if (s == Complex{}) continue;
            for (std::size_t ib = 0; ib < b.rows(); ++ib)
                for (std::size_t jb = 0; jb < b.cols(); ++jb)
                    out(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
    return out;
}

namespace {

// Removes the components of `v` along the first `count` columns of `basis`,
// twice (classical Gram-Schmidt needs the second pass for stability).
void project_out(Vector& v, const Matrix& basis, std::size_t count) {
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < count; ++k) {
            Complex c = 0.0;
            for (std::size_t i = 0; i < v.size(); ++i) c += std::conj(basis(i, k)) * v[i];
            for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * basis(i, k);
        }
    }
}

constexpr double kDependenceThreshold = 1e-8;

}  // namespace

Matrix orthonormalize_columns(const Matrix& x) {
    const std::size_t n = x.rows();
    const std::size_t k = x.cols();
    if (k > n) fail(ErrorCode::CompletionFailure, "more columns than rows");
    Matrix q(n, k);
    for (std::size_t j = 0; j < k; ++j) {
        Vector v = x.col(j);
        const double before = norm(v);
        project_out(v, q, j);
        const double after = norm(v);
        if (!(after > kDependenceThreshold * std::max(before, 1e-300))) {
            fail(ErrorCode::CompletionFailure, "column " + std::to_string(j) + " is numerically dependent");
        }
        for (auto& z : v) z /= after;
        q.set_col(j, v);
    }
    return q;
}

Matrix complete_to_unitary(const Matrix& columns) {
    const std::size_t n = columns.rows();
    const std::size_t k = columns.cols();
    Matrix out(n, n);
    if (k > 0) out.set_block(0, 0, orthonormalize_columns(columns));
    std::vector<bool> used(n, false);
    for (std::size_t j = k; j < n; ++j) {
        // Greedy: the standard basis vector with the largest residual is
        // always at least 1/sqrt(n) away from the current span.
        double best = -1.0;
        Vector best_vec;
        std::size_t best_idx = 0;
        for (std::size_t e = 0; e < n; ++e) {
            if (used[e]) continue;
            Vector v(n);
            v[e] = 1.0;
            project_out(v, out, j);
            const double r = norm(v);
            if (r > best) {
                best = r;
                best_vec = std::move(v);
                best_idx = e;
            }
        }
        if (!(best > kDependenceThreshold)) fail(ErrorCode::CompletionFailure, "orthonormal completion degenerated");
        used[best_idx] = true;
        for (auto& z : best_vec) z /= best;
        out.set_col(j, best_vec);
    }
    return out;
}

Matrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix g(rows, cols);
    for (auto& z : g.entries()) z = rng.complex_normal();
    return g;
}

Matrix random_haar_unitary(std::size_t dim, Rng& rng) { return random_isometry(dim, dim, rng); }

Matrix random_isometry(std::size_t dim_out, std::size_t dim_in, Rng& rng) {
    if (dim_in == 0 || dim_out < dim_in) fail(ErrorCode::InvalidArgument, "isometry needs 1 <= dim_in <= dim_out");
    return orthonormalize_columns(random_ginibre(dim_out, dim_in, rng));
}

}  // namespace holevo
