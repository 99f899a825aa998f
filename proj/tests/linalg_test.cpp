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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "holevo/error.hpp"
#include "holevo/linalg.hpp"
#include "holevo/rng.hpp"
#include "test_support.hpp"

namespace holevo {
namespace {

using testing::from_eigen;
using testing::random_hermitian;
using testing::random_psd;
using testing::reference_eigenvalues;
using testing::to_eigen;

TEST(MatrixTest, ConstructionRejectsWrongEntryCount) {
    try {
        Matrix(2, 2, std::vector<Complex>(3));
        FAIL() << "expected DimensionMismatch";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(MatrixTest, BasicAlgebra) {
    const Matrix a{{1.0, Complex(0, 2)}, {3.0, 4.0}};
    const Matrix adj = a.adjoint();
    EXPECT_EQ(adj(0, 1), Complex(3.0));
    EXPECT_EQ(adj(1, 0), Complex(0, -2));
    EXPECT_EQ(a.trace(), Complex(5.0));
    const Matrix prod = a * Matrix::identity(2);
    EXPECT_EQ(prod, a);
    EXPECT_NEAR(distance(a + a, Complex(2.0) * a), 0.0, 0.0);
    EXPECT_NEAR(Matrix::identity(3).frobenius_norm(), std::sqrt(3.0), 1e-15);
}

TEST(MatrixTest, KronIsAMajor) {
    const Matrix a{{1.0, 2.0}, {3.0, 4.0}};
    const Matrix b{{0.0, 1.0}, {1.0, 0.0}};
    const Matrix k = kron(a, b);
    ASSERT_EQ(k.rows(), 4u);
    // (a (x) b)(i*2 + k, j*2 + l) = a(i,j) b(k,l)
    EXPECT_EQ(k(0, 1), Complex(1.0));
    EXPECT_EQ(k(1, 2), Complex(2.0));
    EXPECT_EQ(k(3, 2), Complex(4.0));
    EXPECT_EQ(k(2, 2), Complex(0.0));
}

TEST(EigTest, MatchesReferenceOnRandomHermitian) {
    Rng rng(11);
    for (std::size_t n = 1; n <= 12; ++n) {
        for (int rep = 0; rep < 5; ++rep) {
            const Matrix h = random_hermitian(n, rng);
            const HermitianEig eig = hermitian_eig(h);
            const Eigen::VectorXd ref = reference_eigenvalues(h);
            ASSERT_EQ(eig.eigenvalues.size(), n);
            for (std::size_t k = 0; k < n; ++k) {
                EXPECT_NEAR(eig.eigenvalues[k], ref(static_cast<Eigen::Index>(n - 1 - k)), 1e-11);
                if (k > 0) EXPECT_GE(eig.eigenvalues[k - 1], eig.eigenvalues[k]);
            }
            EXPECT_LT(unitarity_residual(eig.eigenvectors), 1e-12);
            const Matrix rebuilt = spectral_apply(eig, [](double x) { return x; });
            EXPECT_LT(distance(rebuilt, h), 1e-11 * std::max(1.0, h.frobenius_norm()));
        }
    }
}

TEST(EigTest, DegenerateSpectra) {
    const HermitianEig id = hermitian_eig(Matrix::identity(5));
    for (double v : id.eigenvalues) EXPECT_NEAR(v, 1.0, 1e-15);
    Rng rng(3);
    const Matrix q = random_haar_unitary(6, rng);
    std::vector<double> diag{2, 2, 2, 0, 0, -1};
    const Matrix h = q * Matrix::diagonal(std::span<const double>(diag)) * q.adjoint();
    const HermitianEig eig = hermitian_eig(h.hermitian_part());
    for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(eig.eigenvalues[k], diag[k], 1e-12);
}

TEST(EigTest, RejectsNonHermitian) {
    const Matrix m{{1.0, 1.0}, {0.0, 1.0}};
    try {
        hermitian_eig(m);
        FAIL() << "expected NotHermitian";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotHermitian);
    }
}

TEST(SqrtTest, SquaresBack) {
    Rng rng(5);
    for (std::size_t n : {1u, 2u, 4u, 7u}) {
        for (std::size_t rank : {std::size_t{1}, n}) {
            const Matrix p = random_psd(n, rank, rng);
            const Matrix r = matrix_sqrt(p);
            EXPECT_LT(hermiticity_residual(r), 1e-12);
            EXPECT_LT(distance(r * r, p), 1e-10 * std::max(1.0, p.frobenius_norm()));
            EXPECT_GE(testing::reference_min_eigenvalue(r.hermitian_part()), -1e-9);
        }
    }
}

TEST(SqrtTest, RejectsNegativeSpectrum) {
    const Matrix m{{1.0, 0.0}, {0.0, -0.5}};
    try {
        matrix_sqrt(m);
        FAIL() << "expected NotPSD";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotPSD);
    }
}

TEST(SvdTest, ReconstructsTallWideAndDeficient) {
    Rng rng(8);
    const std::vector<std::pair<std::size_t, std::size_t>> shapes{{3, 3}, {5, 2}, {2, 6}, {4, 4}, {1, 3}, {6, 1}};
    for (const auto& [r, c] : shapes) {
        for (std::size_t rank = 1; rank <= std::min(r, c); ++rank) {
            const Matrix x = random_ginibre(r, rank, rng) * random_ginibre(rank, c, rng);
            const Svd d = svd(x);
            ASSERT_EQ(d.u.rows(), r);
            ASSERT_EQ(d.v.rows(), c);
            EXPECT_LT(unitarity_residual(d.u), 1e-12);
            EXPECT_LT(unitarity_residual(d.v), 1e-12);
            Matrix sigma(r, c);
            for (std::size_t k = 0; k < d.s.size(); ++k) sigma(k, k) = d.s[k];
            EXPECT_LT(distance(d.u * sigma * d.v.adjoint(), x), 1e-11 * std::max(1.0, x.frobenius_norm()));
            const Eigen::JacobiSVD<testing::EMatrix> ref(to_eigen(x));
            for (std::size_t k = 0; k < d.s.size(); ++k) {
                EXPECT_NEAR(d.s[k], ref.singularValues()(static_cast<Eigen::Index>(k)), 1e-11);
            }
            EXPECT_EQ(numerical_rank(x), rank);
        }
    }
}

TEST(SvdTest, ZeroMatrix) {
    const Svd d = svd(Matrix(3, 2));
    EXPECT_LT(unitarity_residual(d.u), 1e-12);
    for (double s : d.s) EXPECT_EQ(s, 0.0);
}

TEST(NormTest, TraceAndOperatorNorms) {
    const Matrix m{{3.0, 0.0}, {0.0, Complex(0, -4)}};
    EXPECT_NEAR(trace_norm(m), 7.0, 1e-14);
    EXPECT_NEAR(operator_norm(m), 4.0, 1e-14);
    Rng rng(2);
    const Matrix x = random_ginibre(4, 3, rng);
    const Eigen::JacobiSVD<testing::EMatrix> ref(to_eigen(x));
    EXPECT_NEAR(trace_norm(x), ref.singularValues().sum(), 1e-12);
}

TEST(PolarTest, ConventionOmegaTimesXIsAbsolute) {
    Rng rng(4);
    for (std::size_t n : {1u, 2u, 3u, 5u}) {
        const Matrix x = random_ginibre(n, n, rng);
        const PolarFactors pf = polar_left(x);
        EXPECT_LT(unitarity_residual(pf.unitary), 1e-12);
        EXPECT_LT(distance(pf.unitary * x, pf.positive), 1e-11);
        EXPECT_LT(distance(pf.positive, matrix_sqrt((x.adjoint() * x).hermitian_part())), 1e-10);
    }
}

TEST(PolarTest, RankDeficientStillUnitary) {
    Rng rng(9);
    const Matrix x = random_ginibre(4, 1, rng) * random_ginibre(1, 4, rng);
    const PolarFactors pf = polar_left(x);
    EXPECT_LT(unitarity_residual(pf.unitary), 1e-12);
    EXPECT_LT(distance(pf.unitary * x, pf.positive), 1e-11);
}

TEST(PseudoInverseTest, MoorePenroseConditions) {
    Rng rng(6);
    const Matrix x = random_ginibre(5, 2, rng) * random_ginibre(2, 4, rng);
    const Matrix p = pseudo_inverse(x);
    EXPECT_LT(distance(x * p * x, x), 1e-10);
    EXPECT_LT(distance(p * x * p, p), 1e-10);
    EXPECT_LT(hermiticity_residual(x * p), 1e-10);
    EXPECT_LT(hermiticity_residual(p * x), 1e-10);
}

TEST(SupportTest, ProjectsOntoRange) {
    Rng rng(10);
    const Matrix p = random_psd(5, 2, rng);
    const Matrix s = support_projection(p);
    EXPECT_LT(distance(s * s, s), 1e-10);
    EXPECT_NEAR(s.trace().real(), 2.0, 1e-10);
    EXPECT_LT(distance(s * p, p), 1e-10);
}

TEST(CompletionTest, ExtendsIsometry) {
    Rng rng(12);
    const Matrix w = random_isometry(6, 2, rng);
    const Matrix u = complete_to_unitary(w);
    ASSERT_EQ(u.rows(), 6u);
    ASSERT_EQ(u.cols(), 6u);
    EXPECT_LT(unitarity_residual(u), 1e-12);
    EXPECT_LT(distance(u.block(0, 0, 6, 2), w), 1e-12);
}

TEST(CompletionTest, FromStandardColumns) {
    Matrix e(3, 1);
    e(1, 0) = 1.0;
    const Matrix u = complete_to_unitary(e);
    EXPECT_LT(unitarity_residual(u), 1e-14);
    EXPECT_LT(distance(u.block(0, 0, 3, 1), e), 1e-14);
}

TEST(RandomTest, HaarUnitaryIsUnitaryAndSeeded) {
    Rng a(77), b(77);
    const Matrix u = random_haar_unitary(4, a);
    EXPECT_LT(unitarity_residual(u), 1e-12);
    EXPECT_EQ(u, random_haar_unitary(4, b));
    const Matrix v = random_isometry(5, 3, a);
    EXPECT_LT(distance(v.adjoint() * v, Matrix::identity(3)), 1e-12);
}

TEST(RngTest, DeterministicStreams) {
    Rng a(1), b(1);
    for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next_u64(), b.next_u64());
    std::set<std::uint64_t> seeds;
    for (std::uint64_t k = 0; k < 1000; ++k) seeds.insert(Rng::stream_seed(42, k));
    EXPECT_EQ(seeds.size(), 1000u);
    EXPECT_NE(Rng::stream_seed(1, 0), Rng::stream_seed(2, 0));
}

TEST(RngTest, DistributionsAreSane) {
    Rng rng(123);
    double sum = 0.0, sq = 0.0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const double u = rng.uniform();
        ASSERT_GT(u, 0.0);
        ASSERT_LT(u, 1.0);
        const double z = rng.normal();
        sum += z;
        sq += z * z;
    }
    EXPECT_NEAR(sum / n, 0.0, 0.01);
    EXPECT_NEAR(sq / n, 1.0, 0.02);
    std::vector<int> counts(7);
    for (int k = 0; k < 70000; ++k) ++counts[rng.uniform_index(7)];
    for (int c : counts) EXPECT_NEAR(c, 10000, 500);
    double c2 = 0.0;
    for (int k = 0; k < n; ++k) c2 += std::norm(rng.complex_normal());
    EXPECT_NEAR(c2 / n, 1.0, 0.02);
}

TEST(ExamplesTest, SmallClosedForms) {
    const HermitianEig d = hermitian_eig(Matrix{{1.0, 0.0}, {0.0, 0.0}});
    EXPECT_EQ(d.eigenvalues, (std::vector<double>{1.0, 0.0}));
    EXPECT_LT(distance(d.eigenvectors, Matrix::identity(2)), 1e-15);
    const HermitianEig x = hermitian_eig(Matrix{{0.0, 1.0}, {1.0, 0.0}});
    EXPECT_NEAR(x.eigenvalues[0], 1.0, 1e-15);
    EXPECT_NEAR(x.eigenvalues[1], -1.0, 1e-15);

    EXPECT_LT(distance(matrix_sqrt(Matrix::identity(3)), Matrix::identity(3)), 1e-15);
    EXPECT_LT(distance(matrix_sqrt(Matrix{{4.0, 0.0}, {0.0, 9.0}}), Matrix{{2.0, 0.0}, {0.0, 3.0}}), 1e-14);
    EXPECT_EQ(singular_values(Matrix::identity(3)), (std::vector<double>{1.0, 1.0, 1.0}));
    const auto s = singular_values(Matrix{{3.0, 0.0}, {0.0, -4.0}});
    EXPECT_NEAR(s[0], 4.0, 1e-15);
    EXPECT_NEAR(s[1], 3.0, 1e-15);

    EXPECT_NEAR(min_eigenvalue(Matrix::identity(2)), 1.0, 1e-15);
    EXPECT_NEAR(min_eigenvalue(Matrix{{1.0, 0.0}, {0.0, -0.5}}), -0.5, 1e-15);
    EXPECT_LT(distance(support_projection(Matrix{{1.0, 0.0}, {0.0, 0.0}}), Matrix{{1.0, 0.0}, {0.0, 0.0}}), 1e-15);
    const std::vector<double> d12{1.0, 2.0}, d1122{1.0, 1.0, 2.0, 2.0};
    EXPECT_EQ(kron(Matrix::diagonal(std::span<const double>(d12)), Matrix::identity(2)),
              Matrix::diagonal(std::span<const double>(d1122)));
    EXPECT_EQ(kron(Matrix::identity(1), Matrix::identity(1)), Matrix::identity(1));
}

TEST(ExamplesTest, PolarEdgeCases) {
    Rng rng(31);
    const Matrix p = testing::random_psd(3, 3, rng);
    const PolarFactors fp = polar_left(p);
    EXPECT_LT(distance(fp.unitary * p, p), 1e-10);
    const PolarFactors neg = polar_left(Complex(-1.0) * Matrix::identity(3));
    EXPECT_LT(distance(neg.unitary, Complex(-1.0) * Matrix::identity(3)), 1e-14);
    EXPECT_LT(distance(neg.positive, Matrix::identity(3)), 1e-14);
    for (std::size_t n = 2; n <= 6; ++n) {
        const PolarFactors f = polar_left(random_ginibre(n, n, rng));
        EXPECT_LT(unitarity_residual(f.unitary), 1e-10);
        EXPECT_GE(testing::reference_min_eigenvalue(f.positive), -1e-9);
    }
}

TEST(ExamplesTest, MixedProductAndTraceNorm) {
    Rng rng(32);
    const Matrix a = random_ginibre(2, 2, rng), b = random_ginibre(2, 2, rng);
    const Matrix c = random_ginibre(2, 2, rng), d = random_ginibre(2, 2, rng);
    EXPECT_LT(distance(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-12);
    const Matrix h = testing::random_psd(4, 4, rng);
    EXPECT_NEAR(trace_norm(h), h.trace().real(), 1e-10);
    const Matrix g = random_ginibre(2, 3, rng);
    EXPECT_EQ(g.rows(), 2u);
    EXPECT_EQ(g.cols(), 3u);
    EXPECT_TRUE(g.all_finite());
}

}  // namespace
}  // namespace holevo
