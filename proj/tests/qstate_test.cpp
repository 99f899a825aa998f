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

#include <cmath>

#include "holevo/error.hpp"
#include "holevo/qstate.hpp"
#include "test_support.hpp"

namespace holevo {
namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Ok;
}

Vector ket(std::initializer_list<Complex> v) { return Vector(v); }

double binary_entropy(double p) { return -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

TEST(DensityMatrixTest, ValidatesInput) {
    EXPECT_EQ(code_of([] { DensityMatrix(Matrix{{0.5, 0.0}, {0.0, 0.4}}); }), ErrorCode::NotDensity);
    EXPECT_EQ(code_of([] { DensityMatrix(Matrix{{1.5, 0.0}, {0.0, -0.5}}); }), ErrorCode::NotDensity);
    EXPECT_EQ(code_of([] { DensityMatrix(Matrix{{0.5, 0.5}, {0.0, 0.5}}); }), ErrorCode::NotDensity);
    EXPECT_EQ(code_of([] { DensityMatrix(Matrix(2, 3)); }), ErrorCode::NotDensity);
    EXPECT_EQ(code_of([] { DensityMatrix(DensityMatrix::maximally_mixed(4).matrix(), BipartiteDims{3, 2}); }),
              ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { DensityMatrix(DensityMatrix::maximally_mixed(4).matrix(), BipartiteDims{2, 2}); }),
              ErrorCode::Ok);
}

TEST(DensityMatrixTest, PureAndMixed) {
    const DensityMatrix p = DensityMatrix::pure(ket({1.0, Complex(0, 1)}));
    EXPECT_NEAR(p.purity(), 1.0, 1e-14);
    EXPECT_NEAR(p.matrix()(0, 1).imag(), -0.5, 1e-15);
    EXPECT_NEAR(DensityMatrix::maximally_mixed(4).purity(), 0.25, 1e-15);
}

TEST(EntropyTest, ClosedForms) {
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::pure(ket({1.0, 0.0}))), 0.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2)), 1.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(8)), 3.0, 1e-12);
    EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(2), LogBase::Nats), std::log(2.0), 1e-12);
    const DensityMatrix d(Matrix{{0.25, 0.0}, {0.0, 0.75}});
    EXPECT_NEAR(von_neumann_entropy(d), 0.811278124459, 1e-9);
    // average of |0> and |+>: eigenvalues (1 +- 1/sqrt2)/2
    const DensityMatrix avg(Matrix{{0.75, 0.25}, {0.25, 0.25}});
    EXPECT_NEAR(von_neumann_entropy(avg), binary_entropy((1 + 1 / std::sqrt(2.0)) / 2), 1e-12);
    EXPECT_NEAR(von_neumann_entropy(avg), 0.600876, 1e-6);
}

TEST(EntropyTest, SpectrumClipping) {
    const std::vector<double> spectrum{0.5, 0.5, -1e-12};
    EXPECT_NEAR(entropy_of_spectrum(spectrum), 1.0, 1e-12);
}

TEST(PartialTraceTest, BellStateMarginals) {
    const double s = 1 / std::sqrt(2.0);
    const DensityMatrix bell = DensityMatrix::pure(ket({s, 0.0, 0.0, s}), BipartiteDims{2, 2});
    const DensityMatrix ra = partial_trace(bell, Subsystem::A);
    const DensityMatrix rb = partial_trace(bell, Subsystem::B);
    EXPECT_LT(distance(ra.matrix(), DensityMatrix::maximally_mixed(2).matrix()), 1e-15);
    EXPECT_LT(distance(rb.matrix(), DensityMatrix::maximally_mixed(2).matrix()), 1e-15);
}

TEST(PartialTraceTest, ProductStateFactorizes) {
    Rng rng(3);
    const DensityMatrix a = random_density(3, 2, rng);
    const DensityMatrix b = random_density(2, 2, rng);
    const DensityMatrix ab(kron(a.matrix(), b.matrix()), BipartiteDims{3, 2});
    EXPECT_LT(distance(partial_trace(ab, Subsystem::A).matrix(), a.matrix()), 1e-14);
    EXPECT_LT(distance(partial_trace(ab, Subsystem::B).matrix(), b.matrix()), 1e-14);
}

TEST(PartialTraceTest, NeedsSplit) {
    EXPECT_EQ(code_of([] { partial_trace(DensityMatrix::maximally_mixed(4), Subsystem::A); }),
              ErrorCode::NoBipartiteSplit);
}

TEST(PartialTraceTest, ExplicitIndexOracle) {
    Rng rng(17);
    const DensityMatrix rho = random_bipartite(2, 3, 6, rng);
    const Matrix& m = rho.matrix();
    Matrix ra(2, 2), rb(3, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 3; ++k) ra(i, j) += m(i * 3 + k, j * 3 + k);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l)
            for (std::size_t i = 0; i < 2; ++i) rb(k, l) += m(i * 3 + k, i * 3 + l);
    EXPECT_LT(distance(partial_trace(rho, Subsystem::A).matrix(), ra), 1e-15);
    EXPECT_LT(distance(partial_trace(rho, Subsystem::B).matrix(), rb), 1e-15);
}

TEST(FidelityTest, KnownValues) {
    const DensityMatrix z0 = DensityMatrix::pure(ket({1.0, 0.0}));
    const DensityMatrix z1 = DensityMatrix::pure(ket({0.0, 1.0}));
    const DensityMatrix plus = DensityMatrix::pure(ket({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)}));
    EXPECT_NEAR(fidelity(z0, z0), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(z0, z1), 0.0, 1e-12);
    EXPECT_NEAR(fidelity(z0, plus), 0.5, 1e-12);
    EXPECT_NEAR(fidelity(z0, DensityMatrix::maximally_mixed(2)), 0.5, 1e-12);
}

TEST(FidelityTest, SymmetricAndBounded) {
    Rng rng(21);
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix a = random_density(3, 1 + rng.uniform_index(3), rng);
        const DensityMatrix b = random_density(3, 1 + rng.uniform_index(3), rng);
        const double f = fidelity(a, b);
        EXPECT_NEAR(f, fidelity(b, a), 1e-10);
        EXPECT_GE(f, -1e-12);
        EXPECT_LE(f, 1 + 1e-10);
        EXPECT_NEAR(fidelity(a, a), 1.0, 1e-9);
    }
}

TEST(FidelityTest, PureStateOverlapOracle) {
    Rng rng(4);
    const Vector u = random_unit_vector(4, rng);
    const Vector v = random_unit_vector(4, rng);
    const double overlap = std::norm(inner(u, v));
    EXPECT_NEAR(fidelity(DensityMatrix::pure(u), DensityMatrix::pure(v)), overlap, 1e-10);
}

TEST(RandomStateTest, RankAndValidity) {
    Rng rng(1);
    for (std::size_t rank = 1; rank <= 4; ++rank) {
        const DensityMatrix r = random_density(4, rank, rng);
        EXPECT_EQ(numerical_rank(r.matrix()), rank);
        EXPECT_NEAR(r.matrix().trace().real(), 1.0, 1e-12);
    }
    EXPECT_EQ(code_of([&] { random_density(3, 4, rng); }), ErrorCode::BadRank);
    EXPECT_EQ(code_of([&] { random_density(3, 0, rng); }), ErrorCode::BadRank);
    const DensityMatrix ab = random_bipartite(2, 3, 2, rng);
    ASSERT_TRUE(ab.dims().has_value());
    EXPECT_EQ(ab.dims()->dim_b, 3u);
}

}  // namespace
}  // namespace holevo
