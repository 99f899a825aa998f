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

#include "holevo/blockpos.hpp"
#include "holevo/error.hpp"
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

Block3 from_gram(const Matrix& x, std::size_t n1, std::size_t n2, std::size_t n3) {
    const Matrix g = x.adjoint() * x;
    Block3 b;
    b.a = g.block(0, 0, n1, n1);
    b.b = g.block(n1, n1, n2, n2);
    b.c = g.block(n1 + n2, n1 + n2, n3, n3);
    b.d = g.block(0, n1, n1, n2);
    b.e = g.block(0, n1 + n2, n1, n3);
    b.f = g.block(n1, n1 + n2, n2, n3);
    return b;
}

Block3 unitary_block(const Matrix& u, const Matrix& v, const Matrix& w) {
    const std::size_t d = u.rows();
    return Block3{Matrix::identity(d), Matrix::identity(d), Matrix::identity(d), u, v, w};
}

TEST(AssembleTest, LayoutAndTrivialVerdicts) {
    Rng rng(1);
    const Matrix x = random_ginibre(5, 6, rng);
    const Block3 b = from_gram(x, 2, 3, 1);
    EXPECT_LT(distance(assemble(b), x.adjoint() * x), 1e-14);
    const Block3 zero{Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)};
    EXPECT_TRUE(is_psd_block(zero).is_psd);
    const PsdVerdict id = is_psd_block(unitary_block(Matrix(2, 2), Matrix(2, 2), Matrix(2, 2)));
    EXPECT_TRUE(id.is_psd);
    EXPECT_NEAR(id.min_eigenvalue, 1.0, 1e-12);
    Block3 bad = b;
    bad.d = Matrix(3, 3);
    EXPECT_EQ(code_of([&] { assemble(bad); }), ErrorCode::DimensionMismatch);
}

TEST(Lemma1Test, UnitaryCase) {
    Rng rng(2);
    const Matrix u = random_haar_unitary(3, rng), w = random_haar_unitary(3, rng);
    const ContractionWitness c = lemma1_decompose(unitary_block(u, u * w, w));
    EXPECT_LT(distance(c.r1, u), 1e-9);
    EXPECT_LT(distance(c.r2, w), 1e-9);
    EXPECT_LT(c.residual_factor_a.frobenius_norm(), 1e-7);
    EXPECT_LT(c.residual_e, 1e-7);
}

TEST(Lemma1Test, DiagonalBlocks) {
    Rng rng(3);
    const Block3 b{testing::random_psd(2, 2, rng), testing::random_psd(3, 3, rng), testing::random_psd(2, 1, rng),
                   Matrix(2, 3), Matrix(2, 2), Matrix(3, 2)};
    const ContractionWitness c = lemma1_decompose(b);
    EXPECT_LT(c.r1.frobenius_norm(), 1e-12);
    EXPECT_LT(c.r2.frobenius_norm(), 1e-12);
    EXPECT_LT(c.r3.frobenius_norm(), 1e-12);
}

TEST(Lemma1Test, RandomGramBlocks) {
    Rng rng(4);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n1 = 1 + rng.uniform_index(3), n2 = 1 + rng.uniform_index(3), n3 = 1 + rng.uniform_index(3);
        const std::size_t rows = 1 + rng.uniform_index(n1 + n2 + n3);
        const Block3 b = from_gram(random_ginibre(rows, n1 + n2 + n3, rng), n1, n2, n3);
        const ContractionWitness c = lemma1_decompose(b);
        for (double nrm : c.norms) EXPECT_LE(nrm, 1 + 1e-8);
        EXPECT_LE(c.residual_d, 1e-8);
        EXPECT_LE(c.residual_f, 1e-8);
        EXPECT_LE(c.residual_e, 1e-7);
        const Matrix sa = matrix_sqrt(b.a), sb = matrix_sqrt(b.b), sc = matrix_sqrt(b.c);
        EXPECT_LT(distance(sa * c.r1 * sb, b.d), 1e-8);
        EXPECT_LT(distance(sb * c.r2 * sc, b.f), 1e-8);
    }
}

TEST(Lemma1Test, RejectsNonPsd) {
    Rng rng(5);
    const Matrix u = random_haar_unitary(2, rng), v = random_haar_unitary(2, rng), w = random_haar_unitary(2, rng);
    EXPECT_EQ(code_of([&] { lemma1_decompose(unitary_block(u, v, w)); }), ErrorCode::NotPSD);
}

TEST(Lemma2Test, IdentityPattern) {
    const Matrix id = Matrix::identity(2);
    const Lemma2Result r = lemma2_check(id, id, id);
    EXPECT_TRUE(r.is_psd);
    EXPECT_TRUE(r.consistent);
    const auto eig = hermitian_eig(lemma2_matrix(id, id, id));
    EXPECT_NEAR(eig.eigenvalues[0], 3.0, 1e-12);
    EXPECT_NEAR(eig.eigenvalues[1], 3.0, 1e-12);
    for (std::size_t k = 2; k < 6; ++k) EXPECT_NEAR(eig.eigenvalues[k], 0.0, 1e-12);
}

TEST(Lemma2Test, ConstructedAndIndependent) {
    Rng rng(6);
    for (int k = 0; k < 50; ++k) {
        const Matrix u = random_haar_unitary(3, rng), w = random_haar_unitary(3, rng);
        const Lemma2Result good = lemma2_check(u, u * w, w);
        EXPECT_TRUE(good.is_psd);
        EXPECT_GE(good.min_eigenvalue, -1e-9);
        EXPECT_TRUE(good.consistent);
        const Lemma2Result bad = lemma2_check(u, random_haar_unitary(3, rng), w);
        EXPECT_TRUE(bad.consistent);
        if (bad.residual_vuw > 0.1) EXPECT_LT(bad.min_eigenvalue, 0.0);
        EXPECT_NEAR(is_psd_block(unitary_block(u, u * w, w)).min_eigenvalue, good.min_eigenvalue, 1e-10);
    }
}

TEST(Lemma2Test, RejectsNonUnitary) {
    const Matrix id = Matrix::identity(2);
    EXPECT_EQ(code_of([&] { lemma2_check(Complex(2.0) * id, id, id); }), ErrorCode::NotUnitary);
}

TEST(ChainTest, IdentityFactors) {
    const std::size_t k = 4, d = 2;
    const UnitaryChain chain{std::vector<Matrix>(k - 1, Matrix::identity(d)), ChainForm::Chain};
    const Matrix p = chain_to_p(chain);
    for (std::size_t i = 0; i < k * d; ++i)
        for (std::size_t j = 0; j < k * d; ++j) EXPECT_NEAR(std::abs(p(i, j)), (i % d == j % d) ? 1.0 : 0.0, 1e-15);
    const auto eig = hermitian_eig(p);
    for (std::size_t i = 0; i < d; ++i) EXPECT_NEAR(eig.eigenvalues[i], double(k), 1e-12);
    for (std::size_t i = d; i < k * d; ++i) EXPECT_NEAR(eig.eigenvalues[i], 0.0, 1e-12);
}

TEST(ChainTest, FormsAgreeAndProjectorProperties) {
    Rng rng(7);
    for (std::size_t k = 3; k <= 5; ++k) {
        for (std::size_t d = 2; d <= 3; ++d) {
            const UnitaryChain chain = random_chain(k, d, rng);
            const UnitaryChain stack = stack_from_chain(chain);
            EXPECT_EQ(stack.blocks(), k);
            const Matrix pa = chain_to_p(chain), pb = stack_to_p(stack);
            EXPECT_LT(distance(pa, pb), 1e-10);
            EXPECT_LT(forms_equivalence_check(chain, stack), 1e-9);
            const KBlockResiduals r = kblock_residuals(pa, k, d);
            EXPECT_LT(r.idempotence, 1e-8);
            EXPECT_LT(r.trace, 1e-8);
            EXPECT_LT(r.hermiticity, 1e-12);
            EXPECT_LT(r.diagonal, 1e-12);
            EXPECT_GE(r.min_eigenvalue, -1e-8);
            const UnitaryChain back = chain_from_stack(stack);
            for (std::size_t i = 0; i + 1 < k; ++i) EXPECT_LT(distance(back.factors[i], chain.factors[i]), 1e-10);
        }
    }
}

TEST(ChainTest, ThreeBlockChainIsLemma2Instance) {
    Rng rng(8);
    const UnitaryChain chain = random_chain(3, 2, rng);
    const Matrix& u1 = chain.factors[0];
    const Matrix& u2 = chain.factors[1];
    EXPECT_LT(distance(chain_to_p(chain), lemma2_matrix(u1, u1 * u2, u2)), 1e-12);
    EXPECT_TRUE(lemma2_check(u1, u1 * u2, u2).is_psd);
}

TEST(ChainTest, Errors) {
    Rng rng(9);
    UnitaryChain bad{{Matrix::identity(2), Complex(3.0) * Matrix::identity(2)}, ChainForm::Chain};
    EXPECT_EQ(code_of([&] { chain_to_p(bad); }), ErrorCode::NotUnitary);
    EXPECT_EQ(code_of([&] { forms_equivalence_check(random_chain(3, 2, rng), random_chain(4, 2, rng)); }),
              ErrorCode::DimensionMismatch);
}

}  // namespace
}  // namespace holevo
