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

#include <array>
#include <vector>

#include "holevo/linalg.hpp"

namespace holevo {

/// [[A, D, E], [D^dagger, B, F], [E^dagger, F^dagger, C]] on H1 (+) H2 (+) H3.
struct Block3 {
    Matrix a, b, c;  // diagonal blocks
    Matrix d, e, f;  // d: H2 -> H1, e: H3 -> H1, f: H3 -> H2
};

Matrix assemble(const Block3& blk);

struct PsdVerdict {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
};

/// Direct eigenvalue verdict: PSD iff min eigenvalue >= -block_psd_tol.
PsdVerdict is_psd_block(const Block3& blk, const Tolerances& tol = {});
PsdVerdict is_psd(const Matrix& m, const Tolerances& tol = {});

/// Contractions with D = sqrt(A) R1 sqrt(B), F = sqrt(B) R2 sqrt(C) and
/// E = sqrt(A) R1 supp(B) R2 sqrt(C) + L R3 M, where L and M are the square
/// roots of the two Schur-type residuals
///   A - sqrt(A) R1 supp(B) R1^dagger sqrt(A),
///   C - sqrt(C) R2^dagger supp(B) R2 sqrt(C).
struct ContractionWitness {
    Matrix r1, r2, r3;
    std::array<double, 3> norms{};  // operator norms of R1, R2, R3
    double residual_d = 0.0;
    double residual_f = 0.0;
    double residual_e = 0.0;
    Matrix residual_factor_a;  // L
    Matrix residual_factor_c;  // M
};

/// Recovers the witness without judging it. R1 and R2 use pseudo-inverses of
/// the square roots (zero off the supports); R3 is the minimal-norm solution
/// of the E equation.
ContractionWitness lemma1_witness(const Block3& blk, const Tolerances& tol = {});

/// lemma1_witness plus checks: NotPSD if the block is not PSD,
/// ReconstructionFailure if a residual or norm is out of tolerance.
ContractionWitness lemma1_decompose(const Block3& blk, const Tolerances& tol = {});

struct Lemma2Result {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
    double residual_vuw = 0.0;  // ||V - UW||_F
    bool consistent = false;    // PSD verdict agrees with the V = UW verdict
};

/// Assembles [[1, U, V], [U^dagger, 1, W], [V^dagger, W^dagger, 1]].
Matrix lemma2_matrix(const Matrix& u, const Matrix& v, const Matrix& w);
Lemma2Result lemma2_check(const Matrix& u, const Matrix& v, const Matrix& w, const Tolerances& tol = {});

enum class ChainForm { Chain, Stack };

/// Chain: U_1..U_{K-1}, block (i, j) = U_i ... U_{j-1} for i < j.
/// Stack: V_1..V_K, P = [V_1; ...; V_K][V_1^dagger ... V_K^dagger].
struct UnitaryChain {
    std::vector<Matrix> factors;
    ChainForm form = ChainForm::Chain;

    std::size_t blocks() const { return form == ChainForm::Chain ? factors.size() + 1 : factors.size(); }
    std::size_t dim() const { return factors.empty() ? 0 : factors.front().rows(); }
};

/// Throws NotUnitary if any factor misses unitary_tol.
void validate_chain(const UnitaryChain& chain, const Tolerances& tol = {});

Matrix chain_to_p(const UnitaryChain& chain, const Tolerances& tol = {});
Matrix stack_to_p(const UnitaryChain& chain, const Tolerances& tol = {});
Matrix to_p(const UnitaryChain& chain, const Tolerances& tol = {});

/// V_K = 1, V_i = U_i V_{i+1}.
UnitaryChain stack_from_chain(const UnitaryChain& chain);
/// U_i = V_i V_{i+1}^dagger.
UnitaryChain chain_from_stack(const UnitaryChain& stack);

/// ||P_a - P_b||_F of the two block matrices.
double forms_equivalence_check(const UnitaryChain& a, const UnitaryChain& b, const Tolerances& tol = {});

struct KBlockResiduals {
    double idempotence = 0.0;  // ||P^2 - K P||_F
    double hermiticity = 0.0;
    double trace = 0.0;         // |Tr P - K d|
    double diagonal = 0.0;      // max ||P_ii - 1||_F
    double min_eigenvalue = 0.0;
};

KBlockResiduals kblock_residuals(const Matrix& p, std::size_t k, std::size_t d, const Tolerances& tol = {});

UnitaryChain random_chain(std::size_t k, std::size_t d, Rng& rng);

}  // namespace holevo
