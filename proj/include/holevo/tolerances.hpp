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

#include <string>
#include <string_view>
#include <vector>

namespace holevo {

/// Numerical thresholds used across the toolkit. Every field can be
/// overridden by name (see set()), which is how the CLI's --tol KEY=VAL works.
struct Tolerances {
    double herm_tol = 1e-10;      // relative Hermiticity check
    double psd_tol = 1e-9;        // most negative eigenvalue tolerated in a PSD input
    double eig_tol = 1e-11;       // eigendecomposition reconstruction contract
    double rank_tol = 1e-10;      // relative cutoff for supports and pseudo-inverses
    double trace_tol = 1e-10;     // |Tr rho - 1| for density matrices
    double kraus_tol = 1e-9;      // completeness residual of a Kraus list
    double kraus_floor = 1e-12;   // Frobenius norm below which a Kraus operator is degenerate
    double prob_floor = 1e-12;    // ensemble outcomes at or below this are dropped
    double prob_sum_tol = 1e-10;  // |sum p - 1| for ensembles
    double theorem_tol = 1e-7;    // slack on entropy-bound margins
    double cond_tol = 1e-8;       // ||V - UW||_F for the three-state polar condition
    double dilation_tol = 1e-8;   // dilation compression / ensemble agreement
    double projector_tol = 1e-9;  // P^2 = P = P^dagger and resolution of identity
    double block_psd_tol = 1e-8;  // absolute min-eigenvalue slack for block PSD verdicts
    double unitary_tol = 1e-9;    // ||U^dagger U - 1||_F
    double lemma2_residual_tol = 1e-7;
    double contraction_tol = 1e-8;
    double witness_tol = 1e-8;    // D and F reconstruction residuals
    double witness_e_tol = 1e-7;  // E reconstruction residual
    double counterexample_tol = 1e-6;

    /// Overrides one field by name. Throws ConfigError on unknown keys or
    /// non-positive values.
    void set(std::string_view key, double value);
    double get(std::string_view key) const;
    static std::vector<std::string> keys();
};

}  // namespace holevo
