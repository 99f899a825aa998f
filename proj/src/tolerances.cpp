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

#include "holevo/tolerances.hpp"

#include <array>
#include <cmath>
#include <utility>

#include "holevo/error.hpp"

namespace holevo {
namespace {

using Field = double Tolerances::*;

constexpr std::array<std::pair<std::string_view, Field>, 20> kFields{{
    {"herm_tol", &Tolerances::herm_tol},
    {"psd_tol", &Tolerances::psd_tol},
    {"eig_tol", &Tolerances::eig_tol},
    {"rank_tol", &Tolerances::rank_tol},
    {"trace_tol", &Tolerances::trace_tol},
    {"kraus_tol", &Tolerances::kraus_tol},
    {"kraus_floor", &Tolerances::kraus_floor},
    {"prob_floor", &Tolerances::prob_floor},
    {"prob_sum_tol", &Tolerances::prob_sum_tol},
    {"theorem_tol", &Tolerances::theorem_tol},
    {"cond_tol", &Tolerances::cond_tol},
    {"dilation_tol", &Tolerances::dilation_tol},
    {"projector_tol", &Tolerances::projector_tol},
    {"block_psd_tol", &Tolerances::block_psd_tol},
    {"unitary_tol", &Tolerances::unitary_tol},
    {"lemma2_residual_tol", &Tolerances::lemma2_residual_tol},
    {"contraction_tol", &Tolerances::contraction_tol},
    {"witness_tol", &Tolerances::witness_tol},
    {"witness_e_tol", &Tolerances::witness_e_tol},
    {"counterexample_tol", &Tolerances::counterexample_tol},
}};

Field lookup(std::string_view key) {
    for (const auto& [name, field] : kFields) {
        if (name == key) return field;
    }
    fail(ErrorCode::ConfigError, "unknown tolerance key '" + std::string(key) + "'");
}

}  // namespace

void Tolerances::set(std::string_view key, double value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        fail(ErrorCode::ConfigError, "tolerance '" + std::string(key) + "' must be positive and finite");
    }
    this->*lookup(key) = value;
}

double Tolerances::get(std::string_view key) const { return this->*lookup(key); }

std::vector<std::string> Tolerances::keys() {
    std::vector<std::string> out;
    out.reserve(kFields.size());
    for (const auto& entry : kFields) out.emplace_back(entry.first);
    return out;
}

}  // namespace holevo
