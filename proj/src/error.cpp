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

#include "holevo/error.hpp"

namespace holevo {

std::string_view error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::Ok: return "Ok";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::NoConvergence: return "NoConvergence";
        case ErrorCode::NotPSD: return "NotPSD";
        case ErrorCode::NotDensity: return "NotDensity";
        case ErrorCode::NoBipartiteSplit: return "NoBipartiteSplit";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::BadRank: return "BadRank";
        case ErrorCode::NotOrthonormal: return "NotOrthonormal";
        case ErrorCode::NotPartition: return "NotPartition";
        case ErrorCode::CompletionFailure: return "CompletionFailure";
        case ErrorCode::InvalidChannel: return "InvalidChannel";
        case ErrorCode::InvalidEnsemble: return "InvalidEnsemble";
        case ErrorCode::ConditionViolated: return "ConditionViolated";
        case ErrorCode::ReconstructionFailure: return "ReconstructionFailure";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotPure: return "NotPure";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace holevo
