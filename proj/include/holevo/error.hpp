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

#include <stdexcept>
#include <string>
#include <string_view>

namespace holevo {

/// Failure categories shared by every module. The numeric values are part of
/// the C API (see holevo_lab.h) and must not be reordered.
enum class ErrorCode : int {
    Ok = 0,
    NotHermitian = 1,
    NoConvergence = 2,
    NotPSD = 3,
    NotDensity = 4,
    NoBipartiteSplit = 5,
    DimensionMismatch = 6,
    BadRank = 7,
    NotOrthonormal = 8,
    NotPartition = 9,
    CompletionFailure = 10,
    InvalidChannel = 11,
    InvalidEnsemble = 12,
    ConditionViolated = 13,
    ReconstructionFailure = 14,
    NotUnitary = 15,
    NotPure = 16,
    ConfigError = 17,
    ParseError = 18,
    IoError = 19,
    InvalidArgument = 20,
    Internal = 21,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code), detail_(what) {}

    ErrorCode code() const noexcept { return code_; }
    /// Message without the code-name prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace holevo
