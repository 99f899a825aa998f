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

#include "json.hpp"

#include "holevo/blockpos.hpp"
#include "holevo/channel.hpp"
#include "holevo/ensemble.hpp"
#include "holevo/qstate.hpp"

namespace holevo::io {

using Json = nlohmann::json;

/// Parses text as JSON; syntax errors become ParseError carrying the
/// source name with line and column.
Json parse_document(std::string_view text, std::string_view source);
Json read_document(const std::string& path);

/// {"rows": n, "cols": m, "data": [[re, im], ...]}, row-major.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& path = "matrix");

/// Matrix format plus optional "dims": [dA, dB].
Json to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const Json& j, const Tolerances& tol = {}, const std::string& path = "state");

/// {"kraus": [matrix, ...], "label": "..."}
Json to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j, const Tolerances& tol = {}, const std::string& path = "channel");

/// {"entries": [{"p": x, "rho": matrix}, ...]}
Json to_json(const Ensemble& ens);
Ensemble ensemble_from_json(const Json& j, const Tolerances& tol = {}, const std::string& path = "ensemble");

/// {"A", "B", "C", "D", "E", "F"} matrices.
Json to_json(const Block3& blk);
Block3 block3_from_json(const Json& j, const std::string& path = "block");

/// {"form": "chain" | "stack", "factors": [matrix, ...]}
Json to_json(const UnitaryChain& chain);
UnitaryChain chain_from_json(const Json& j, const std::string& path = "chain");

Json to_json(const NaimarkDilation& dil);

}  // namespace holevo::io
