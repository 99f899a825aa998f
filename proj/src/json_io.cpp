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

#include "holevo/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "holevo/error.hpp"

namespace holevo::io {
namespace {

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
    fail(ErrorCode::ParseError, "field '" + path + "': " + what);
}

const Json& require(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) field_error(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) field_error(path + "." + key, "missing");
    return *it;
}

std::size_t require_count(const Json& j, const std::string& path) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) field_error(path, "expected a non-negative integer");
    const auto v = j.get<long long>();
    if (v < 0) field_error(path, "expected a non-negative integer");
    return static_cast<std::size_t>(v);
}

double require_number(const Json& j, const std::string& path) {
    if (!j.is_number()) field_error(path, "expected a number");
    return j.get<double>();
}

// Library errors raised while building a value from a parsed document keep
// their code but gain the field path.
template <typename F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        fail(e.code(), "field '" + path + "': " + e.detail());
    }
}

}  // namespace

Json parse_document(std::string_view text, std::string_view source) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::ParseError, std::string(source) + ": " + e.what());
    }
}

Json read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

Json to_json(const Matrix& m) {
    Json data = Json::array();
    for (const auto& z : m.entries()) data.push_back(Json::array({z.real(), z.imag()}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Matrix matrix_from_json(const Json& j, const std::string& path) {
    const std::size_t rows = require_count(require(j, "rows", path), path + ".rows");
    const std::size_t cols = require_count(require(j, "cols", path), path + ".cols");
    const Json& data = require(j, "data", path);
    if (!data.is_array()) field_error(path + ".data", "expected an array of [re, im] pairs");
    if (data.size() != rows * cols) {
        field_error(path + ".data", "has " + std::to_string(data.size()) + " entries, expected " +
                                        std::to_string(rows * cols));
    }
    std::vector<Complex> entries;
    entries.reserve(data.size());
    for (std::size_t k = 0; k < data.size(); ++k) {
        const std::string at = path + ".data[" + std::to_string(k) + "]";
        const Json& pair = data[k];
        if (!pair.is_array() || pair.size() != 2) field_error(at, "expected [re, im] pair");
        const double re = require_number(pair[0], at + "[0]");
        const double im = require_number(pair[1], at + "[1]");
        if (!std::isfinite(re) || !std::isfinite(im)) field_error(at, "non-finite entry");
        entries.emplace_back(re, im);
    }
    return Matrix(rows, cols, std::move(entries));
}

Json to_json(const DensityMatrix& rho) {
    Json j = to_json(rho.matrix());
    if (rho.dims()) j["dims"] = Json::array({rho.dims()->dim_a, rho.dims()->dim_b});
    return j;
}

DensityMatrix density_from_json(const Json& j, const Tolerances& tol, const std::string& path) {
    Matrix m = matrix_from_json(j, path);
    std::optional<BipartiteDims> dims;
    if (j.contains("dims")) {
        const Json& d = j["dims"];
        if (!d.is_array() || d.size() != 2) field_error(path + ".dims", "expected [dA, dB]");
        dims = BipartiteDims{require_count(d[0], path + ".dims[0]"), require_count(d[1], path + ".dims[1]")};
    }
    return with_path(path, [&] { return DensityMatrix(std::move(m), dims, tol); });
}

Json to_json(const KrausChannel& ch) {
    Json kraus = Json::array();
    for (const auto& m : ch.kraus()) kraus.push_back(to_json(m));
    return Json{{"kraus", std::move(kraus)}, {"label", ch.label()}};
}

KrausChannel channel_from_json(const Json& j, const Tolerances& tol, const std::string& path) {
    const Json& kraus = require(j, "kraus", path);
    if (!kraus.is_array()) field_error(path + ".kraus", "expected an array of matrices");
    std::vector<Matrix> ops;
    for (std::size_t k = 0; k < kraus.size(); ++k) {
        ops.push_back(matrix_from_json(kraus[k], path + ".kraus[" + std::to_string(k) + "]"));
    }
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) field_error(path + ".label", "expected a string");
        label = j["label"].get<std::string>();
    }
    return with_path(path, [&] { return KrausChannel(std::move(ops), label, tol); });
}

Json to_json(const Ensemble& ens) {
    Json entries = Json::array();
    for (const auto& e : ens.entries()) entries.push_back(Json{{"p", e.p}, {"rho", to_json(e.rho)}});
    return Json{{"entries", std::move(entries)}};
}

Ensemble ensemble_from_json(const Json& j, const Tolerances& tol, const std::string& path) {
    const Json& entries = require(j, "entries", path);
    if (!entries.is_array()) field_error(path + ".entries", "expected an array");
    std::vector<EnsembleEntry> out;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string at = path + ".entries[" + std::to_string(k) + "]";
        const double p = require_number(require(entries[k], "p", at), at + ".p");
        out.push_back({p, density_from_json(require(entries[k], "rho", at), tol, at + ".rho")});
    }
    return with_path(path, [&] { return Ensemble(std::move(out), tol); });
}

Json to_json(const Block3& blk) {
    return Json{{"A", to_json(blk.a)}, {"B", to_json(blk.b)}, {"C", to_json(blk.c)},
                {"D", to_json(blk.d)}, {"E", to_json(blk.e)}, {"F", to_json(blk.f)}};
}

Block3 block3_from_json(const Json& j, const std::string& path) {
    const auto get = [&](const char* key) { return matrix_from_json(require(j, key, path), path + "." + key); };
    return Block3{get("A"), get("B"), get("C"), get("D"), get("E"), get("F")};
}

Json to_json(const UnitaryChain& chain) {
    Json factors = Json::array();
    for (const auto& f : chain.factors) factors.push_back(to_json(f));
    return Json{{"form", chain.form == ChainForm::Chain ? "chain" : "stack"}, {"factors", std::move(factors)}};
}

UnitaryChain chain_from_json(const Json& j, const std::string& path) {
    const Json& form = require(j, "form", path);
    UnitaryChain chain;
    if (form == "chain") {
        chain.form = ChainForm::Chain;
    } else if (form == "stack") {
        chain.form = ChainForm::Stack;
    } else {
        field_error(path + ".form", "expected \"chain\" or \"stack\"");
    }
    const Json& factors = require(j, "factors", path);
    if (!factors.is_array()) field_error(path + ".factors", "expected an array of matrices");
    for (std::size_t k = 0; k < factors.size(); ++k) {
        chain.factors.push_back(matrix_from_json(factors[k], path + ".factors[" + std::to_string(k) + "]"));
    }
    return chain;
}

Json to_json(const NaimarkDilation& dil) {
    Json projectors = Json::array();
    for (const auto& p : dil.projectors) projectors.push_back(to_json(p));
    return Json{{"system_dim", dil.system_dim},
                {"ancilla_dim", dil.ancilla_dim},
                {"anchor_index", dil.anchor_index},
                {"projectors", std::move(projectors)}};
}

}  // namespace holevo::io
