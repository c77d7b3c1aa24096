// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The etfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "etfkit/designs.hpp"
#include "etfkit/frames.hpp"
#include "etfkit/hadamard.hpp"
#include "etfkit/pert.hpp"
#include "etfkit/sparsity.hpp"

namespace etfkit {

using Json = nlohmann::ordered_json;

/// Parses a JSON document. Throws Error(ParseError) carrying the line and
/// column of the first offending character.
Json parse_json(const std::string& text);
Json read_json_file(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline. Doubles are written in
/// their shortest round-trip decimal form, so reading back is bit-exact.
std::string dump_json(const Json& doc);

/// Writes through a temporary file in the same directory and renames it
/// over `path`. Throws Error(IoError).
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
Json matrix_to_json(const CMatrix& m);
Json matrix_to_json(const RMatrix& m);
CMatrix matrix_from_json(const Json& doc);

Json frame_to_json(const Frame& f);
/// Accepts a plain matrix document too; "real": true requires zero
/// imaginary parts.
Frame frame_from_json(const Json& doc);

Json steiner_to_json(const SteinerSystem& sys);
/// A "t" field other than 2 is rejected.
SteinerSystem steiner_from_json(const Json& doc);

Json to_json(const SteinerReport& rep);
Json to_json(const SrgParameters& srg);
Json to_json(const HadamardReport& rep);
Json to_json(const FrameReport& rep);
Json to_json(const OverlapReport& rep);
Json to_json(const std::vector<SpectrumCluster>& spectrum);
/// Everything except the gap matrix itself.
Json to_json(const GapMatrix& gap);
Json to_json(const E4Report& rep);
Json to_json(const SparkResult& res);
Json to_json(const CosparkResult& res);
Json to_json(const BoundReport& rep);
Json to_json(const OverlapDeviationReport& rep);
Json to_json(const FamilyRow& row);

std::string table1_csv(const std::vector<FamilyRow>& rows);

}  // namespace etfkit
