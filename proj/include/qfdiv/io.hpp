// Copyright 2026 The qfdiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and CSV serialization.
//
// Matrix: {"dim": n, "entries": [[re, im], ...]} row-major, plus "dims":
// [dA, dB] for bipartite operators. Rectangular matrices (Kraus operators of
// a dimension-changing channel) use "rows" and "cols" in place of "dim".
// Channel: {"d_in": n, "d_out": m, "kraus": [matrix, ...]}.
//
// Every parse error is an InvalidInput whose message starts with the
// offending field.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qfdiv/harness.hpp"

namespace qfdiv {

using Json = nlohmann::json;

struct MatrixRecord {
  ComplexMatrix matrix;
  std::optional<SystemDims> dims;
};

Json matrix_to_json(const ComplexMatrix& m, const std::optional<SystemDims>& dims = std::nullopt);
MatrixRecord matrix_from_json(const Json& j);

Json channel_to_json(const QuantumChannel& ch);
QuantumChannel channel_from_json(const Json& j);

/// Parses a file; InvalidInput if it cannot be opened or is not JSON.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

MatrixRecord read_matrix_file(const std::filesystem::path& path);
/// Hermitian matrix from a file; InvalidInput when it is not Hermitian.
HermitianMatrix read_hermitian_file(const std::filesystem::path& path);
void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                       const std::optional<SystemDims>& dims = std::nullopt);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

/// Quotes a CSV field when it contains a comma, quote or newline.
std::string csv_field(const std::string& text);

/// Writes the worst-case inputs of each check as matrix files in `dir` and
/// returns the file names per check (empty for checks without a witness).
std::vector<std::vector<std::string>> write_witness_files(const SuiteReport& report,
                                                          const std::filesystem::path& dir);

/// {"seed", "passed", "checks": [{name, check, trials, passes, failures,
/// inconclusive, tolerance, worst_margin, worst_trial, passed, witness_files}]}
/// A check without any conclusive trial has a null worst_margin.
Json suite_report_to_json(const SuiteReport& report,
                          const std::vector<std::vector<std::string>>& witness_files = {});
/// One header row plus one row per check.
std::string suite_report_to_csv(const SuiteReport& report);

/// Generator selection shared by the CLI flags and suite files.
struct FunctionSelector {
  std::string name;  ///< neg-log | neg-power | power | custom
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<std::string> expr;
  bool assert_anti_monotone = false;
};

/// neg-power and power take either beta directly or alpha with
/// beta = (1 - alpha) / alpha; custom needs expr.
AntiMonotoneFunction make_function(const FunctionSelector& sel);

/// {"seed": s, "checks": [{"check", "dims", "f", "alpha"|"beta"|"expr",
/// "anti_monotone", "trials", "tolerance", "seed"}]}. Missing per-check
/// seeds are derived from the file seed, or `default_seed` without one.
std::vector<TrialSpec> suite_from_json(const Json& j, std::uint64_t default_seed, int default_trials);

}  // namespace qfdiv
