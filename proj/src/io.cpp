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

#include "qfdiv/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qfdiv/errors.hpp"
#include "qfdiv/expression.hpp"
#include "qfdiv/random.hpp"

namespace qfdiv {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) { throw InvalidInput(field + ": " + what); }

const Json& member(const Json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected a JSON object around it");
  const auto it = j.find(field);
  if (it == j.end()) bad(field, "missing");
  return *it;
}

std::size_t positive_size(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || j.get<long long>() < 1) bad(field, "must be a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

double finite_number(const Json& j, const std::string& field) {
  if (!j.is_number()) bad(field, "must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) bad(field, "must be finite");
  return v;
}

SystemDims dims_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) bad(field, "must be a non-empty array of positive integers");
  std::vector<std::size_t> factors;
  for (const auto& d : j) factors.push_back(positive_size(d, field));
  return SystemDims(std::move(factors));
}

Json dims_to_json(const SystemDims& dims) { return Json(dims.factors()); }

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

Json matrix_to_json(const ComplexMatrix& m, const std::optional<SystemDims>& dims) {
  Json j = Json::object();
  if (m.is_square()) {
    j["dim"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back({z.real(), z.imag()});
  j["entries"] = std::move(entries);
  if (dims) j["dims"] = dims_to_json(*dims);
  return j;
}

MatrixRecord matrix_from_json(const Json& j) {
  if (!j.is_object()) bad("matrix", "expected a JSON object");
  std::size_t rows = 0;
  std::size_t cols = 0;
  if (j.contains("dim")) {
    rows = cols = positive_size(j["dim"], "dim");
  } else if (j.contains("rows") && j.contains("cols")) {
    rows = positive_size(j["rows"], "rows");
    cols = positive_size(j["cols"], "cols");
  } else {
    bad("dim", "missing");
  }
  const Json& entries = member(j, "entries");
  if (!entries.is_array() || entries.size() != rows * cols) {
    bad("entries", "expected " + std::to_string(rows * cols) + " entries");
  }
  std::vector<Complex> data;
  data.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const Json& e = entries[k];
    const std::string field = "entries[" + std::to_string(k) + "]";
    if (e.is_number()) {
      data.emplace_back(finite_number(e, field), 0.0);
    } else if (e.is_array() && e.size() == 2) {
      data.emplace_back(finite_number(e[0], field), finite_number(e[1], field));
    } else {
      bad(field, "expected [re, im] or a real number");
    }
  }
  MatrixRecord record{ComplexMatrix(rows, cols, std::move(data)), std::nullopt};
  if (j.contains("dims")) {
    record.dims = dims_from_json(j["dims"], "dims");
    if (rows != cols || record.dims->total() != rows) bad("dims", "product must equal dim");
  }
  return record;
}

Json channel_to_json(const QuantumChannel& ch) {
  Json kraus = Json::array();
  for (const auto& k : ch.kraus_ops()) kraus.push_back(matrix_to_json(k));
  return {{"d_in", ch.input_dim()}, {"d_out", ch.output_dim()}, {"kraus", std::move(kraus)}};
}

QuantumChannel channel_from_json(const Json& j) {
  const std::size_t d_in = positive_size(member(j, "d_in"), "d_in");
  const std::size_t d_out = positive_size(member(j, "d_out"), "d_out");
  const Json& kraus = member(j, "kraus");
  if (!kraus.is_array() || kraus.empty()) bad("kraus", "must be a non-empty array of matrices");
  std::vector<ComplexMatrix> ops;
  for (std::size_t k = 0; k < kraus.size(); ++k) {
    auto m = matrix_from_json(kraus[k]).matrix;
    if (m.rows() != d_out || m.cols() != d_in) {
      bad("kraus[" + std::to_string(k) + "]", "must be d_out x d_in");
    }
    ops.push_back(std::move(m));
  }
  return QuantumChannel(std::move(ops));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput(path.string() + ": cannot write file");
  out << text;
}

MatrixRecord read_matrix_file(const std::filesystem::path& path) {
  const Json j = read_json_file(path);
  try {
    return matrix_from_json(j);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

HermitianMatrix read_hermitian_file(const std::filesystem::path& path) {
  auto record = read_matrix_file(path);
  try {
    return HermitianMatrix(std::move(record.matrix));
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& m,
                       const std::optional<SystemDims>& dims) {
  write_text_file(path, matrix_to_json(m, dims).dump(2) + "\n");
}

std::vector<std::vector<std::string>> write_witness_files(const SuiteReport& report,
                                                          const std::filesystem::path& dir) {
  std::vector<std::vector<std::string>> files(report.checks.size());
  bool created = false;
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const auto& check = report.checks[k];
    for (const auto& w : check.witness) {
      if (!created) {
        std::filesystem::create_directories(dir);
        created = true;
      }
      const std::string name = std::to_string(k) + "-" + std::string(to_string(check.check)) + "-" + w.name + ".json";
      write_matrix_file(dir / name, w.matrix, w.dims);
      files[k].push_back((dir / name).string());
    }
  }
  return files;
}

Json suite_report_to_json(const SuiteReport& report, const std::vector<std::vector<std::string>>& witness_files) {
  Json checks = Json::array();
  for (std::size_t k = 0; k < report.checks.size(); ++k) {
    const auto& c = report.checks[k];
    Json entry = {{"name", c.name},
                  {"check", std::string(to_string(c.check))},
                  {"trials", c.trials},
                  {"passes", c.passes},
                  {"failures", c.failures},
                  {"inconclusive", c.inconclusive},
                  {"tolerance", c.tolerance},
                  {"worst_margin", nullptr},
                  {"worst_trial", c.worst_trial},
                  {"passed", c.passed()},
                  {"witness_files", k < witness_files.size() ? Json(witness_files[k]) : Json::array()}};
    if (c.worst_trial >= 0) entry["worst_margin"] = c.worst_margin;
    checks.push_back(std::move(entry));
  }
  return {{"seed", report.seed}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

std::string suite_report_to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "name,check,trials,passes,failures,inconclusive,tolerance,worst_margin,worst_trial,passed\n";
  for (const auto& c : report.checks) {
    out << csv_field(c.name) << ',' << to_string(c.check) << ',' << c.trials << ',' << c.passes << ',' << c.failures << ','
        << c.inconclusive << ',' << format_double(c.tolerance) << ','
        << (c.worst_trial >= 0 ? format_double(c.worst_margin) : "") << ',' << c.worst_trial << ','
        << (c.passed() ? "true" : "false") << '\n';
  }
  return out.str();
}

AntiMonotoneFunction make_function(const FunctionSelector& sel) {
  if (sel.alpha && sel.beta) bad("alpha", "give either alpha or beta, not both");
  auto exponent = [&](const char* family) {
    if (sel.beta) return *sel.beta;
    if (sel.alpha) return sandwiched_exponent(*sel.alpha);
    bad("beta", std::string(family) + " needs --beta or --alpha");
  };
  if (sel.name == "neg-log") return AntiMonotoneFunction::neg_log();
  if (sel.name == "neg-power") {
    if (sel.alpha && !(*sel.alpha >= 0.5 && *sel.alpha < 1.0)) bad("alpha", "neg-power takes alpha in [1/2, 1)");
    return AntiMonotoneFunction::neg_power(exponent("neg-power"));
  }
  if (sel.name == "power") {
    if (sel.alpha && !(*sel.alpha > 1.0)) bad("alpha", "power takes alpha > 1");
    return AntiMonotoneFunction::power(exponent("power"));
  }
  if (sel.name == "custom") {
    if (!sel.expr) bad("expr", "custom needs an expression in x");
    return AntiMonotoneFunction::custom(*sel.expr, parse_expression(*sel.expr), sel.assert_anti_monotone);
  }
  bad("f", "unknown generator '" + sel.name + "' (neg-log, neg-power, power, custom)");
}

std::vector<TrialSpec> suite_from_json(const Json& j, std::uint64_t default_seed, int default_trials) {
  if (!j.is_object()) bad("suite", "expected a JSON object");
  std::uint64_t seed = default_seed;
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) bad("seed", "must be a non-negative integer");
    seed = j["seed"].get<std::uint64_t>();
  }
  const Json& checks = member(j, "checks");
  if (!checks.is_array() || checks.empty()) bad("checks", "must be a non-empty array");

  std::vector<TrialSpec> specs;
  for (std::size_t k = 0; k < checks.size(); ++k) {
    const Json& c = checks[k];
    const std::string at = "checks[" + std::to_string(k) + "].";
    try {
      const Json& check = member(c, "check");
      if (!check.is_string()) bad("check", "must be a string");
      const CheckKind kind = check_kind_from_string(check.get<std::string>());

      FunctionSelector sel;
      const Json& f = member(c, "f");
      if (!f.is_string()) bad("f", "must be a string");
      sel.name = f.get<std::string>();
      if (c.contains("alpha")) sel.alpha = finite_number(c["alpha"], "alpha");
      if (c.contains("beta")) sel.beta = finite_number(c["beta"], "beta");
      if (c.contains("expr")) {
        if (!c["expr"].is_string()) bad("expr", "must be a string");
        sel.expr = c["expr"].get<std::string>();
      }
      if (c.contains("anti_monotone")) {
        if (!c["anti_monotone"].is_boolean()) bad("anti_monotone", "must be true or false");
        sel.assert_anti_monotone = c["anti_monotone"].get<bool>();
      }

      const SystemDims dims = dims_from_json(member(c, "dims"), "dims");
      int trials = default_trials;
      if (c.contains("trials")) trials = static_cast<int>(positive_size(c["trials"], "trials"));
      std::uint64_t spec_seed = derive_seed(seed, k);
      if (c.contains("seed")) {
        if (!c["seed"].is_number_unsigned()) bad("seed", "must be a non-negative integer");
        spec_seed = c["seed"].get<std::uint64_t>();
      }
      auto spec = TrialSpec::make(kind, dims, make_function(sel), trials, spec_seed);
      if (c.contains("tolerance")) spec.tolerance = finite_number(c["tolerance"], "tolerance");
      spec.validate();
      specs.push_back(std::move(spec));
    } catch (const InvalidInput& e) {
      throw InvalidInput(at + e.what());
    }
  }
  return specs;
}

}  // namespace qfdiv
