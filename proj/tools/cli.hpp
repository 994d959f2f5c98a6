/**
 * Copyright 2026 The qtc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qtc/model.hpp"

namespace qtc::cli {

inline constexpr const char* kToolVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kInternal = 3 };

struct Grid {
  double start = 0.0;
  double stop = 5.0;
  std::size_t count = 201;
};

/// "start:stop:count"
Grid parse_grid(const std::string& text);
/// Occupation written as "1,1,0" or "1.1.0".
OccupationVector parse_occupation(const std::string& text);
/// Comma-separated numbers.
std::vector<double> parse_list(const std::string& text);

/// Everything a run was configured with; echoed into JSON output.
struct RunConfig {
  std::string subcommand;
  std::string scenario;
  std::optional<std::size_t> modes;
  std::string unitary = "fourier";
  double transmissivity = 0.5;
  std::string unitary_file;
  std::optional<std::uint64_t> seed;
  std::string input;  // 1-based
  std::string statistics = "boson";
  std::optional<double> alpha;
  std::string positions;
  double coherence_length = 1.0;
  std::string gram_file;
  std::vector<std::string> outputs;
  std::string events;
  std::string scan_parameter = "alpha";
  std::string grid;
  std::string format = "csv";
  std::string out_file;
  bool verify = false;
};

struct ResultRow {
  std::optional<double> parameter;
  std::string event;
  double value = 0.0;
};

struct ResultSet {
  std::string parameter_name;
  std::vector<ResultRow> rows;
  std::vector<std::string> nonmonotonic;
};

/// Renders a float with 12 significant digits.
std::string format_number(double value);

std::string to_csv(const ResultSet& results);
std::string to_json(const ResultSet& results, const RunConfig& config);

/// Parses argv (without the program name), runs the command and writes the
/// result to `out` or the `--out` file. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtc::cli
