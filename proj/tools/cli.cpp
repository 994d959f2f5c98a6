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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qtc/decompose.hpp"
#include "qtc/engine.hpp"
#include "qtc/errors.hpp"
#include "qtc/linalg.hpp"
#include "qtc/oracle.hpp"
#include "qtc/scenarios.hpp"

namespace qtc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr double kVerifyTolerance = 1e-9;

std::vector<std::string> split(const std::string& text, const std::string& separators) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (separators.find(ch) != std::string::npos) {
      out.push_back(current);
      current.clear();
    } else if (ch != ' ') {
      current += ch;
    }
  }
  out.push_back(current);
  return out;
}

double to_double(const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not a number: '" + token + "'");
  }
  if (used != token.size()) throw UsageError("not a number: '" + token + "'");
  return value;
}

long to_integer(const std::string& token) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw UsageError("not an integer: '" + token + "'");
  }
  if (used != token.size()) throw UsageError("not an integer: '" + token + "'");
  return value;
}

// Reads "n" followed by n rows of n "re,im" tokens.
ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw DomainError("'" + path + "': missing or invalid dimension line");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string token;
      if (!(in >> token)) throw DomainError("'" + path + "': expected " + std::to_string(n * n) + " entries");
      const auto parts = split(token, ",");
      if (parts.size() != 2) throw DomainError("'" + path + "': entry '" + token + "' is not re,im");
      try {
        m(i, j) = {std::stod(parts[0]), std::stod(parts[1])};
      } catch (const std::exception&) {
        throw DomainError("'" + path + "': entry '" + token + "' is not numeric");
      }
    }
  return m;
}

ComplexMatrix build_unitary(const RunConfig& cfg) {
  if (cfg.unitary == "fourier") {
    if (!cfg.modes) throw UsageError("--unitary fourier needs --m");
    return fourier_unitary(*cfg.modes);
  }
  if (cfg.unitary == "beamsplitter") {
    if (cfg.modes && *cfg.modes != 2) throw UsageError("a beamsplitter has two modes");
    return beamsplitter(cfg.transmissivity);
  }
  if (cfg.unitary == "random") {
    if (!cfg.modes) throw UsageError("--unitary random needs --m");
    if (!cfg.seed) throw UsageError("--unitary random needs an explicit --seed");
    return random_unitary(*cfg.modes, *cfg.seed);
  }
  if (cfg.unitary == "file") {
    if (cfg.unitary_file.empty()) throw UsageError("--unitary file needs --unitary-file");
    ComplexMatrix u = read_matrix_file(cfg.unitary_file);
    if (cfg.modes && *cfg.modes != u.rows()) throw UsageError("--m disagrees with the unitary file");
    if (!is_unitary(u, 1e-9)) throw DomainError("matrix in '" + cfg.unitary_file + "' is not unitary");
    return u;
  }
  throw UsageError("unknown unitary '" + cfg.unitary + "'");
}

AssignmentList build_input(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  std::vector<std::size_t> modes;
  for (const auto& token : split(cfg.input, ",")) {
    const long mode = to_integer(token);
    if (mode < 1) throw DomainError("input modes are 1-based; got " + token);
    modes.push_back(static_cast<std::size_t>(mode - 1));
  }
  return AssignmentList(std::move(modes));
}

std::size_t gram_spec_count(const RunConfig& cfg) {
  return static_cast<std::size_t>(cfg.alpha.has_value()) + static_cast<std::size_t>(!cfg.positions.empty()) +
         static_cast<std::size_t>(!cfg.gram_file.empty());
}

GramMatrix build_gram(const RunConfig& cfg, std::size_t n) {
  if (gram_spec_count(cfg) > 1) throw UsageError("--alpha, --positions and --gram-file are mutually exclusive");
  if (!cfg.positions.empty()) {
    auto positions = parse_list(cfg.positions);
    if (positions.size() != n) throw SpecError("need one position per particle");
    return gram_from_positions({std::move(positions), cfg.coherence_length});
  }
  if (!cfg.gram_file.empty()) {
    GramMatrix g(read_matrix_file(cfg.gram_file));
    if (g.size() != n) throw SpecError("Gram matrix size does not match particle number");
    return g;
  }
  return uniform_gram(n, cfg.alpha.value_or(1.0));
}

std::vector<OccupationVector> build_outputs(const RunConfig& cfg, std::size_t modes, std::size_t particles) {
  std::vector<OccupationVector> out;
  for (const auto& text : cfg.outputs) {
    auto s = parse_occupation(text);
    if (s.modes() != modes) throw SpecError("output " + text + " does not have " + std::to_string(modes) + " modes");
    if (static_cast<std::size_t>(s.particles()) != particles)
      throw SpecError("output " + text + " does not hold " + std::to_string(particles) + " particles");
    out.push_back(std::move(s));
  }
  return out;
}

bool is_exact(const GramMatrix& g, double off_diagonal) {
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t k = 0; k < g.size(); ++k)
      if (j != k && g(j, k) != Complex{off_diagonal, 0.0}) return false;
  return true;
}

double probability_for(const ComplexMatrix& u, const AssignmentList& input, const OccupationVector& s,
                       const GramMatrix& gram, Statistics stats) {
  if (input.size() > kMaxGeneralParticles) {
    if (is_exact(gram, 1.0)) return quantum_probability(u, input, s, stats);
    if (is_exact(gram, 0.0)) return classical_probability(u, input, s);
  }
  return event_probability({u, input, s, gram, stats});
}

void verify(const ComplexMatrix& u, const AssignmentList& input, const GramMatrix& gram, Statistics stats,
            const std::vector<std::pair<OccupationVector, double>>& computed, std::ostream& err) {
  const auto internal = oracle::internal_vectors_from_gram(gram);
  oracle::FirstQuantizedState state(u.rows(), input, internal, stats);
  state.evolve(u);
  double worst = 0.0;
  for (const auto& [event, p] : computed) worst = std::max(worst, std::abs(state.probability(event) - p));
  err << "verify: max deviation from first-quantized oracle " << format_number(worst) << "\n";
  if (worst > kVerifyTolerance) throw ConsistencyError("engine disagrees with oracle by " + format_number(worst));
}

ResultSet from_curve(const TransitionCurve& curve, bool flag_nonmonotonic) {
  ResultSet out{curve.parameter_name, {}, {}};
  for (const auto& s : curve.samples) out.rows.push_back({s.parameter, s.event, s.probability});
  if (flag_nonmonotonic) out.nonmonotonic = curve.nonmonotonic_events();
  return out;
}

std::vector<double> grid_values(const RunConfig& cfg, const Grid& fallback) {
  const Grid g = cfg.grid.empty() ? fallback : parse_grid(cfg.grid);
  return linspace(g.start, g.stop, g.count);
}

ResultSet run_prob(const RunConfig& cfg, std::ostream& err) {
  const auto u = build_unitary(cfg);
  const auto input = build_input(cfg);
  const auto gram = build_gram(cfg, input.size());
  const auto stats = parse_statistics(cfg.statistics);
  if (cfg.outputs.empty()) throw UsageError("prob needs at least one --output");
  const auto outputs = build_outputs(cfg, u.rows(), input.size());

  std::vector<std::pair<OccupationVector, double>> computed;
  for (const auto& s : outputs) computed.emplace_back(s, probability_for(u, input, s, gram, stats));
  if (cfg.verify) verify(u, input, gram, stats, computed, err);

  ResultSet out{"", {}, {}};
  for (const auto& [s, p] : computed) out.rows.push_back({std::nullopt, s.label(), p});
  return out;
}

ResultSet run_dist(const RunConfig& cfg, std::ostream& err) {
  const auto u = build_unitary(cfg);
  const auto input = build_input(cfg);
  const auto gram = build_gram(cfg, input.size());
  const auto stats = parse_statistics(cfg.statistics);
  const auto dist = full_distribution(u, input, gram, stats);
  if (cfg.verify) verify(u, input, gram, stats, dist, err);

  ResultSet out{"", {}, {}};
  for (const auto& [s, p] : dist) out.rows.push_back({std::nullopt, s.label(), p});
  return out;
}

ResultSet run_scan(const RunConfig& cfg) {
  const auto u = build_unitary(cfg);
  const auto input = build_input(cfg);
  const auto stats = parse_statistics(cfg.statistics);
  if (gram_spec_count(cfg) > 0) throw UsageError("scan derives the Gram matrix from the scanned parameter");
  auto events = build_outputs(cfg, u.rows(), input.size());
  if (events.empty()) events = enumerate_events(u.rows(), static_cast<int>(input.size()));

  const bool by_alpha = cfg.scan_parameter == "alpha";
  if (!by_alpha && cfg.scan_parameter != "x") throw UsageError("--param must be alpha or x");
  const auto grid = grid_values(cfg, by_alpha ? Grid{0.0, 1.0, 101} : Grid{0.0, 5.0, 201});

  TransitionCurve curve{cfg.scan_parameter, {}};
  std::vector<std::vector<CurveSample>> rows(grid.size());
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const double v = grid[static_cast<std::size_t>(i)];
      const GramMatrix gram = by_alpha ? uniform_gram(input.size(), v)
                                       : gram_from_positions({equally_delayed(input.size(), v), cfg.coherence_length});
      for (const auto& e : events)
        rows[static_cast<std::size_t>(i)].push_back({v, e.label(), event_probability({u, input, e, gram, stats}, Execution::Serial)});
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& r : rows) curve.samples.insert(curve.samples.end(), r.begin(), r.end());
  return from_curve(curve, true);
}

ResultSet run_decompose(const RunConfig& cfg) {
  const auto u = build_unitary(cfg);
  const auto input = build_input(cfg);
  const auto stats = parse_statistics(cfg.statistics);
  if (cfg.outputs.size() != 1) throw UsageError("decompose needs exactly one --output");
  const auto output = build_outputs(cfg, u.rows(), input.size()).front();
  const auto result = interference_orders(u, input, output, stats);

  ResultSet out{"d", {}, {}};
  for (const auto& [d, c] : result.coefficients)
    out.rows.push_back({static_cast<double>(d), "d" + std::to_string(d), c});
  return out;
}

std::vector<OccupationVector> scenario_events(const RunConfig& cfg, const std::string& fallback) {
  const std::string selection = cfg.events.empty() ? fallback : cfg.events;
  if (selection == "all") return enumerate_events(kFourierModes, 3);
  if (selection == "single") return single_occupancy_events(kFourierModes, 3);
  std::vector<OccupationVector> out;
  for (const auto& text : split(selection, ";")) out.push_back(parse_occupation(text));
  return out;
}

ResultSet run_scenario(const RunConfig& cfg) {
  const std::string& name = cfg.scenario;
  if (name == "doubleslit") {
    const double alpha = cfg.alpha.value_or(1.0);
    return from_curve(double_slit_scan(grid_values(cfg, {0.0, 2 * std::numbers::pi, 101}), alpha), false);
  }
  if (name == "hom") {
    return from_curve(hom_scan(cfg.coherence_length, grid_values(cfg, {0.0, 5.0, 201}), parse_statistics(cfg.statistics)),
                      false);
  }
  if (name == "fermion9") {
    return from_curve(fermion_fourier_scan(grid_values(cfg, {0.0, 5.0, 201}), scenario_events(cfg, "single"),
                                           cfg.coherence_length),
                      true);
  }
  if (name == "boson9") {
    return from_curve(
        boson_fourier_scan(grid_values(cfg, {0.0, 5.0, 201}), scenario_events(cfg, "all"), cfg.coherence_length), true);
  }
  if (name == "bjork") {
    return from_curve(bjork_scan(grid_values(cfg, {0.0, std::numbers::pi / 2, 101})), true);
  }
  throw UsageError("unknown scenario '" + name + "'");
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", cfg.out_file, "Write results to FILE instead of stdout");
}

void add_event_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--m", cfg.modes, "Mode count");
  cmd->add_option("--unitary", cfg.unitary, "fourier | beamsplitter | file | random")
      ->check(CLI::IsMember({"fourier", "beamsplitter", "file", "random"}));
  cmd->add_option("--t", cfg.transmissivity, "Beamsplitter transmissivity");
  cmd->add_option("--unitary-file", cfg.unitary_file, "Unitary in text format");
  cmd->add_option("--seed", cfg.seed, "Seed for --unitary random");
  cmd->add_option("--input", cfg.input, "Occupied input modes, 1-based, comma-separated");
  cmd->add_option("--stats", cfg.statistics, "boson | fermion")->check(CLI::IsMember({"boson", "fermion"}));
  add_common(cmd, cfg);
}

void add_gram_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "Uniform pairwise overlap in [0,1]");
  cmd->add_option("--positions", cfg.positions, "Particle displacements, comma-separated");
  cmd->add_option("--lc", cfg.coherence_length, "Coherence length");
  cmd->add_option("--gram-file", cfg.gram_file, "Gram matrix in text format");
}

}  // namespace

Grid parse_grid(const std::string& text) {
  const auto parts = split(text, ":");
  if (parts.size() != 3) throw UsageError("grid must be start:stop:count");
  const long count = to_integer(parts[2]);
  Grid g{to_double(parts[0]), to_double(parts[1]), static_cast<std::size_t>(std::max(0L, count))};
  if (count < 2) throw UsageError("grid count must be at least 2");
  if (!(g.start < g.stop)) throw UsageError("grid start must be below stop");
  return g;
}

OccupationVector parse_occupation(const std::string& text) {
  std::vector<int> counts;
  for (const auto& token : split(text, ",.")) {
    const long c = to_integer(token);
    if (c < 0) throw DomainError("negative occupation in '" + text + "'");
    counts.push_back(static_cast<int>(c));
  }
  return OccupationVector(std::move(counts));
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& token : split(text, ",")) out.push_back(to_double(token));
  return out;
}

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string to_csv(const ResultSet& results) {
  std::string out = "parameter,event,probability\n";
  for (const auto& r : results.rows) {
    if (r.parameter) out += format_number(*r.parameter);
    out += ',' + r.event + ',' + format_number(r.value) + '\n';
  }
  return out;
}

std::string to_json(const ResultSet& results, const RunConfig& config) {
  using nlohmann::ordered_json;
  auto rounded = [](double v) { return std::stod(format_number(v)); };

  ordered_json meta;
  meta["tool"] = "qtc";
  meta["version"] = kToolVersion;
  meta["subcommand"] = config.subcommand;
  if (!config.scenario.empty()) meta["scenario"] = config.scenario;
  meta["m"] = config.modes ? ordered_json(*config.modes) : ordered_json(nullptr);
  meta["unitary"] = config.unitary;
  meta["t"] = config.transmissivity;
  meta["unitary_file"] = config.unitary_file;
  meta["seed"] = config.seed ? ordered_json(*config.seed) : ordered_json(nullptr);
  meta["input"] = config.input;
  meta["stats"] = config.statistics;
  meta["alpha"] = config.alpha ? ordered_json(*config.alpha) : ordered_json(nullptr);
  meta["positions"] = config.positions;
  meta["lc"] = config.coherence_length;
  meta["gram_file"] = config.gram_file;
  meta["outputs"] = config.outputs;
  meta["events"] = config.events;
  meta["param"] = config.scan_parameter;
  meta["grid"] = config.grid;
  meta["format"] = config.format;
  meta["verify"] = config.verify;
  meta["parameter_name"] = results.parameter_name;
  meta["nonmonotonic"] = results.nonmonotonic;

  ordered_json data = ordered_json::array();
  for (const auto& r : results.rows) {
    ordered_json row;
    row["parameter"] = r.parameter ? ordered_json(rounded(*r.parameter)) : ordered_json(nullptr);
    row["event"] = r.event;
    row["probability"] = rounded(r.value);
    data.push_back(std::move(row));
  }

  ordered_json doc;
  doc["meta"] = std::move(meta);
  doc["data"] = std::move(data);
  return doc.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Many-particle interference of partially distinguishable bosons and fermions", "qtc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto* prob = app.add_subcommand("prob", "Probability of one or more output events");
  add_event_options(prob, cfg);
  add_gram_options(prob, cfg);
  prob->add_option("--output", cfg.outputs, "Output occupation, e.g. 1,1,0 (repeatable)");
  prob->add_flag("--verify", cfg.verify, "Cross-check against the first-quantized oracle");

  auto* dist = app.add_subcommand("dist", "Full output distribution");
  add_event_options(dist, cfg);
  add_gram_options(dist, cfg);
  dist->add_flag("--verify", cfg.verify, "Cross-check against the first-quantized oracle");

  auto* scan = app.add_subcommand("scan", "Event probabilities over a grid of alpha or x");
  add_event_options(scan, cfg);
  scan->add_option("--param", cfg.scan_parameter, "alpha (uniform overlap) or x (positions 0, x, 2x, ...)");
  scan->add_option("--lc", cfg.coherence_length, "Coherence length for --param x");
  scan->add_option("--grid", cfg.grid, "start:stop:count");
  scan->add_option("--output", cfg.outputs, "Output occupation (repeatable; default: all events)");

  auto* decompose = app.add_subcommand("decompose", "Interference-order coefficients of one event");
  add_event_options(decompose, cfg);
  decompose->add_option("--output", cfg.outputs, "Output occupation");

  auto* scenario = app.add_subcommand("scenario", "Preset scans: doubleslit, hom, fermion9, boson9, bjork");
  scenario->add_option("name", cfg.scenario, "Scenario name")
      ->required()
      ->check(CLI::IsMember({"doubleslit", "hom", "fermion9", "boson9", "bjork"}));
  scenario->add_option("--grid", cfg.grid, "start:stop:count");
  scenario->add_option("--lc", cfg.coherence_length, "Coherence length");
  scenario->add_option("--alpha", cfg.alpha, "Coherence for doubleslit");
  scenario->add_option("--stats", cfg.statistics, "Statistics for hom")->check(CLI::IsMember({"boson", "fermion"}));
  scenario->add_option("--events", cfg.events, "fermion9/boson9: all | single | occupations separated by ';'");
  add_common(scenario, cfg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    ResultSet results;
    if (prob->parsed()) {
      cfg.subcommand = "prob";
      results = run_prob(cfg, err);
    } else if (dist->parsed()) {
      cfg.subcommand = "dist";
      results = run_dist(cfg, err);
    } else if (scan->parsed()) {
      cfg.subcommand = "scan";
      results = run_scan(cfg);
    } else if (decompose->parsed()) {
      cfg.subcommand = "decompose";
      results = run_decompose(cfg);
    } else {
      cfg.subcommand = "scenario";
      results = run_scenario(cfg);
    }

    const std::string text = cfg.format == "json" ? to_json(results, cfg) : to_csv(results);
    if (cfg.out_file.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out_file, std::ios::binary);
      if (!file || !(file << text) || !file.flush()) throw IoError("cannot write '" + cfg.out_file + "'");
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace qtc::cli
