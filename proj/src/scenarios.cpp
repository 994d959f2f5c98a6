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

#include "qtc/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qtc/decompose.hpp"
#include "qtc/errors.hpp"

namespace qtc {

std::vector<std::string> TransitionCurve::events() const {
  std::vector<std::string> out;
  for (const auto& s : samples) {
    if (!out.empty() && s.event == out.front()) break;
    out.push_back(s.event);
  }
  return out;
}

std::vector<double> TransitionCurve::parameters() const {
  std::vector<double> out;
  for (const auto& s : samples)
    if (out.empty() || s.parameter != out.back()) out.push_back(s.parameter);
  return out;
}

std::vector<double> TransitionCurve::series(const std::string& event) const {
  std::vector<double> out;
  for (const auto& s : samples)
    if (s.event == event) out.push_back(s.probability);
  return out;
}

std::vector<std::string> TransitionCurve::nonmonotonic_events(double noise_floor) const {
  std::vector<std::string> out;
  for (const auto& e : events())
    if (has_interior_extremum(series(e), noise_floor)) out.push_back(e);
  return out;
}

std::vector<double> linspace(double start, double stop, std::size_t count) {
  if (count < 2) throw DomainError("grid needs at least two points");
  if (!(start < stop)) throw DomainError("grid start must be below stop");
  std::vector<double> out(count);
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
  out.back() = stop;
  return out;
}

namespace {

void require_increasing(const std::vector<double>& grid) {
  if (grid.empty()) throw DomainError("empty parameter grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw DomainError("parameter grid must be strictly increasing");
}

// Evaluates `row(i)` (one grid point, all events) for every grid point and
// flattens the rows in grid order.
template <class RowFn>
TransitionCurve assemble(std::string name, const std::vector<double>& grid, std::size_t events_per_point, RowFn row,
                         Execution exec) {
  require_increasing(grid);
  std::vector<std::vector<CurveSample>> rows(grid.size());
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  if (exec == Execution::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        rows[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = row(static_cast<std::size_t>(i));
  }

  TransitionCurve curve{std::move(name), {}};
  curve.samples.reserve(grid.size() * events_per_point);
  for (auto& r : rows) curve.samples.insert(curve.samples.end(), r.begin(), r.end());
  return curve;
}

}  // namespace

double double_slit(double phase, double coherence) {
  if (!(coherence >= 0.0 && coherence <= 1.0)) throw DomainError("coherence must lie in [0,1]");
  // Each slit reaches the screen point with amplitude 1/2; the cross term is
  // weighted by the coherence.
  const Complex a1{0.5, 0.0};
  const Complex a2 = std::polar(0.5, phase);
  return std::norm(a1) + std::norm(a2) + 2.0 * coherence * (std::conj(a1) * a2).real();
}

TransitionCurve double_slit_scan(const std::vector<double>& phases, double coherence) {
  return assemble(
      "phase", phases, 1,
      [&](std::size_t i) { return std::vector<CurveSample>{{phases[i], "screen", double_slit(phases[i], coherence)}}; },
      Execution::Serial);
}

TransitionCurve hom_scan(double coherence_length, const std::vector<double>& xs, Statistics statistics,
                         Execution exec) {
  if (!(coherence_length > 0.0)) throw DomainError("coherence length must be positive");
  const ComplexMatrix bs = beamsplitter(0.5);
  const AssignmentList input({0, 1});
  const OccupationVector coincidence({1, 1});
  auto row = [&](std::size_t i) {
    const GramMatrix gram = gram_from_positions({{0.0, xs[i]}, coherence_length});
    const EventSpec spec{bs, input, coincidence, gram, statistics};
    return std::vector<CurveSample>{{xs[i], coincidence.label(), event_probability(spec, Execution::Serial)}};
  };
  return assemble("x", xs, 1, row, exec);
}

TransitionCurve fourier_scan(const std::vector<double>& xs, const std::vector<OccupationVector>& events,
                             Statistics statistics, double coherence_length, Execution exec) {
  if (!(coherence_length > 0.0)) throw DomainError("coherence length must be positive");
  const ComplexMatrix u = fourier_unitary(kFourierModes);
  const AssignmentList input(kFourierInputModes);
  for (const auto& e : events)
    if (e.modes() != kFourierModes || e.particles() != 3) throw SpecError("event " + e.label() + " is not a 9-mode 3-particle event");

  auto row = [&](std::size_t i) {
    const GramMatrix gram = gram_from_positions({equally_delayed(3, xs[i]), coherence_length});
    std::vector<CurveSample> out;
    out.reserve(events.size());
    for (const auto& e : events)
      out.push_back({xs[i], e.label(), event_probability({u, input, e, gram, statistics}, Execution::Serial)});
    return out;
  };
  return assemble("x", xs, events.size(), row, exec);
}

TransitionCurve fermion_fourier_scan(const std::vector<double>& xs, const std::vector<OccupationVector>& events,
                                     double coherence_length, Execution exec) {
  return fourier_scan(xs, events, Statistics::Fermion, coherence_length, exec);
}

TransitionCurve boson_fourier_scan(const std::vector<double>& xs, const std::vector<OccupationVector>& events,
                                   double coherence_length, Execution exec) {
  return fourier_scan(xs, events, Statistics::Boson, coherence_length, exec);
}

namespace {

void require_gamma(double gamma) {
  if (!(gamma >= 0.0 && gamma <= std::numbers::pi / 2)) throw DomainError("gamma must lie in [0, pi/2]");
}

}  // namespace

ProjectionSample bjork_projection(double gamma) {
  require_gamma(gamma);
  const double theta = std::numbers::pi / 4 + gamma / 2;
  const Complex psi[2] = {std::cos(theta), std::sin(theta)};
  const Complex xi[2] = {std::cos(std::numbers::pi / 8), -std::sin(std::numbers::pi / 8)};

  const Complex overlap = std::conj(xi[0]) * psi[0] + std::conj(xi[1]) * psi[1];

  // Purity Tr(rho^2) / (Tr rho)^2 of rho = |psi><psi|, built in long double
  // so that the pure-state value rounds to exactly one.
  const long double amp[2] = {cosl(static_cast<long double>(theta)), sinl(static_cast<long double>(theta))};
  long double rho[2][2];
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) rho[a][b] = amp[a] * amp[b];
  const long double trace = rho[0][0] + rho[1][1];
  const long double trace_sq =
      rho[0][0] * rho[0][0] + rho[0][1] * rho[1][0] + rho[1][0] * rho[0][1] + rho[1][1] * rho[1][1];

  return {std::norm(overlap), static_cast<double>(trace_sq / (trace * trace))};
}

double bjork_predictability(double gamma) {
  require_gamma(gamma);
  const double theta = std::numbers::pi / 4 + gamma / 2;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return std::abs(c * c - s * s);
}

TransitionCurve bjork_scan(const std::vector<double>& gammas) {
  auto row = [&](std::size_t i) {
    const auto p = bjork_projection(gammas[i]);
    return std::vector<CurveSample>{{gammas[i], "projection", p.probability},
                                    {gammas[i], "purity", p.purity},
                                    {gammas[i], "predictability", bjork_predictability(gammas[i])}};
  };
  return assemble("gamma", gammas, 3, row, Execution::Serial);
}

}  // namespace qtc
