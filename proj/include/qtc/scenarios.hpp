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

#include <cstddef>
#include <string>
#include <vector>

#include "qtc/engine.hpp"
#include "qtc/model.hpp"

namespace qtc {

struct CurveSample {
  double parameter = 0.0;
  std::string event;
  double probability = 0.0;
};

/// Probability-vs-parameter series for one or more events. Samples are
/// ordered by parameter, then by the event order the scan was given.
struct TransitionCurve {
  std::string parameter_name;
  std::vector<CurveSample> samples;

  std::vector<std::string> events() const;
  std::vector<double> parameters() const;
  /// Probabilities of one event across the grid.
  std::vector<double> series(const std::string& event) const;
  /// Events whose series has an interior local extremum.
  std::vector<std::string> nonmonotonic_events(double noise_floor = 1e-10) const;
};

/// `count` uniformly spaced points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, std::size_t count);

/// Default scan: 201 points on x / l_c in [0, 5].
inline constexpr std::size_t kDefaultGridPoints = 201;
inline constexpr double kDefaultGridStop = 5.0;
/// Separation treated as "x >> l_c" in limit checks.
inline constexpr double kDistinguishableSeparation = 20.0;

/// Input modes of the nine-mode Fourier scenario: the third, sixth and ninth.
inline const std::vector<std::size_t> kFourierInputModes{2, 5, 8};
inline constexpr std::size_t kFourierModes = 9;

/// Single-particle screen probability behind two slits with relative phase
/// phi and coherence alpha: (1 + alpha cos phi) / 2.
double double_slit(double phase, double coherence);
TransitionCurve double_slit_scan(const std::vector<double>& phases, double coherence);

/// HOM coincidence probability behind a 50:50 beamsplitter for two particles
/// at positions (0, x).
TransitionCurve hom_scan(double coherence_length, const std::vector<double>& xs,
                         Statistics statistics = Statistics::Boson, Execution exec = Execution::Parallel);

/// Three particles in modes {2,5,8} of a 9-mode Fourier multiport, delayed to
/// positions (0, x, 2x).
TransitionCurve fourier_scan(const std::vector<double>& xs, const std::vector<OccupationVector>& events,
                             Statistics statistics, double coherence_length = 1.0,
                             Execution exec = Execution::Parallel);
TransitionCurve fermion_fourier_scan(const std::vector<double>& xs, const std::vector<OccupationVector>& events,
                                     double coherence_length = 1.0, Execution exec = Execution::Parallel);
TransitionCurve boson_fourier_scan(const std::vector<double>& xs, const std::vector<OccupationVector>& events,
                                   double coherence_length = 1.0, Execution exec = Execution::Parallel);

struct ProjectionSample {
  double probability = 0.0;
  double purity = 0.0;
};

/// |<xi|psi(gamma)>|^2 for psi(gamma) = cos(pi/4 + gamma/2)|1,0> +
/// sin(pi/4 + gamma/2)|0,1> and xi = cos(pi/8)|1,0> - sin(pi/8)|0,1>, with
/// the purity of psi(gamma). gamma in [0, pi/2].
ProjectionSample bjork_projection(double gamma);

/// Mode predictability |p_H - p_V| of psi(gamma).
double bjork_predictability(double gamma);

/// Events "projection", "purity" and "predictability" on a gamma grid.
TransitionCurve bjork_scan(const std::vector<double>& gammas);

}  // namespace qtc
