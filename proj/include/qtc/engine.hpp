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
#include <cstdint>
#include <utility>
#include <vector>

#include "qtc/linalg.hpp"
#include "qtc/model.hpp"

namespace qtc {

/// Particle cap for the general double-permutation sum, (N!)^2 N terms.
inline constexpr std::size_t kMaxGeneralParticles = 7;
/// Particle cap for the permanent/determinant fast paths.
inline constexpr std::size_t kMaxFastPathParticles = 16;
/// Budget for full output enumeration.
inline constexpr std::size_t kMaxDistributionParticles = 5;
inline constexpr std::size_t kMaxDistributionModes = 12;

/// Residual imaginary part above which a probability sum is rejected.
inline constexpr double kImaginaryTolerance = 1e-10;
/// Slack outside [0,1] that is clamped rather than rejected.
inline constexpr double kProbabilitySlack = 1e-10;

enum class Execution { Serial, Parallel };

/// One N-particle event: U is m x m, `input` lists the N occupied input
/// modes, `output` is the measured occupation and `gram` the N x N overlap
/// matrix indexed in the order of `input`.
struct EventSpec {
  ComplexMatrix unitary;
  AssignmentList input;
  OccupationVector output;
  GramMatrix gram;
  Statistics statistics = Statistics::Boson;
};

/// All permutations of {0..n-1} in lexicographic order with their sign and
/// number of moved points.
class PermutationTable {
 public:
  explicit PermutationTable(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::size_t count() const noexcept { return signs_.size(); }
  const std::uint8_t* operator[](std::size_t index) const { return images_.data() + index * n_; }
  int sign(std::size_t index) const { return signs_[index]; }
  std::size_t moved(std::size_t index) const { return moved_[index]; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> images_;
  std::vector<int> signs_;
  std::vector<std::size_t> moved_;
};

/// Throws unless the spec is dimensionally consistent.
void validate(const EventSpec& spec);

/// Rejects probabilities outside [0,1] by more than the slack and clamps the
/// rest.
double clamp_probability(double p);

/// The double-permutation sum split by interference order: entry d holds the
/// (normalized, real) contribution of every path pair whose relative
/// permutation moves exactly d particles. Summing the entries gives the event
/// probability. Parallel and serial execution give bit-identical results.
std::vector<double> order_contributions(const EventSpec& spec, Execution exec = Execution::Parallel);

/// Probability of `spec.output` for partially distinguishable particles.
double event_probability(const EventSpec& spec, Execution exec = Execution::Parallel);

/// Fully indistinguishable limit: |perm|^2 / (prod s! prod r!) for bosons,
/// |det|^2 for fermions.
double quantum_probability(const ComplexMatrix& unitary, const AssignmentList& input,
                           const OccupationVector& output, Statistics statistics);

/// Fully distinguishable limit: perm(|M|^2) / prod s!.
double classical_probability(const ComplexMatrix& unitary, const AssignmentList& input,
                             const OccupationVector& output);

using Distribution = std::vector<std::pair<OccupationVector, double>>;

/// Probabilities of every output occupation, in `enumerate_events` order.
/// Events are evaluated concurrently under Execution::Parallel; each event's
/// sum runs in a fixed order so the result does not depend on scheduling.
Distribution full_distribution(const ComplexMatrix& unitary, const AssignmentList& input,
                               const GramMatrix& gram, Statistics statistics,
                               Execution exec = Execution::Parallel);

}  // namespace qtc
