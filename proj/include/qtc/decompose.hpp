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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qtc/linalg.hpp"
#include "qtc/model.hpp"

namespace qtc {

/// Event probability split by interference order d, the number of particles
/// whose paths are exchanged between the two interfering many-particle
/// paths. Keys are {0} and {2..N}; d = 1 cannot occur.
///
/// Under a uniform pairwise overlap alpha the event probability is the
/// polynomial sum_d alpha^d C_d: C_0 is the distinguishable-particle value
/// and sum_d C_d the fully indistinguishable one.
struct DecompositionResult {
  std::map<std::size_t, double> coefficients;
  /// sum_d C_d.
  double total_check = 0.0;

  std::size_t particles() const;
};

DecompositionResult interference_orders(const ComplexMatrix& unitary, const AssignmentList& input,
                                        const OccupationVector& output, Statistics statistics);

/// sum_d alpha^d C_d, clamped to [0,1] within the engine slack.
double transition_polynomial(const DecompositionResult& result, double alpha);

/// (1 - alpha) p_classical + alpha p_quantum.
double naive_interpolation(double p_classical, double p_quantum, double alpha);

/// Least-squares recovery of C_0, C_2..C_N from sampled (alpha, probability)
/// pairs, with the linear term pinned to zero. Needs at least N+1 distinct
/// alpha values.
DecompositionResult fit_orders(std::span<const std::pair<double, double>> samples, std::size_t particles);

/// True when the first differences of `values` change sign, ignoring steps
/// of magnitude <= noise_floor.
bool has_interior_extremum(std::span<const double> values, double noise_floor = 1e-10);

/// True when no step decreases by more than `tolerance`.
bool is_non_decreasing(std::span<const double> values, double tolerance = 1e-12);

}  // namespace qtc
