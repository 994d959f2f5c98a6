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

// Brute-force first-quantized simulator. Builds the explicit (anti)symmetrized
// N-particle wavefunction over mode and internal degrees of freedom, evolves
// it slot by slot and reads off occupation probabilities. Shares nothing
// with the permutation-sum engine beyond the matrix type.

#include <cstddef>
#include <vector>

#include "qtc/linalg.hpp"
#include "qtc/model.hpp"

namespace qtc::oracle {

inline constexpr std::size_t kMaxParticles = 3;
inline constexpr std::size_t kMaxModes = 9;

using InternalState = std::vector<Complex>;

/// Vectors v_j with <v_j|v_k> = S(j,k), from the eigendecomposition of S.
/// Their dimension is the numerical rank of S.
std::vector<InternalState> internal_vectors_from_gram(const GramMatrix& gram);

class FirstQuantizedState {
 public:
  /// Normalized (anti)symmetrized product of (input mode x internal state)
  /// per particle. Throws DomainError if the state vanishes.
  FirstQuantizedState(std::size_t modes, const AssignmentList& input, const std::vector<InternalState>& internal,
                      Statistics statistics);

  std::size_t particles() const noexcept { return particles_; }
  std::size_t modes() const noexcept { return modes_; }
  std::size_t internal_dim() const noexcept { return internal_dim_; }

  /// Applies U to every particle's mode factor: e_r -> sum_s U(r,s) e_s.
  void evolve(const ComplexMatrix& unitary);

  double norm() const;
  /// Sum of |psi|^2 over mode tuples with occupation `output` and all
  /// internal indices.
  double probability(const OccupationVector& output) const;
  /// Amplitude at (mode tuple, internal tuple).
  Complex amplitude(std::span<const std::size_t> modes, std::span<const std::size_t> internal) const;

 private:
  std::size_t particles_;
  std::size_t modes_;
  std::size_t internal_dim_;
  std::size_t internal_block_;  // internal_dim^N
  std::vector<Complex> psi_;
};

double first_quantized_probability(const ComplexMatrix& unitary, const AssignmentList& input,
                                   const std::vector<InternalState>& internal, const OccupationVector& output,
                                   Statistics statistics);

/// Probabilities for every event of `enumerate_events(m, N)`, in that order.
std::vector<double> first_quantized_distribution(const ComplexMatrix& unitary, const AssignmentList& input,
                                                 const std::vector<InternalState>& internal, Statistics statistics);

}  // namespace qtc::oracle
