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

#include "qtc/linalg.hpp"

namespace qtc {

enum class Statistics { Boson, Fermion };

std::string to_string(Statistics s);
Statistics parse_statistics(const std::string& text);

/// Particle count per mode.
class OccupationVector {
 public:
  OccupationVector() = default;
  explicit OccupationVector(std::vector<int> counts);

  std::size_t modes() const noexcept { return counts_.size(); }
  int particles() const noexcept { return particles_; }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  const std::vector<int>& counts() const noexcept { return counts_; }

  /// prod_j s_j!
  double factorial_product() const;
  int max_occupation() const;

  /// Dot-separated rendering, e.g. "1.1.0".
  std::string label() const;

  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;

 private:
  std::vector<int> counts_;
  int particles_ = 0;
};

/// Mode index per particle slot, kept in ascending order.
class AssignmentList {
 public:
  AssignmentList() = default;
  /// Sorts `modes` into canonical order.
  explicit AssignmentList(std::vector<std::size_t> modes);

  std::size_t size() const noexcept { return modes_.size(); }
  std::size_t operator[](std::size_t slot) const { return modes_[slot]; }
  const std::vector<std::size_t>& modes() const noexcept { return modes_; }
  bool all_distinct() const;

  friend bool operator==(const AssignmentList&, const AssignmentList&) = default;

 private:
  std::vector<std::size_t> modes_;
};

AssignmentList occupation_to_assignment(const OccupationVector& s);
OccupationVector assignment_to_occupation(const AssignmentList& a, std::size_t modes);

/// Builds the N x N matrix U(input[a], output[b]).
ComplexMatrix scattering_submatrix(const ComplexMatrix& u, const AssignmentList& input,
                                   const AssignmentList& output);

/// Hermitian, unit-diagonal, positive semidefinite matrix of internal-state
/// overlaps S(j,k) = <v_j|v_k>. Validated on construction.
class GramMatrix {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kEigenvalueFloor = -1e-10;

  explicit GramMatrix(ComplexMatrix overlaps);

  static GramMatrix identity(std::size_t n);
  static GramMatrix ones(std::size_t n);

  std::size_t size() const noexcept { return overlaps_.rows(); }
  const Complex& operator()(std::size_t j, std::size_t k) const { return overlaps_(j, k); }
  const ComplexMatrix& matrix() const noexcept { return overlaps_; }

  double min_eigenvalue() const;
  /// GramMatrix with rows/columns relabeled: out(j,k) = S(perm[j], perm[k]).
  GramMatrix permuted(std::span<const std::size_t> perm) const;

 private:
  ComplexMatrix overlaps_;
};

/// Particle displacements and the wavepacket coherence length.
struct SourceConfig {
  std::vector<double> positions;
  double coherence_length = 1.0;
};

/// S(j,k) = exp(-(x_j - x_k)^2 / (2 l_c^2)).
GramMatrix gram_from_positions(const SourceConfig& cfg);

/// Unit diagonal, every off-diagonal entry equal to alpha.
GramMatrix uniform_gram(std::size_t n, double alpha);

/// Equally spaced displacements 0, x, 2x, ...
std::vector<double> equally_delayed(std::size_t n, double x);

/// Every occupation of `particles` bosons over `modes` modes, ordered by
/// ascending canonical assignment: (N,0,..,0) first.
std::vector<OccupationVector> enumerate_events(std::size_t modes, int particles);
/// The subset with at most one particle per mode.
std::vector<OccupationVector> single_occupancy_events(std::size_t modes, int particles);

}  // namespace qtc
