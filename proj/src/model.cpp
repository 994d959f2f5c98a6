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

#include "qtc/model.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>

#include "qtc/errors.hpp"

namespace qtc {

std::string to_string(Statistics s) { return s == Statistics::Boson ? "boson" : "fermion"; }

Statistics parse_statistics(const std::string& text) {
  if (text == "boson" || text == "bosons") return Statistics::Boson;
  if (text == "fermion" || text == "fermions") return Statistics::Fermion;
  throw DomainError("unknown statistics '" + text + "'");
}

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw DomainError("negative occupation");
    particles_ += c;
  }
}

double OccupationVector::factorial_product() const {
  double prod = 1.0;
  for (int c : counts_)
    for (int k = 2; k <= c; ++k) prod *= k;
  return prod;
}

int OccupationVector::max_occupation() const {
  return counts_.empty() ? 0 : *std::max_element(counts_.begin(), counts_.end());
}

std::string OccupationVector::label() const {
  std::string out;
  for (std::size_t j = 0; j < counts_.size(); ++j) {
    if (j) out += '.';
    out += std::to_string(counts_[j]);
  }
  return out;
}

AssignmentList::AssignmentList(std::vector<std::size_t> modes) : modes_(std::move(modes)) {
  std::sort(modes_.begin(), modes_.end());
}

bool AssignmentList::all_distinct() const {
  return std::adjacent_find(modes_.begin(), modes_.end()) == modes_.end();
}

AssignmentList occupation_to_assignment(const OccupationVector& s) {
  std::vector<std::size_t> modes;
  modes.reserve(static_cast<std::size_t>(s.particles()));
  for (std::size_t j = 0; j < s.modes(); ++j) modes.insert(modes.end(), static_cast<std::size_t>(s[j]), j);
  return AssignmentList(std::move(modes));
}

OccupationVector assignment_to_occupation(const AssignmentList& a, std::size_t modes) {
  std::vector<int> counts(modes, 0);
  for (auto m : a.modes()) {
    if (m >= modes) throw IndexError("mode " + std::to_string(m) + " out of range");
    ++counts[m];
  }
  return OccupationVector(std::move(counts));
}

ComplexMatrix scattering_submatrix(const ComplexMatrix& u, const AssignmentList& input,
                                   const AssignmentList& output) {
  return scattering_submatrix(u, std::span<const std::size_t>(input.modes()),
                              std::span<const std::size_t>(output.modes()));
}

namespace {

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return out;
}

}  // namespace

GramMatrix::GramMatrix(ComplexMatrix overlaps) : overlaps_(std::move(overlaps)) {
  if (!overlaps_.is_square() || overlaps_.rows() == 0) throw DimensionError("Gram matrix must be square and non-empty");
  const std::size_t n = overlaps_.rows();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(overlaps_(j, j) - 1.0) > kHermitianTolerance)
      throw DomainError("Gram matrix diagonal must be 1");
    for (std::size_t k = j + 1; k < n; ++k)
      if (std::abs(overlaps_(j, k) - std::conj(overlaps_(k, j))) > kHermitianTolerance)
        throw DomainError("Gram matrix must be Hermitian");
  }
  if (min_eigenvalue() < kEigenvalueFloor) throw DomainError("Gram matrix must be positive semidefinite");
}

GramMatrix GramMatrix::identity(std::size_t n) { return GramMatrix(ComplexMatrix::identity(n)); }

GramMatrix GramMatrix::ones(std::size_t n) { return GramMatrix(ComplexMatrix::constant(n, n, 1.0)); }

double GramMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(overlaps_), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

GramMatrix GramMatrix::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  if (perm.size() != n) throw DimensionError("permutation length mismatch");
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) out(j, k) = overlaps_(perm[j], perm[k]);
  return GramMatrix(std::move(out));
}

GramMatrix gram_from_positions(const SourceConfig& cfg) {
  if (!(cfg.coherence_length > 0.0)) throw DomainError("coherence length must be positive");
  const std::size_t n = cfg.positions.size();
  if (n == 0) throw DimensionError("no particle positions");
  ComplexMatrix s(n, n);
  const double two_lc2 = 2.0 * cfg.coherence_length * cfg.coherence_length;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const double delta = cfg.positions[j] - cfg.positions[k];
      s(j, k) = std::exp(-delta * delta / two_lc2);
    }
  return GramMatrix(std::move(s));
}

GramMatrix uniform_gram(std::size_t n, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  ComplexMatrix s = ComplexMatrix::constant(n, n, alpha);
  for (std::size_t j = 0; j < n; ++j) s(j, j) = 1.0;
  return GramMatrix(std::move(s));
}

std::vector<double> equally_delayed(std::size_t n, double x) {
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = static_cast<double>(j) * x;
  return out;
}

std::vector<OccupationVector> enumerate_events(std::size_t modes, int particles) {
  if (modes == 0 || particles < 0) throw DomainError("invalid event space");
  std::vector<OccupationVector> events;
  std::vector<std::size_t> slots(static_cast<std::size_t>(particles), 0);
  // Non-decreasing tuples in lexicographic order.
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t slot, std::size_t lowest) {
    if (slot == slots.size()) {
      events.push_back(assignment_to_occupation(AssignmentList(slots), modes));
      return;
    }
    for (std::size_t m = lowest; m < modes; ++m) {
      slots[slot] = m;
      walk(slot + 1, m);
    }
  };
  walk(0, 0);
  return events;
}

std::vector<OccupationVector> single_occupancy_events(std::size_t modes, int particles) {
  auto all = enumerate_events(modes, particles);
  std::erase_if(all, [](const OccupationVector& s) { return s.max_occupation() > 1; });
  return all;
}

}  // namespace qtc
