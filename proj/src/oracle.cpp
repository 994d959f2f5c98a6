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

#include "qtc/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qtc/errors.hpp"

namespace qtc::oracle {

namespace {

constexpr double kRankThreshold = 1e-13;

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp--) out *= base;
  return out;
}

// Decodes a flat index into N base-`radix` digits, most significant first.
void decode(std::size_t index, std::size_t radix, std::span<std::size_t> digits) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    digits[k] = index % radix;
    index /= radix;
  }
}

std::size_t encode(std::span<const std::size_t> digits, std::size_t radix) {
  std::size_t index = 0;
  for (auto d : digits) index = index * radix + d;
  return index;
}

}  // namespace

std::vector<InternalState> internal_vectors_from_gram(const GramMatrix& gram) {
  const auto n = static_cast<Eigen::Index>(gram.size());
  Eigen::MatrixXcd s(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      s(j, k) = gram(static_cast<std::size_t>(j), static_cast<std::size_t>(k));

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(s);
  const auto& lambda = solver.eigenvalues();
  const auto& basis = solver.eigenvectors();
  if (lambda.minCoeff() < GramMatrix::kEigenvalueFloor) throw DomainError("Gram matrix is not PSD");

  // S = V diag(lambda) V^dag = B^dag B with B = diag(sqrt lambda) V^dag.
  std::vector<Eigen::Index> kept;
  for (Eigen::Index c = 0; c < n; ++c)
    if (lambda(c) > kRankThreshold) kept.push_back(c);
  if (kept.empty()) throw DomainError("Gram matrix has zero rank");

  std::vector<InternalState> vectors(static_cast<std::size_t>(n), InternalState(kept.size()));
  for (Eigen::Index j = 0; j < n; ++j)
    for (std::size_t c = 0; c < kept.size(); ++c)
      vectors[static_cast<std::size_t>(j)][c] = std::sqrt(lambda(kept[c])) * std::conj(basis(j, kept[c]));
  return vectors;
}

FirstQuantizedState::FirstQuantizedState(std::size_t modes, const AssignmentList& input,
                                         const std::vector<InternalState>& internal, Statistics statistics)
    : particles_(input.size()), modes_(modes) {
  if (particles_ == 0) throw SpecError("no particles");
  if (particles_ > kMaxParticles || modes_ > kMaxModes)
    throw ResourceError("oracle supports N <= " + std::to_string(kMaxParticles) + " and m <= " +
                        std::to_string(kMaxModes));
  if (internal.size() != particles_) throw SpecError("one internal state per particle required");
  internal_dim_ = internal.front().size();
  for (const auto& v : internal)
    if (v.size() != internal_dim_) throw SpecError("internal states differ in dimension");
  for (auto r : input.modes())
    if (r >= modes_) throw IndexError("input mode out of range");

  internal_block_ = ipow(internal_dim_, particles_);
  psi_.assign(ipow(modes_, particles_) * internal_block_, Complex{});

  // Sum over placements of particle perm[k] into slot k, signed for fermions.
  std::vector<std::size_t> perm(particles_);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::size_t> mode_digits(particles_);
  std::vector<std::size_t> internal_digits(particles_);
  do {
    double sign = 1.0;
    if (statistics == Statistics::Fermion) {
      for (std::size_t a = 0; a < particles_; ++a)
        for (std::size_t b = a + 1; b < particles_; ++b)
          if (perm[a] > perm[b]) sign = -sign;
    }
    for (std::size_t k = 0; k < particles_; ++k) mode_digits[k] = input[perm[k]];
    const std::size_t mode_index = encode(mode_digits, modes_);
    for (std::size_t c = 0; c < internal_block_; ++c) {
      decode(c, internal_dim_, internal_digits);
      Complex amp{sign, 0.0};
      for (std::size_t k = 0; k < particles_; ++k) amp *= internal[perm[k]][internal_digits[k]];
      psi_[mode_index * internal_block_ + c] += amp;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  const double n = norm();
  if (n <= 1e-12) throw DomainError("(anti)symmetrized input state vanishes");
  for (auto& z : psi_) z /= n;
}

void FirstQuantizedState::evolve(const ComplexMatrix& unitary) {
  if (unitary.rows() != modes_ || unitary.cols() != modes_) throw DimensionError("unitary size mismatch");
  std::vector<std::size_t> digits(particles_);
  const std::size_t mode_tuples = ipow(modes_, particles_);
  for (std::size_t slot = 0; slot < particles_; ++slot) {
    std::vector<Complex> next(psi_.size(), Complex{});
    for (std::size_t t = 0; t < mode_tuples; ++t) {
      decode(t, modes_, digits);
      const std::size_t from = digits[slot];
      for (std::size_t to = 0; to < modes_; ++to) {
        const Complex u = unitary(from, to);
        if (u == Complex{}) continue;
        digits[slot] = to;
        const std::size_t target = encode(digits, modes_);
        for (std::size_t c = 0; c < internal_block_; ++c)
          next[target * internal_block_ + c] += u * psi_[t * internal_block_ + c];
      }
    }
    psi_ = std::move(next);
  }
}

double FirstQuantizedState::norm() const {
  double total = 0.0;
  for (const auto& z : psi_) total += std::norm(z);
  return std::sqrt(total);
}

double FirstQuantizedState::probability(const OccupationVector& output) const {
  if (output.modes() != modes_ || static_cast<std::size_t>(output.particles()) != particles_)
    throw SpecError("occupation does not match state dimensions");
  std::vector<std::size_t> digits(particles_);
  std::vector<int> counts(modes_);
  double total = 0.0;
  const std::size_t mode_tuples = ipow(modes_, particles_);
  for (std::size_t t = 0; t < mode_tuples; ++t) {
    decode(t, modes_, digits);
    std::fill(counts.begin(), counts.end(), 0);
    for (auto d : digits) ++counts[d];
    if (counts != output.counts()) continue;
    for (std::size_t c = 0; c < internal_block_; ++c) total += std::norm(psi_[t * internal_block_ + c]);
  }
  return total;
}

Complex FirstQuantizedState::amplitude(std::span<const std::size_t> modes, std::span<const std::size_t> internal) const {
  if (modes.size() != particles_ || internal.size() != particles_) throw DimensionError("tuple length mismatch");
  return psi_[encode(modes, modes_) * internal_block_ + encode(internal, internal_dim_)];
}

double first_quantized_probability(const ComplexMatrix& unitary, const AssignmentList& input,
                                   const std::vector<InternalState>& internal, const OccupationVector& output,
                                   Statistics statistics) {
  FirstQuantizedState state(unitary.rows(), input, internal, statistics);
  state.evolve(unitary);
  return state.probability(output);
}

std::vector<double> first_quantized_distribution(const ComplexMatrix& unitary, const AssignmentList& input,
                                                 const std::vector<InternalState>& internal, Statistics statistics) {
  FirstQuantizedState state(unitary.rows(), input, internal, statistics);
  state.evolve(unitary);
  std::vector<double> out;
  for (const auto& event : enumerate_events(unitary.rows(), static_cast<int>(input.size())))
    out.push_back(state.probability(event));
  return out;
}

}  // namespace qtc::oracle
