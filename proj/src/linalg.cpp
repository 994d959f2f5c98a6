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

#include "qtc/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qtc/errors.hpp"

namespace qtc {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(data_.size()) + " != " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::constant(std::size_t rows, std::size_t cols, Complex value) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols, value));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ComplexMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double unitarity_defect(const ComplexMatrix& u) {
  if (!u.is_square()) throw DimensionError("unitarity check needs a square matrix");
  return max_abs_difference(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  return u.is_square() && unitarity_defect(u) <= tol;
}

Complex permanent(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0 || n > 20) throw DomainError("permanent supports 1 <= n <= 20, got " + std::to_string(n));

  // Ryser: perm = (-1)^n sum_{S} (-1)^{|S|} prod_i sum_{j in S} m(i,j),
  // with S walked in Gray-code order so each step toggles one column.
  std::vector<Complex> row_sums(n, Complex{});
  Complex total{};
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const double direction = (gray & bit) ? 1.0 : -1.0;
    Complex product{1.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      row_sums[i] += direction * m(i, col);
      product *= row_sums[i];
    }
    total += (std::popcount(gray) & 1) ? -product : product;
  }
  return (n & 1) ? -total : total;
}

Complex determinant(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i) same = m(i, a) == m(i, b);
      if (same) return 0.0;
    }

  ComplexMatrix lu = m;
  Complex det{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (lu(pivot, k) == Complex{}) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = lu(i, k) / lu(k, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= factor * lu(k, j);
    }
  }
  return det;
}

ComplexMatrix fourier_unitary(std::size_t modes) {
  if (modes == 0) throw DomainError("Fourier multiport needs at least one mode");
  ComplexMatrix u(modes, modes);
  const double norm = 1.0 / std::sqrt(static_cast<double>(modes));
  for (std::size_t j = 0; j < modes; ++j)
    for (std::size_t k = 0; k < modes; ++k) {
      // Reduce j*k mod m first so the phase argument stays small.
      const double phase =
          2.0 * std::numbers::pi * static_cast<double>((j * k) % modes) / static_cast<double>(modes);
      u(j, k) = std::polar(norm, phase);
    }
  return u;
}

ComplexMatrix beamsplitter(double transmissivity) {
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0))
    throw DomainError("beamsplitter transmissivity must lie in [0,1]");
  const double t = std::sqrt(transmissivity);
  const double r = std::sqrt(1.0 - transmissivity);
  return ComplexMatrix{{t, r}, {r, -t}};
}

ComplexMatrix random_unitary(std::size_t modes, std::uint64_t seed) {
  if (modes == 0) throw DomainError("random unitary needs at least one mode");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // Columns of a complex Ginibre matrix, orthonormalized (modified Gram-Schmidt).
  std::vector<std::vector<Complex>> cols(modes, std::vector<Complex>(modes));
  for (auto& c : cols)
    for (auto& z : c) z = {gauss(rng), gauss(rng)};

  for (std::size_t k = 0; k < modes; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      Complex proj{};
      for (std::size_t i = 0; i < modes; ++i) proj += std::conj(cols[j][i]) * cols[k][i];
      for (std::size_t i = 0; i < modes; ++i) cols[k][i] -= proj * cols[j][i];
    }
    double norm = 0.0;
    for (const auto& z : cols[k]) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto& z : cols[k]) z /= norm;
  }

  ComplexMatrix u(modes, modes);
  for (std::size_t i = 0; i < modes; ++i)
    for (std::size_t k = 0; k < modes; ++k) u(i, k) = cols[k][i];
  return u;
}

ComplexMatrix scattering_submatrix(const ComplexMatrix& u, std::span<const std::size_t> input_modes,
                                   std::span<const std::size_t> output_modes) {
  if (input_modes.size() != output_modes.size())
    throw DimensionError("input and output assignments differ in length");
  for (auto r : input_modes)
    if (r >= u.rows()) throw IndexError("input mode " + std::to_string(r) + " out of range");
  for (auto s : output_modes)
    if (s >= u.cols()) throw IndexError("output mode " + std::to_string(s) + " out of range");

  const std::size_t n = input_modes.size();
  ComplexMatrix sub(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) sub(a, b) = u(input_modes[a], output_modes[b]);
  return sub;
}

}  // namespace qtc
