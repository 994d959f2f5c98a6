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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qtc {

using Complex = std::complex<double>;

/// Absolute tolerance for unitarity and "is zero" checks.
inline constexpr double kMatrixTolerance = 1e-12;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix constant(std::size_t rows, std::size_t cols, Complex value);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<const Complex> entries() const noexcept { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// Largest |a(i,j) - b(i,j)|; dimension error if shapes differ.
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);

/// Max-entry deviation of U†U from the identity.
double unitarity_defect(const ComplexMatrix& u);
bool is_unitary(const ComplexMatrix& u, double tol = kMatrixTolerance);

/// Permanent via Gray-code Ryser, O(2^n n). Supports 1 <= n <= 20.
Complex permanent(const ComplexMatrix& m);

/// Determinant via LU with partial pivoting. Exactly zero when two columns
/// are identical.
Complex determinant(const ComplexMatrix& m);

/// U[j,k] = exp(2 pi i j k / m) / sqrt(m).
ComplexMatrix fourier_unitary(std::size_t modes);

/// [[sqrt t, sqrt(1-t)], [sqrt(1-t), -sqrt t]].
ComplexMatrix beamsplitter(double transmissivity);

/// Haar-random unitary from Gram-Schmidt on a complex Gaussian matrix.
/// Deterministic for a given seed.
ComplexMatrix random_unitary(std::size_t modes, std::uint64_t seed);

/// result(a,b) = U(input_modes[a], output_modes[b]).
ComplexMatrix scattering_submatrix(const ComplexMatrix& u, std::span<const std::size_t> input_modes,
                                   std::span<const std::size_t> output_modes);

}  // namespace qtc
