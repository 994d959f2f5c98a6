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

#include "qtc/decompose.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <string>

#include "qtc/engine.hpp"
#include "qtc/errors.hpp"

namespace qtc {

std::size_t DecompositionResult::particles() const {
  return coefficients.empty() ? 0 : std::max<std::size_t>(1, coefficients.rbegin()->first);
}

DecompositionResult interference_orders(const ComplexMatrix& unitary, const AssignmentList& input,
                                        const OccupationVector& output, Statistics statistics) {
  const std::size_t n = input.size();
  if (n == 0) throw SpecError("event has no particles");
  // With every overlap equal to one each path pair contributes its bare
  // amplitude product, so the order buckets are exactly the C_d.
  const EventSpec spec{unitary, input, output, GramMatrix::ones(n), statistics};
  const auto orders = order_contributions(spec, Execution::Parallel);

  DecompositionResult result;
  if (orders.size() > 1 && orders[1] != 0.0) throw ConsistencyError("non-empty order-1 bucket");
  for (std::size_t d = 0; d < orders.size(); ++d) {
    if (d == 1) continue;
    result.coefficients[d] = orders[d];
    result.total_check += orders[d];
  }
  return result;
}

double transition_polynomial(const DecompositionResult& result, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  double total = 0.0;
  for (const auto& [d, c] : result.coefficients) total += std::pow(alpha, static_cast<double>(d)) * c;
  return clamp_probability(total);
}

double naive_interpolation(double p_classical, double p_quantum, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw DomainError("alpha must lie in [0,1]");
  auto in_range = [](double p) { return p >= -kProbabilitySlack && p <= 1.0 + kProbabilitySlack; };
  if (!in_range(p_classical) || !in_range(p_quantum)) throw DomainError("probabilities must lie in [0,1]");
  p_classical = std::clamp(p_classical, 0.0, 1.0);
  p_quantum = std::clamp(p_quantum, 0.0, 1.0);
  return (1.0 - alpha) * p_classical + alpha * p_quantum;
}

DecompositionResult fit_orders(std::span<const std::pair<double, double>> samples, std::size_t particles) {
  if (particles == 0) throw FitError("particle number must be positive");
  std::vector<double> alphas;
  for (const auto& [a, p] : samples) {
    if (!(a >= 0.0 && a <= 1.0)) throw DomainError("sample alpha outside [0,1]");
    alphas.push_back(a);
  }
  std::sort(alphas.begin(), alphas.end());
  const auto distinct = static_cast<std::size_t>(std::unique(alphas.begin(), alphas.end()) - alphas.begin());
  if (distinct < particles + 1)
    throw FitError("need at least " + std::to_string(particles + 1) + " distinct alpha samples, got " +
                   std::to_string(distinct));

  std::vector<std::size_t> orders{0};
  for (std::size_t d = 2; d <= particles; ++d) orders.push_back(d);

  const auto rows = static_cast<Eigen::Index>(samples.size());
  const auto cols = static_cast<Eigen::Index>(orders.size());
  Eigen::MatrixXd design(rows, cols);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto [a, p] = samples[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < cols; ++j)
      design(i, j) = std::pow(a, static_cast<double>(orders[static_cast<std::size_t>(j)]));
    rhs(i) = p;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < cols) throw FitError("sample set is rank deficient");
  const Eigen::VectorXd coeffs = qr.solve(rhs);

  DecompositionResult result;
  for (Eigen::Index j = 0; j < cols; ++j) {
    result.coefficients[orders[static_cast<std::size_t>(j)]] = coeffs(j);
    result.total_check += coeffs(j);
  }
  return result;
}

bool has_interior_extremum(std::span<const double> values, double noise_floor) {
  int last_sign = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    const double step = values[i] - values[i - 1];
    if (std::abs(step) <= noise_floor) continue;
    const int sign = step > 0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) return true;
    last_sign = sign;
  }
  return false;
}

bool is_non_decreasing(std::span<const double> values, double tolerance) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1] - tolerance) return false;
  return true;
}

}  // namespace qtc
