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

#include "qtc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qtc/errors.hpp"

namespace qtc {

PermutationTable::PermutationTable(std::size_t n) : n_(n) {
  if (n == 0 || n > 10) throw DomainError("permutation table degree out of range");
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  do {
    images_.insert(images_.end(), p.begin(), p.end());
    int inversions = 0;
    std::size_t moved = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] != i) ++moved;
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    }
    signs_.push_back(inversions % 2 ? -1 : 1);
    moved_.push_back(moved);
  } while (std::next_permutation(p.begin(), p.end()));
}

void validate(const EventSpec& spec) {
  const auto& u = spec.unitary;
  if (!u.is_square() || u.rows() == 0) throw SpecError("unitary must be square and non-empty");
  const std::size_t m = u.rows();
  const std::size_t n = spec.input.size();
  if (n == 0) throw SpecError("event has no particles");
  if (spec.output.modes() != m)
    throw SpecError("output occupation has " + std::to_string(spec.output.modes()) + " modes, unitary has " +
                    std::to_string(m));
  if (static_cast<std::size_t>(spec.output.particles()) != n)
    throw SpecError("output holds " + std::to_string(spec.output.particles()) + " particles, input holds " +
                    std::to_string(n));
  if (spec.gram.size() != n) throw SpecError("Gram matrix size does not match particle number");
  for (auto r : spec.input.modes())
    if (r >= m) throw IndexError("input mode " + std::to_string(r) + " out of range");
}

double clamp_probability(double p) {
  if (!std::isfinite(p) || p < -kProbabilitySlack || p > 1.0 + kProbabilitySlack)
    throw ConsistencyError("probability " + std::to_string(p) + " outside [0,1]");
  return std::clamp(p, 0.0, 1.0);
}

namespace {

// Norm of the input state prod_i a^dag_{r_i}(v_i)|0>: only permutations that
// map each particle onto one sharing its mode contribute. Equal to 1 for
// distinct input modes.
double input_norm(const AssignmentList& input, const GramMatrix& gram, Statistics stats,
                  const PermutationTable& table) {
  const std::size_t n = input.size();
  Complex norm{};
  for (std::size_t p = 0; p < table.count(); ++p) {
    const auto* pi = table[p];
    Complex term{stats == Statistics::Fermion ? double(table.sign(p)) : 1.0, 0.0};
    for (std::size_t k = 0; k < n && term != Complex{}; ++k)
      term = input[k] == input[pi[k]] ? term * gram(k, pi[k]) : Complex{};
    norm += term;
  }
  return norm.real();
}

// Contribution of one sigma, summed over every relative permutation pi with
// rho = sigma o pi, bucketed by the number of points pi moves.
void accumulate_sigma(std::size_t sigma_index, const PermutationTable& table, const ComplexMatrix& paths,
                      const GramMatrix& gram, Statistics stats, Complex* buckets) {
  const std::size_t n = table.degree();
  const auto* sigma = table[sigma_index];
  Complex left[kMaxGeneralParticles];
  for (std::size_t k = 0; k < n; ++k) left[k] = std::conj(paths(sigma[k], k));

  for (std::size_t p = 0; p < table.count(); ++p) {
    const auto* pi = table[p];
    Complex term{1.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t rho_k = sigma[pi[k]];
      term *= gram(sigma[k], rho_k) * left[k] * paths(rho_k, k);
    }
    // eps(sigma) eps(rho) = sgn(pi) for fermions.
    if (stats == Statistics::Fermion && table.sign(p) < 0) term = -term;
    buckets[table.moved(p)] += term;
  }
}

}  // namespace

std::vector<double> order_contributions(const EventSpec& spec, Execution exec) {
  validate(spec);
  const std::size_t n = spec.input.size();
  if (n > kMaxGeneralParticles)
    throw ResourceError("general path supports N <= " + std::to_string(kMaxGeneralParticles));

  const PermutationTable table(n);
  const double norm = input_norm(spec.input, spec.gram, spec.statistics, table);
  if (norm <= 1e-12) throw SpecError("input state vanishes (Pauli exclusion)");

  const AssignmentList output = occupation_to_assignment(spec.output);
  // paths(i, k): amplitude for particle i to reach output slot k.
  const ComplexMatrix paths = scattering_submatrix(spec.unitary, spec.input, output);

  const std::size_t buckets = n + 1;
  const auto sigmas = static_cast<std::ptrdiff_t>(table.count());
  std::vector<Complex> partial(table.count() * buckets, Complex{});

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static) if (sigmas >= 24)
    for (std::ptrdiff_t s = 0; s < sigmas; ++s)
      accumulate_sigma(static_cast<std::size_t>(s), table, paths, spec.gram, spec.statistics,
                       partial.data() + static_cast<std::size_t>(s) * buckets);
  } else {
    for (std::ptrdiff_t s = 0; s < sigmas; ++s)
      accumulate_sigma(static_cast<std::size_t>(s), table, paths, spec.gram, spec.statistics,
                       partial.data() + static_cast<std::size_t>(s) * buckets);
  }

  std::vector<Complex> totals(buckets, Complex{});
  for (std::size_t s = 0; s < table.count(); ++s)
    for (std::size_t d = 0; d < buckets; ++d) totals[d] += partial[s * buckets + d];

  const double denom = spec.output.factorial_product() * norm;
  std::vector<double> out(buckets);
  for (std::size_t d = 0; d < buckets; ++d) {
    if (std::abs(totals[d].imag()) > kImaginaryTolerance)
      throw ConsistencyError("order " + std::to_string(d) + " sum has imaginary part " +
                             std::to_string(totals[d].imag()));
    out[d] = totals[d].real() / denom;
  }
  return out;
}

double event_probability(const EventSpec& spec, Execution exec) {
  const auto orders = order_contributions(spec, exec);
  double total = 0.0;
  for (double c : orders) total += c;
  return clamp_probability(total);
}

namespace {

void check_fast_path(const ComplexMatrix& unitary, const AssignmentList& input, const OccupationVector& output) {
  if (!unitary.is_square() || unitary.rows() == 0) throw SpecError("unitary must be square and non-empty");
  if (output.modes() != unitary.rows()) throw SpecError("output occupation does not match mode count");
  if (static_cast<std::size_t>(output.particles()) != input.size())
    throw SpecError("input and output particle numbers differ");
  if (input.size() == 0) throw SpecError("event has no particles");
  if (input.size() > kMaxFastPathParticles)
    throw ResourceError("fast path supports N <= " + std::to_string(kMaxFastPathParticles));
}

double input_factorials(const AssignmentList& input) {
  double prod = 1.0;
  std::size_t run = 1;
  for (std::size_t k = 1; k <= input.size(); ++k) {
    if (k < input.size() && input[k] == input[k - 1]) {
      prod *= static_cast<double>(++run);
    } else {
      run = 1;
    }
  }
  return prod;
}

}  // namespace

double quantum_probability(const ComplexMatrix& unitary, const AssignmentList& input,
                           const OccupationVector& output, Statistics statistics) {
  check_fast_path(unitary, input, output);
  const ComplexMatrix sub = scattering_submatrix(unitary, input, occupation_to_assignment(output));
  if (statistics == Statistics::Fermion) {
    if (!input.all_distinct()) throw SpecError("input state vanishes (Pauli exclusion)");
    return clamp_probability(std::norm(determinant(sub)));
  }
  return clamp_probability(std::norm(permanent(sub)) / (output.factorial_product() * input_factorials(input)));
}

double classical_probability(const ComplexMatrix& unitary, const AssignmentList& input,
                             const OccupationVector& output) {
  check_fast_path(unitary, input, output);
  ComplexMatrix weights = scattering_submatrix(unitary, input, occupation_to_assignment(output));
  for (std::size_t i = 0; i < weights.rows(); ++i)
    for (std::size_t j = 0; j < weights.cols(); ++j) weights(i, j) = std::norm(weights(i, j));
  return clamp_probability(permanent(weights).real() / output.factorial_product());
}

Distribution full_distribution(const ComplexMatrix& unitary, const AssignmentList& input, const GramMatrix& gram,
                               Statistics statistics, Execution exec) {
  if (input.size() > kMaxDistributionParticles || unitary.rows() > kMaxDistributionModes)
    throw ResourceError("full distribution supports N <= " + std::to_string(kMaxDistributionParticles) +
                        " and m <= " + std::to_string(kMaxDistributionModes));
  const auto events = enumerate_events(unitary.rows(), static_cast<int>(input.size()));
  std::vector<double> probs(events.size(), 0.0);

  auto evaluate = [&](std::size_t e) {
    const EventSpec spec{unitary, input, events[e], gram, statistics};
    probs[e] = event_probability(spec, Execution::Serial);
  };
  // Validate once up front so worker threads never throw.
  validate(EventSpec{unitary, input, events.front(), gram, statistics});

  const auto count = static_cast<std::ptrdiff_t>(events.size());
  if (exec == Execution::Parallel) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t e = 0; e < count; ++e) {
      try {
        evaluate(static_cast<std::size_t>(e));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else {
    for (std::ptrdiff_t e = 0; e < count; ++e) evaluate(static_cast<std::size_t>(e));
  }

  Distribution out;
  out.reserve(events.size());
  for (std::size_t e = 0; e < events.size(); ++e) out.emplace_back(events[e], probs[e]);
  return out;
}

}  // namespace qtc
