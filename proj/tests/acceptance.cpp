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

// Acceptance suite. One line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qtc/decompose.hpp"
#include "qtc/engine.hpp"
#include "qtc/oracle.hpp"
#include "qtc/scenarios.hpp"
#include "support/test_support.hpp"

using namespace qtc;
using qtc::testing::Generator;

namespace {

constexpr double kLimitTol = 1e-6;
constexpr double kPauliTol = 1e-12;
constexpr double kSumTol = 1e-9;
constexpr double kHomTol = 1e-9;
constexpr double kFermionHomTol = 1e-12;
constexpr double kProjectionTol = 1e-12;
constexpr double kPolynomialTol = 1e-10;
constexpr double kNaiveGap = 0.01;
constexpr double kCoefficientFloor = -1e-12;
constexpr double kOracleTol = 1e-9;

constexpr std::size_t kPolynomialInstances = 60;
constexpr std::size_t kBunchedInstances = 60;
constexpr std::size_t kOracleInstances = 120;

// Stored instance where the linear interpolation misses the polynomial.
constexpr std::uint64_t kNaiveSeed = 1;
constexpr std::size_t kNaiveModes = 3;
constexpr double kNaiveAlpha = 0.45;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

std::vector<OccupationVector> fourier_events() { return enumerate_events(kFourierModes, 3); }

double fourier_probability(const OccupationVector& e, double x, Statistics stats) {
  const auto gram = gram_from_positions({equally_delayed(3, x), 1.0});
  return event_probability({fourier_unitary(kFourierModes), AssignmentList(kFourierInputModes), e, gram, stats});
}

Outcome distinguishable_limit() {
  Outcome out;
  const double x = kDistinguishableSeparation;
  double worst_distinct = 0.0, worst_bunched = 0.0, worst_pair = 0.0;
  for (auto stats : {Statistics::Boson, Statistics::Fermion})
    for (const auto& e : fourier_events()) {
      const double p = fourier_probability(e, x, stats);
      switch (e.max_occupation()) {
        case 1: worst_distinct = std::max(worst_distinct, std::abs(p - 6.0 / 729.0)); break;
        case 2: worst_pair = std::max(worst_pair, std::abs(p - 3.0 / 729.0)); break;
        default: worst_bunched = std::max(worst_bunched, std::abs(p - 1.0 / 729.0)); break;
      }
    }
  out.pass = worst_distinct <= kLimitTol && worst_bunched <= kLimitTol && worst_pair <= kLimitTol;
  out.detail = fmt("max dev distinct %.2e, bunched %.2e, (2,1) vs 3/729 %.2e", worst_distinct, worst_bunched,
                   worst_pair);
  return out;
}

Outcome pauli_suppression() {
  Outcome out;
  double worst = 0.0, allowed = 0.0;
  for (const auto& e : fourier_events()) {
    const double p = fourier_probability(e, 0.0, Statistics::Fermion);
    if (e.max_occupation() > 1)
      worst = std::max(worst, p);
    else
      allowed += p;
  }
  out.pass = worst <= kPauliTol && std::abs(allowed - 1.0) <= kSumTol;
  out.detail = fmt("max forbidden %.2e, allowed sum - 1 = %.2e", worst, allowed - 1.0);
  return out;
}

Outcome fermion_nonmonotonic() {
  Outcome out;
  const auto curve =
      fermion_fourier_scan(linspace(0.0, kDefaultGridStop, kDefaultGridPoints), single_occupancy_events(9, 3));
  const auto found = curve.nonmonotonic_events();
  out.pass = !found.empty();
  out.detail = fmt("%zu of %zu single-occupancy events with an interior extremum", found.size(),
                   curve.events().size());
  if (!found.empty()) out.detail += " (first " + found.front() + ")";
  return out;
}

Outcome hom_transition() {
  Outcome out;
  const auto curve = hom_scan(1.0, linspace(0.0, kDefaultGridStop, kDefaultGridPoints));
  double worst = 0.0;
  for (const auto& s : curve.samples)
    worst = std::max(worst, std::abs(s.probability - (1.0 - std::exp(-s.parameter * s.parameter)) / 2.0));
  const double start = curve.samples.front().probability;
  const double far = hom_scan(1.0, {kDistinguishableSeparation}).samples.front().probability;
  const double fermion = hom_scan(1.0, {0.0}, Statistics::Fermion).samples.front().probability;
  out.pass = worst <= kHomTol && std::abs(start) <= kHomTol && std::abs(far - 0.5) <= kHomTol &&
             std::abs(fermion - 1.0) <= kFermionHomTol;
  out.detail = fmt("max dev %.2e, P(0) = %.3g, P(20) - 1/2 = %.2e, fermion P(0) - 1 = %.2e", worst, start,
                   far - 0.5, fermion - 1.0);
  return out;
}

Outcome pure_state_rotation() {
  Outcome out;
  const auto gammas = linspace(0.0, std::numbers::pi / 2, 101);
  const auto curve = bjork_scan(gammas);
  const auto proj = curve.series("projection");
  const auto purity = curve.series("purity");
  double worst = 0.0;
  bool pure = true;
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    const double c = std::cos(3 * std::numbers::pi / 8 + gammas[i] / 2);
    worst = std::max(worst, std::abs(proj[i] - c * c));
    pure = pure && purity[i] == 1.0;
  }
  const double middle = bjork_projection(std::numbers::pi / 4).probability;
  const bool shape = has_interior_extremum(proj) && std::abs(middle) <= kProjectionTol &&
                     std::abs(proj.front() - 0.146447) <= 1e-6 && std::abs(proj.back() - 0.146447) <= 1e-6;
  const auto pred = curve.series("predictability");
  const bool rising = is_non_decreasing(pred, 0.0) && pred.back() > pred.front();
  out.pass = worst <= kProjectionTol && shape && pure && rising;
  out.detail = fmt("max dev %.2e, P(pi/4) = %.1e, ends %.6f/%.6f, purity %s, predictability %s", worst, middle,
                   proj.front(), proj.back(), pure ? "exactly 1" : "not 1", rising ? "increasing" : "not increasing");
  return out;
}

Outcome polynomial_identity() {
  Outcome out;
  Generator gen(20240601);
  double worst = 0.0;
  bool c1_absent = true;
  for (std::size_t trial = 0; trial < kPolynomialInstances; ++trial) {
    const std::size_t n = gen.index(2, 4);
    const std::size_t m = gen.index(n, 6);
    const auto stats = trial % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto u = gen.unitary(m);
    const auto input = gen.distinct_modes(n, m);
    const auto output = gen.occupation(m, static_cast<int>(n));
    const auto dec = interference_orders(u, input, output, stats);
    c1_absent = c1_absent && dec.coefficients.count(1) == 0;
    worst = std::max(worst, std::abs(dec.coefficients.at(0) - classical_probability(u, input, output)));
    worst = std::max(worst, std::abs(dec.total_check - quantum_probability(u, input, output, stats)));
    for (int k = 0; k <= 10; ++k) {
      const double alpha = k / 10.0;
      const double direct = event_probability({u, input, output, uniform_gram(n, alpha), stats});
      worst = std::max(worst, std::abs(transition_polynomial(dec, alpha) - direct));
    }
  }
  out.pass = worst <= kPolynomialTol && c1_absent;
  out.detail = fmt("%zu instances, max dev %.2e, order-1 term %s", kPolynomialInstances, worst,
                   c1_absent ? "absent" : "PRESENT");
  return out;
}

Outcome naive_interpolation_fails() {
  Outcome out;
  const auto u = random_unitary(kNaiveModes, kNaiveSeed);
  const AssignmentList input({0, 1, 2});
  const OccupationVector event({1, 1, 1});
  const auto dec = interference_orders(u, input, event, Statistics::Boson);
  const double naive = naive_interpolation(classical_probability(u, input, event),
                                           quantum_probability(u, input, event, Statistics::Boson), kNaiveAlpha);
  const double gap = std::abs(naive - transition_polynomial(dec, kNaiveAlpha));

  Generator gen(77);
  std::size_t checked = 0, nonmonotonic = 0;
  for (std::size_t trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen.index(1, 2);
    const std::size_t m = gen.index(std::max<std::size_t>(n, 2), 6);
    const auto stats = trial % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto u2 = gen.unitary(m);
    const auto in2 = gen.distinct_modes(n, m);
    const auto d2 = interference_orders(u2, in2, gen.occupation(m, static_cast<int>(n)), stats);
    std::vector<double> curve;
    for (int k = 0; k <= 100; ++k) curve.push_back(transition_polynomial(d2, k / 100.0));
    ++checked;
    nonmonotonic += has_interior_extremum(curve);
  }
  out.pass = gap > kNaiveGap && nonmonotonic == 0;
  out.detail = fmt("seed %llu, m=%zu, event 1.1.1, alpha %.2f: gap %.4f; N<=2: %zu/%zu nonmonotonic",
                   static_cast<unsigned long long>(kNaiveSeed), kNaiveModes, kNaiveAlpha, gap, nonmonotonic, checked);
  return out;
}

Outcome bunched_monotonic() {
  Outcome out;
  Generator gen(4242);
  double lowest = std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  for (std::size_t trial = 0; trial < kBunchedInstances; ++trial) {
    const std::size_t m = gen.index(3, 7);
    const auto u = gen.unitary(m);
    const auto input = gen.distinct_modes(3, m);
    std::vector<int> counts(m, 0);
    counts[gen.index(0, m - 1)] = 3;
    const auto dec = interference_orders(u, input, OccupationVector(counts), Statistics::Boson);
    for (const auto& [d, c] : dec.coefficients) lowest = std::min(lowest, c);
    std::vector<double> curve;
    for (int k = 0; k <= 100; ++k) curve.push_back(transition_polynomial(dec, k / 100.0));
    failures += !is_non_decreasing(curve);
  }
  out.pass = lowest >= kCoefficientFloor && failures == 0;
  out.detail = fmt("%zu instances, min C_d %.2e, %zu non-monotone", kBunchedInstances, lowest, failures);
  return out;
}

Outcome oracle_equivalence() {
  Outcome out;
  Generator gen(9001);
  double worst = 0.0, worst_sum = 0.0;
  for (std::size_t trial = 0; trial < kOracleInstances; ++trial) {
    const std::size_t n = gen.index(1, 3);
    const std::size_t m = gen.index(std::max<std::size_t>(n, 2), 9);
    const auto stats = trial % 2 ? Statistics::Fermion : Statistics::Boson;
    const auto u = gen.unitary(m);
    const auto input = gen.distinct_modes(n, m);
    const auto gram = gram_from_positions({gen.positions(n, 2.0), gen.uniform(0.3, 2.0)});
    const auto internal = oracle::internal_vectors_from_gram(gram);
    const auto reference = oracle::first_quantized_distribution(u, input, internal, stats);
    const auto dist = full_distribution(u, input, gram, stats);
    if (dist.size() != reference.size()) {
      out.pass = false;
      out.detail = "distribution size mismatch";
      return out;
    }
    double total = 0.0;
    for (std::size_t e = 0; e < dist.size(); ++e) {
      worst = std::max(worst, std::abs(dist[e].second - reference[e]));
      total += dist[e].second;
    }
    worst_sum = std::max(worst_sum, std::abs(total - 1.0));
  }
  out.pass = worst <= kOracleTol && worst_sum <= kSumTol;
  out.detail = fmt("%zu instances, max dev %.2e, max |sum - 1| %.2e", kOracleInstances, worst, worst_sum);
  return out;
}

Outcome determinism() {
  Outcome out;
  const std::vector<std::string> args{"scenario", "fermion9", "--grid", "0:5:201", "--format", "json"};
  std::ostringstream first, second, err;
  const int a = cli::run(args, first, err);
  const int b = cli::run(args, second, err);
  out.pass = a == 0 && b == 0 && first.str() == second.str() && !first.str().empty();
  out.detail = fmt("exit codes %d/%d, %zu bytes, %s", a, b, first.str().size(),
                   first.str() == second.str() ? "identical" : "DIFFERENT");
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"distinguishable limit", distinguishable_limit},
      {"Pauli suppression", pauli_suppression},
      {"fermionic nonmonotonicity", fermion_nonmonotonic},
      {"HOM transition", hom_transition},
      {"pure-state rotation", pure_state_rotation},
      {"polynomial identity", polynomial_identity},
      {"linear interpolation fails for N>=3", naive_interpolation_fails},
      {"bunched monotonicity", bunched_monotonic},
      {"oracle equivalence", oracle_equivalence},
      {"determinism", determinism},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2zu %-36s %s [%.2fs]\n", r.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, r.detail.c_str(),
                secs);
    failed += !r.pass;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
