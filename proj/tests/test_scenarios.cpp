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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qtc/decompose.hpp"
#include "qtc/engine.hpp"
#include "qtc/errors.hpp"
#include "qtc/scenarios.hpp"

using namespace qtc;

TEST_CASE("double slit") {
  CHECK(std::abs(double_slit(0.0, 1.0) - 1.0) <= 1e-15);
  CHECK(std::abs(double_slit(std::numbers::pi, 1.0)) <= 1e-15);
  for (double phi : {0.0, 0.4, 2.0, 3.0}) CHECK(std::abs(double_slit(phi, 0.0) - 0.5) <= 1e-15);
  CHECK(std::abs(double_slit(1.0, 0.3) - 0.5 * (1.0 + 0.3 * std::cos(1.0))) <= 1e-15);
  CHECK_THROWS_AS(double_slit(0.0, 1.5), DomainError);
}

TEST_CASE("HOM scan follows the closed form") {
  const auto xs = linspace(0.0, 5.0, 51);
  const auto curve = hom_scan(1.0, xs);
  REQUIRE(curve.samples.size() == xs.size());
  for (const auto& s : curve.samples)
    CHECK(std::abs(s.probability - (1.0 - std::exp(-s.parameter * s.parameter)) / 2.0) <= 1e-9);
  CHECK(curve.samples.front().probability <= 1e-15);

  const auto at_lc = hom_scan(2.0, {2.0}).samples.front().probability;
  CHECK(std::abs(at_lc - 0.31606027941427883) <= 1e-12);
  CHECK(std::abs(hom_scan(1.0, {10.0}).samples.front().probability - 0.5) <= 1e-9);
  CHECK_THROWS_AS(hom_scan(0.0, xs), DomainError);
  CHECK_THROWS_AS(hom_scan(1.0, {1.0, 0.5}), DomainError);
}

TEST_CASE("fermion Fourier scan") {
  const auto events = enumerate_events(9, 3);
  const auto curve = fermion_fourier_scan({0.0, kDistinguishableSeparation}, events);
  REQUIRE(curve.samples.size() == 2 * events.size());
  double allowed = 0.0;
  for (std::size_t e = 0; e < events.size(); ++e) {
    const auto& at_zero = curve.samples[e];
    const auto& far = curve.samples[events.size() + e];
    if (events[e].max_occupation() > 1) {
      CHECK(at_zero.probability <= 1e-12);
    } else {
      allowed += at_zero.probability;
      CHECK(std::abs(far.probability - 6.0 / 729.0) <= 1e-6);
    }
    if (events[e].max_occupation() == 3) CHECK(std::abs(far.probability - 1.0 / 729.0) <= 1e-6);
  }
  CHECK(std::abs(allowed - 1.0) <= 1e-9);
}

TEST_CASE("Fourier event probabilities are symmetric in the source positions") {
  // Inputs spaced by m/3 make every pair coefficient equal, so only symmetric
  // functions of the overlaps survive and relabelling sources changes nothing.
  const auto u = fourier_unitary(9);
  const AssignmentList input(kFourierInputModes);
  const std::vector<double> a{0.0, 0.7, 1.4};
  const std::vector<double> b{0.7, 1.4, 0.0};
  const std::vector<double> c{0.0, 1.4, 0.7};
  for (auto stats : {Statistics::Boson, Statistics::Fermion})
    for (const auto& e : single_occupancy_events(9, 3)) {
      const double pa = event_probability({u, input, e, gram_from_positions({a, 1.0}), stats});
      CHECK(std::abs(pa - event_probability({u, input, e, gram_from_positions({b, 1.0}), stats})) <= 1e-14);
      CHECK(std::abs(pa - event_probability({u, input, e, gram_from_positions({c, 1.0}), stats})) <= 1e-14);
    }
}

TEST_CASE("nonmonotonic events of the Fourier scans") {
  const auto xs = linspace(0.0, 5.0, kDefaultGridPoints);
  const auto events = single_occupancy_events(9, 3);
  const auto bosons = boson_fourier_scan(xs, events);
  CHECK(bosons.events().size() == 84);
  CHECK(bosons.parameters().size() == kDefaultGridPoints);
  CHECK(bosons.nonmonotonic_events().size() == 27);
  // Fermionic curves here are sums of overlap terms that all move one way.
  CHECK(fermion_fourier_scan(xs, events).nonmonotonic_events().empty());
}

TEST_CASE("boson Fourier scan") {
  const auto events = enumerate_events(9, 3);
  const auto far_b = boson_fourier_scan({kDistinguishableSeparation}, events);
  const auto far_f = fermion_fourier_scan({kDistinguishableSeparation}, events);
  const auto u = fourier_unitary(9);
  const AssignmentList input(kFourierInputModes);
  for (std::size_t e = 0; e < events.size(); ++e) {
    CHECK(std::abs(far_b.samples[e].probability - far_f.samples[e].probability) <= 1e-9);
    CHECK(std::abs(far_b.samples[e].probability - classical_probability(u, input, events[e])) <= 1e-9);
  }

  // Bunched event grows as the particles become indistinguishable.
  const OccupationVector bunched({3, 0, 0, 0, 0, 0, 0, 0, 0});
  const auto curve = boson_fourier_scan(linspace(0.0, 5.0, 101), {bunched});
  auto series = curve.series(bunched.label());
  std::reverse(series.begin(), series.end());  // x decreasing
  CHECK(is_non_decreasing(series));
  const double at_zero = series.back();
  CHECK(std::abs(at_zero - quantum_probability(u, input, bunched, Statistics::Boson)) <= 1e-12);
  // The submatrix columns are identical with |entries| = 1/3, so |perm|^2 / 3! = (3! |prod|)^2 / 3!.
  const Complex row_product = u(2, 0) * u(5, 0) * u(8, 0);
  CHECK(std::abs(at_zero - 36.0 * std::norm(row_product) / 6.0) <= 1e-12);
}

TEST_CASE("Bjork projection") {
  CHECK(std::abs(bjork_projection(0.0).probability - 0.14644660940672624) <= 1e-12);
  CHECK(std::abs(bjork_projection(std::numbers::pi / 4).probability) <= 1e-15);
  CHECK(std::abs(bjork_projection(std::numbers::pi / 2).probability - 0.14644660940672624) <= 1e-12);
  CHECK_THROWS_AS(bjork_projection(-0.1), DomainError);
  CHECK_THROWS_AS(bjork_projection(2.0), DomainError);

  const auto gammas = linspace(0.0, std::numbers::pi / 2, 101);
  std::vector<double> proj;
  for (double g : gammas) {
    const auto p = bjork_projection(g);
    proj.push_back(p.probability);
    CHECK(p.purity == 1.0);
    const double c = std::cos(3 * std::numbers::pi / 8 + g / 2);
    CHECK(std::abs(p.probability - c * c) <= 1e-12);
  }
  CHECK(has_interior_extremum(proj));
}

TEST_CASE("Bjork predictability") {
  CHECK(bjork_predictability(0.0) <= 1e-15);
  CHECK(std::abs(bjork_predictability(std::numbers::pi / 2) - 1.0) <= 1e-15);
  CHECK(std::abs(bjork_predictability(std::numbers::pi / 6) - 0.5) <= 1e-15);
  const auto curve = bjork_scan(linspace(0.0, std::numbers::pi / 2, 101));
  CHECK(is_non_decreasing(curve.series("predictability"), 0.0));
  CHECK(curve.nonmonotonic_events() == std::vector<std::string>{"projection"});
}

TEST_CASE("scans are identical under serial and parallel execution") {
  const auto xs = linspace(0.0, 5.0, 41);
  const auto events = single_occupancy_events(9, 3);
  const auto par = fermion_fourier_scan(xs, events, 1.0, Execution::Parallel);
  const auto ser = fermion_fourier_scan(xs, events, 1.0, Execution::Serial);
  REQUIRE(par.samples.size() == ser.samples.size());
  for (std::size_t i = 0; i < par.samples.size(); ++i) {
    CHECK(par.samples[i].probability == ser.samples[i].probability);
    CHECK(par.samples[i].event == ser.samples[i].event);
  }
}

TEST_CASE("linspace") {
  const auto g = linspace(0.0, 5.0, 201);
  CHECK(g.size() == 201);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == 5.0);
  CHECK(std::abs(g[1] - 0.025) <= 1e-15);
  CHECK_THROWS_AS(linspace(0.0, 1.0, 1), DomainError);
  CHECK_THROWS_AS(linspace(1.0, 1.0, 5), DomainError);
}
