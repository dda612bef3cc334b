// Copyright 2026 The thermoent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "support.hpp"
#include "thermoent/quantifiers.hpp"
#include "thermoent/witness.hpp"

using namespace thermoent;
using namespace thermoent::testing;

namespace {

double expectation(const HermitianOperator& w, const DensityMatrix& rho) {
  return (w.matrix() * rho.matrix()).trace().real();
}

DensityMatrix noisy(BellState b, double noise) {
  return DensityMatrix::mix(bell_state(b), DensityMatrix::maximally_mixed({2, 2}),
                            1.0 - noise);
}

}  // namespace

TEST_SUITE("witness") {

TEST_CASE("maximally entangled state") {
  const DensityMatrix rho = bell_state(BellState::PhiPlus);
  const EwResult r = witnessed_entanglement(rho);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.duality_gap <= 1e-6);
  CHECK(r.exact);
  CHECK(expectation(r.witness.op, rho) == doctest::Approx(-1.0).epsilon(1e-6));
  // W <= I.
  CHECK(eig_hermitian(r.witness.op).max() <= 1.0 + 1e-9);
  // Non-negative on separable states.
  CHECK(witness_product_minimum(r.witness, {2, 2}, {{0}}, 2000, 7) >= -1e-9);
  CHECK(extract_optimal_witness(r).op.matrix() == r.witness.op.matrix());
}

TEST_CASE("separable inputs give zero") {
  const EwResult mm = witnessed_entanglement(DensityMatrix::maximally_mixed({2, 2}));
  CHECK(mm.value == 0.0);
  CHECK(mm.duality_gap == 0.0);
  Rng rng(41);
  int ppt = 0;
  for (int rep = 0; rep < 400 && ppt < 50; ++rep) {
    const DensityMatrix rho = random_two_qubit(rng);
    if (negativity(rho) > 0.0) continue;
    ++ppt;
    CHECK(witnessed_entanglement(rho).value == 0.0);
  }
  CHECK(ppt == 50);
}

TEST_CASE("bell-diagonal states: E_W equals concurrence") {
  Rng rng(42);
  for (int rep = 0; rep < 30; ++rep) {
    const DensityMatrix rho = bell_diagonal_state(random_populations(rng));
    const EwResult r = witnessed_entanglement(rho);
    CHECK(std::abs(r.value - concurrence(rho)) <= 1e-6);
  }
}

TEST_CASE("certificates on random entangled states") {
  Rng rng(43);
  int entangled = 0;
  for (int rep = 0; rep < 200 && entangled < 60; ++rep) {
    const DensityMatrix rho = random_two_qubit(rng);
    const EwResult r = witnessed_entanglement(rho);
    CHECK(r.duality_gap <= 1e-6);
    CHECK((r.value > 0.0) == (negativity(rho) > 0.0));
    if (r.value > 0.0) {
      ++entangled;
      CHECK(expectation(r.witness.op, rho) == doctest::Approx(-r.value).epsilon(1e-6));
      CHECK(eig_hermitian(r.witness.op).max() <= 1.0 + 1e-9);
    }
  }
  CHECK(entangled >= 20);
}

TEST_CASE("convexity along mixtures") {
  Rng rng(44);
  for (int rep = 0; rep < 8; ++rep) {
    const DensityMatrix a = random_state({2, 2}, rng, 1);
    const DensityMatrix b = random_state({2, 2}, rng, 1);
    const double ea = witnessed_entanglement(a).value;
    const double eb = witnessed_entanglement(b).value;
    for (double l = 0.0; l <= 1.0001; l += 0.125) {
      const double em = witnessed_entanglement(DensityMatrix::mix(a, b, l)).value;
      CHECK(em <= l * ea + (1.0 - l) * eb + 1e-6);
    }
  }
}

TEST_CASE("frozen witness is affine and a lower bound") {
  Rng rng(45);
  const DensityMatrix rho0 = random_state({2, 2}, rng, 1);
  const EwResult r0 = witnessed_entanglement(rho0);
  REQUIRE(r0.value > 0.0);
  const HermitianOperator& w = r0.witness.op;
  for (int rep = 0; rep < 20; ++rep) {
    const DensityMatrix a = random_two_qubit(rng);
    const DensityMatrix b = random_two_qubit(rng);
    const double l = 0.3;
    const double lhs = -expectation(w, DensityMatrix::mix(a, b, l));
    const double rhs = -l * expectation(w, a) - (1.0 - l) * expectation(w, b);
    CHECK(std::abs(lhs - rhs) < 1e-14);
    CHECK(witnessed_entanglement(a).value >= -expectation(w, a) - 1e-7);
  }
}

TEST_CASE("monotone under depolarization") {
  Rng rng(46);
  for (int rep = 0; rep < 5; ++rep) {
    const DensityMatrix rho = random_state({2, 2}, rng, 1);
    const DensityMatrix mm = DensityMatrix::maximally_mixed({2, 2});
    double prev = witnessed_entanglement(rho).value;
    for (double p = 0.05; p <= 1.0001; p += 0.05) {
      const double v = witnessed_entanglement(DensityMatrix::mix(mm, rho, std::min(p, 1.0))).value;
      CHECK(v <= prev + 1e-7);
      prev = v;
    }
    CHECK(prev == 0.0);
  }
}

TEST_CASE("multipartite cuts") {
  const BipartitionScan ghz = ew_bipartition_scan(ghz_state(3), all_bipartitions(3));
  REQUIRE(ghz.per_cut.size() == 3);
  for (const auto& r : ghz.per_cut) CHECK(r.value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(ghz.minimum == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(ghz.exact);  // 2 x 4 cuts are beyond the exact PPT regime

  // |Phi+> (x) |0>: entangled across {0}|{1,2}, not across {2}|{0,1}.
  ComplexVector psi = ComplexVector::Zero(8);
  psi(0) = psi(6) = 1.0 / std::sqrt(2.0);
  const DensityMatrix rho = DensityMatrix::pure(psi, {2, 2, 2});
  CHECK(witnessed_entanglement(rho, {{0}}).value == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(witnessed_entanglement(rho, {{2}}).value == doctest::Approx(0.0));
}

TEST_CASE("qubit-qutrit results are exact") {
  Rng rng(47);
  const DensityMatrix rho = random_state({2, 3}, rng, 1);
  const EwResult r = witnessed_entanglement(rho);
  CHECK(r.exact);
  CHECK(r.value > 0.0);
  CHECK(r.duality_gap <= 1e-6);
  CHECK(witness_product_minimum(r.witness, {2, 3}, {{0}}, 2000, 9) >= -1e-8);
}

TEST_CASE("bipartition enumeration and validation") {
  CHECK(all_bipartitions(2).size() == 1);
  CHECK(all_bipartitions(3).size() == 3);
  CHECK(all_bipartitions(4).size() == 7);
  CHECK_THROWS_AS(validate_cut({{}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_cut({{0, 1}}, 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_cut({{0, 0}}, 3), std::invalid_argument);
  CHECK_THROWS_AS(validate_cut({{3}}, 3), std::out_of_range);
}

TEST_CASE("corner-crossing path raises exactly one flag") {
  const DensityMatrix a = noisy(BellState::PhiPlus, 0.2);
  const DensityMatrix b = noisy(BellState::PsiMinus, 0.2);
  const PathReport rep = track_witness_path(linear_mix_path(a, b, 0.0, 1.0, 101));
  CHECK(rep.complete);
  REQUIRE(rep.flags.size() == 1);
  // Psi- population 0.8 t + 0.05 first exceeds 1/2 for t > 0.5625.
  CHECK(rep.points[rep.flags[0]].t == doctest::Approx(0.57));
  CHECK(rep.points[rep.flags[0]].witness_jump > 0.5);
}

TEST_CASE("no flags on smooth or separable paths") {
  const PathReport g = track_witness_path(gibbs_path({1, 1, 1}, 0.05, 2.0, 101));
  CHECK(g.flags.empty());
  REQUIRE(g.kinks.size() == 1);
  CHECK(std::abs(g.points[g.kinks[0]].t - std::log(3.0) / 4.0) < 0.02);

  const DensityMatrix mm = DensityMatrix::maximally_mixed({2, 2});
  const PathReport c = track_witness_path(linear_mix_path(mm, mm, 0.0, 1.0, 21));
  CHECK(c.flags.empty());
  CHECK(c.kinks.empty());
  for (const auto& p : c.points) CHECK(p.value == 0.0);
}

TEST_CASE("abrupt paths do not raise flags") {
  // Consecutive states too far apart for the smoothness bound.
  const DensityMatrix a = bell_state(BellState::PhiPlus);
  const DensityMatrix b = bell_state(BellState::PsiMinus);
  const PathReport rep = track_witness_path(linear_mix_path(a, b, 0.0, 1.0, 3));
  CHECK(rep.flags.empty());
}

}  // TEST_SUITE
