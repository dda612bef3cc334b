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
#include "thermoent/quantum.hpp"

using namespace thermoent;
using namespace thermoent::testing;

namespace {

const XYZCouplings kCouplings[] = {{1, 1, 1}, {3, 1, 1}, {3, 2, 1}};

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("xyz hamiltonian is diagonal in the bell basis") {
  const XYZCouplings c{0.7, -1.3, 2.1};
  const HermitianOperator h = build_xyz(c);
  const double expected[] = {c.x - c.y + c.z, -c.x + c.y + c.z, c.x + c.y - c.z,
                             -c.x - c.y - c.z};
  const BellState states[] = {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus,
                              BellState::PsiMinus};
  for (int k = 0; k < 4; ++k) {
    const ComplexVector v = bell_vector(states[k]);
    CHECK((h.matrix() * v - expected[k] * v).norm() < 1e-14);
  }
}

TEST_CASE("gibbs state commutes with H and has boltzmann weights") {
  Rng rng(21);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (const auto& c : kCouplings) {
    const HermitianOperator h = build_xyz(c);
    for (int rep = 0; rep < 20; ++rep) {
      const double beta = u(rng);
      const DensityMatrix rho = gibbs_state(h, InverseTemperature(beta));
      const ComplexMatrix comm = rho.matrix() * h.matrix() - h.matrix() * rho.matrix();
      CHECK(comm.norm() <= 1e-10);

      const RealVector e = eig_hermitian(h).eigenvalues;
      RealVector w = (-beta * (e.array() - e.minCoeff())).exp();
      w /= w.sum();
      RealVector p = eig_hermitian(rho.op()).eigenvalues;
      std::sort(w.data(), w.data() + w.size());
      CHECK((p - w).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("gibbs state survives large beta without overflow") {
  const DensityMatrix rho = gibbs_state(build_xyz({1, 1, 1}), InverseTemperature(500.0));
  const DensityMatrix singlet = bell_state(BellState::PsiMinus);
  CHECK(frob_dist(rho.op(), singlet.op()) < 1e-12);
}

TEST_CASE("infinite temperature limit") {
  for (const auto& c : kCouplings) {
    const DensityMatrix rho = gibbs_state(build_xyz(c), InverseTemperature(1e-6));
    CHECK(frob_dist(rho.op(), HermitianOperator::identity(4) * 0.25) < 1e-5);
    const DensityMatrix zero = gibbs_state(build_xyz(c), InverseTemperature(0.0));
    CHECK(frob_dist(zero.op(), HermitianOperator::identity(4) * 0.25) < 1e-15);
  }
}

TEST_CASE("partial transpose is an involution preserving trace and hermiticity") {
  Rng rng(22);
  for (int rep = 0; rep < 50; ++rep) {
    const DensityMatrix rho = random_two_qubit(rng);
    for (int sub : {0, 1}) {
      const HermitianOperator pt = partial_transpose(rho, sub);
      CHECK(pt.trace() == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(max_asymmetry(pt.matrix()) == 0.0);
      CHECK(partial_transpose(pt, {2, 2}, sub).matrix() == rho.matrix());
    }
    // Transposing A and B together is the full transpose.
    const HermitianOperator both = partial_transpose(rho.op(), {2, 2}, std::vector<int>{0, 1});
    CHECK((both.matrix() - rho.matrix().transpose()).norm() == 0.0);
  }
}

TEST_CASE("partial transpose of a 2x3 state") {
  Rng rng(23);
  const DensityMatrix rho = random_state({2, 3}, rng);
  const HermitianOperator pt = partial_transpose(rho, 0);
  // <a b| rho^{T_A} |a' b'> = <a' b| rho |a b'>
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 3; ++b2)
          CHECK(pt(a * 3 + b, a2 * 3 + b2) == rho.matrix()(a2 * 3 + b, a * 3 + b2));
  CHECK_THROWS_AS(partial_transpose(rho, 2), std::out_of_range);
}

TEST_CASE("density matrix validation") {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4) * 0.3;
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator(m), {2, 2}), InvalidStateError);
  m = ComplexMatrix::Zero(4, 4);
  m(0, 0) = 1.2;
  m(1, 1) = -0.2;
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator(m), {2, 2}), InvalidStateError);
  CHECK_THROWS_AS(DensityMatrix(HermitianOperator::identity(4) * 0.25, {2, 3}),
                  InvalidStateError);
  CHECK_NOTHROW(DensityMatrix(HermitianOperator::identity(4) * 0.25, {4}));
  CHECK_THROWS_AS(InverseTemperature(-1.0), std::invalid_argument);
  CHECK(InverseTemperature(0.25).temperature() == 4.0);
}

TEST_CASE("bell states, populations and mixtures") {
  CHECK(bell_populations(bell_state(BellState::PsiPlus))[2] == doctest::Approx(1.0));
  const std::array<double, 4> p{0.1, 0.2, 0.3, 0.4};
  const auto back = bell_populations(bell_diagonal_state(p));
  for (int k = 0; k < 4; ++k) CHECK(back[k] == doctest::Approx(p[k]).epsilon(1e-14));

  const DensityMatrix mixed = DensityMatrix::mix(bell_state(BellState::PhiPlus),
                                                 DensityMatrix::maximally_mixed({2, 2}), 0.8);
  CHECK(bell_populations(mixed)[0] == doctest::Approx(0.85));
  CHECK(bell_populations(mixed)[3] == doctest::Approx(0.05));
  CHECK_THROWS_AS(DensityMatrix::mix(mixed, mixed, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(DensityMatrix::mix(mixed, DensityMatrix::maximally_mixed({4}), 0.5),
                  InvalidStateError);
}

TEST_CASE("partial trace of bell and ghz states is maximally mixed") {
  const DensityMatrix a = partial_trace(bell_state(BellState::PhiMinus), {0});
  CHECK(frob_dist(a.op(), HermitianOperator::identity(2) * 0.5) < 1e-15);

  const DensityMatrix ghz = ghz_state(3);
  CHECK(ghz.dim() == 8);
  CHECK(std::abs(ghz.matrix()(0, 7) - 0.5) < 1e-15);
  const DensityMatrix ab = partial_trace(ghz, {0, 1});
  CHECK(std::abs(ab.matrix()(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(ab.matrix()(3, 3) - 0.5) < 1e-15);
  CHECK(ab.matrix()(0, 3) == Complex(0.0));
  CHECK_THROWS_AS(ghz_state(5), DimensionError);
}

}  // TEST_SUITE
