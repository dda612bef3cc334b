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

#pragma once

// Seeded random instances shared by the unit and acceptance tests.

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "thermoent/quantum.hpp"

namespace thermoent::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix ginibre(int n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

inline HermitianOperator random_hermitian(int n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  return HermitianOperator::symmetrized(0.5 * (g + g.adjoint()));
}

// Haar unitary from the QR of a Ginibre matrix with phase-fixed R diagonal.
inline ComplexMatrix random_unitary(int n, Rng& rng) {
  const Eigen::HouseholderQR<ComplexMatrix> qr(ginibre(n, rng));
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

// Hilbert-Schmidt random state of full rank, or rank `rank` when given.
inline DensityMatrix random_state(std::vector<int> dims, Rng& rng, int rank = 0) {
  int n = 1;
  for (int d : dims) n *= d;
  std::normal_distribution<double> g(0.0, 1.0);
  ComplexMatrix a(n, rank > 0 ? rank : n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
  ComplexMatrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(HermitianOperator::symmetrized(rho), std::move(dims));
}

inline DensityMatrix random_two_qubit(Rng& rng) { return random_state({2, 2}, rng); }

// Uniform point on the probability simplex.
inline std::array<double, 4> random_populations(Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  std::array<double, 4> p{};
  double s = 0.0;
  for (double& v : p) s += (v = e(rng));
  for (double& v : p) v /= s;
  return p;
}

inline DensityMatrix rotate(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix(HermitianOperator::symmetrized(u * rho.matrix() * u.adjoint()),
                       rho.subsystem_dims());
}

// Minimum eigenvalue via Eigen's own solver, used as an independent check.
inline double eigen_min(const ComplexMatrix& m) {
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

}  // namespace thermoent::testing
