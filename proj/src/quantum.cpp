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

#include "thermoent/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace thermoent {

namespace {

int product(const std::vector<int>& dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

/// Splits a flat index into per-factor digits (big-endian).
void unflatten(int index, const std::vector<int>& dims, std::vector<int>& digits) {
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    digits[k] = index % dims[k];
    index /= dims[k];
  }
}

int flatten(const std::vector<int>& digits, const std::vector<int>& dims) {
  int index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + digits[k];
  return index;
}

void check_dims(const std::vector<int>& dims, int total) {
  if (dims.empty()) throw InvalidStateError("subsystem_dims must be non-empty");
  for (int d : dims) {
    if (d < 1) throw InvalidStateError("subsystem dimensions must be positive");
  }
  if (product(dims) != total) {
    std::ostringstream os;
    os << "product of subsystem_dims (" << product(dims)
       << ") does not match operator dimension " << total;
    throw InvalidStateError(os.str());
  }
}

}  // namespace

InverseTemperature::InverseTemperature(double beta) : beta_(beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("inverse temperature must be finite and >= 0");
  }
}

double InverseTemperature::temperature() const noexcept {
  return beta_ == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / beta_;
}

DensityMatrix::DensityMatrix(HermitianOperator op, std::vector<int> subsystem_dims)
    : op_(std::move(op)), dims_(std::move(subsystem_dims)) {
  check_dims(dims_, op_.dim());
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    std::ostringstream os;
    os << "density matrix trace " << tr << " differs from 1";
    throw InvalidStateError(os.str());
  }
  const double lmin = eig_hermitian(op_).min();
  if (lmin < -kPsdTolerance) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lmin;
    throw InvalidStateError(os.str());
  }
}

DensityMatrix::DensityMatrix(HermitianOperator op)
    : DensityMatrix(std::move(op), {2, 2}) {}

DensityMatrix DensityMatrix::pure(const ComplexVector& psi, std::vector<int> dims) {
  const double n = psi.norm();
  if (n == 0.0 || !std::isfinite(n)) throw InvalidStateError("zero state vector");
  const ComplexVector u = psi / n;
  return DensityMatrix(HermitianOperator::symmetrized(u * u.adjoint()),
                       std::move(dims));
}

DensityMatrix DensityMatrix::maximally_mixed(std::vector<int> dims) {
  const int d = product(dims);
  return DensityMatrix(HermitianOperator::identity(d) * (1.0 / d), std::move(dims));
}

DensityMatrix DensityMatrix::mix(const DensityMatrix& a, const DensityMatrix& b,
                                 double lambda) {
  if (a.subsystem_dims() != b.subsystem_dims()) {
    throw InvalidStateError("cannot mix states with different subsystem dims");
  }
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw std::invalid_argument("mixing weight must lie in [0, 1]");
  }
  return DensityMatrix(a.op() * lambda + b.op() * (1.0 - lambda),
                       a.subsystem_dims());
}

HermitianOperator pauli(PauliAxis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case PauliAxis::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case PauliAxis::Y:
      m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
      break;
    case PauliAxis::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
  }
  return HermitianOperator(m);
}

HermitianOperator build_xyz(const XYZCouplings& c) {
  if (!std::isfinite(c.x) || !std::isfinite(c.y) || !std::isfinite(c.z)) {
    throw std::invalid_argument("couplings must be finite");
  }
  const auto sx = pauli(PauliAxis::X);
  const auto sy = pauli(PauliAxis::Y);
  const auto sz = pauli(PauliAxis::Z);
  return kron(sx, sx) * c.x + kron(sy, sy) * c.y + kron(sz, sz) * c.z;
}

DensityMatrix gibbs_state(const HermitianOperator& h, InverseTemperature beta,
                          std::vector<int> subsystem_dims) {
  const Spectrum spec = eig_hermitian(h);
  const double b = beta.value();
  const double shift = spec.min();
  RealVector w = (-(spec.eigenvalues.array() - shift) * b).exp();
  w /= w.sum();
  return DensityMatrix(HermitianOperator::symmetrized(
                           spec.eigenvectors * w.asDiagonal() *
                           spec.eigenvectors.adjoint()),
                       std::move(subsystem_dims));
}

DensityMatrix gibbs_state(const HermitianOperator& h, InverseTemperature beta) {
  if (h.dim() != 4) {
    throw DimensionError("two-qubit gibbs_state requires a 4x4 Hamiltonian");
  }
  return gibbs_state(h, beta, {2, 2});
}

HermitianOperator partial_transpose(const HermitianOperator& op,
                                    const std::vector<int>& dims,
                                    const std::vector<int>& subsystems) {
  check_dims(dims, op.dim());
  std::vector<bool> flip(dims.size(), false);
  for (int s : subsystems) {
    if (s < 0 || s >= static_cast<int>(dims.size())) {
      std::ostringstream os;
      os << "subsystem index " << s << " out of range for " << dims.size()
         << " subsystems";
      throw std::out_of_range(os.str());
    }
    flip[s] = true;
  }
  const int n = op.dim();
  const ComplexMatrix& m = op.matrix();
  ComplexMatrix out(n, n);
  std::vector<int> r(dims.size()), c(dims.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      unflatten(i, dims, r);
      unflatten(j, dims, c);
      for (std::size_t k = 0; k < dims.size(); ++k)
        if (flip[k]) std::swap(r[k], c[k]);
      out(flatten(r, dims), flatten(c, dims)) = m(i, j);
    }
  }
  // Partial transposition maps Hermitian to Hermitian exactly (it permutes
  // entries), so no tolerance is involved.
  return HermitianOperator::symmetrized(out);
}

HermitianOperator partial_transpose(const HermitianOperator& op,
                                    const std::vector<int>& dims,
                                    int subsystem_index) {
  return partial_transpose(op, dims, std::vector<int>{subsystem_index});
}

HermitianOperator partial_transpose(const DensityMatrix& rho, int subsystem_index) {
  return partial_transpose(rho.op(), rho.subsystem_dims(), subsystem_index);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep) {
  const auto& dims = rho.subsystem_dims();
  const int ns = rho.num_subsystems();
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int k : keep) {
    if (k < 0 || k >= ns) throw std::out_of_range("partial_trace: invalid subsystem");
  }
  std::vector<int> kept_dims;
  for (int k : keep) kept_dims.push_back(dims[k]);
  std::vector<bool> is_kept(ns, false);
  for (int k : keep) is_kept[k] = true;

  const int dk = product(kept_dims);
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  const int n = rho.dim();
  std::vector<int> r(ns), c(ns), rk(keep.size()), ck(keep.size());
  for (int i = 0; i < n; ++i) {
    unflatten(i, dims, r);
    for (int j = 0; j < n; ++j) {
      unflatten(j, dims, c);
      bool traced_match = true;
      for (int k = 0; k < ns && traced_match; ++k)
        if (!is_kept[k] && r[k] != c[k]) traced_match = false;
      if (!traced_match) continue;
      for (std::size_t k = 0; k < keep.size(); ++k) {
        rk[k] = r[keep[k]];
        ck[k] = c[keep[k]];
      }
      out(flatten(rk, kept_dims), flatten(ck, kept_dims)) += rho.matrix()(i, j);
    }
  }
  return DensityMatrix(HermitianOperator::symmetrized(out), kept_dims);
}

ComplexVector bell_vector(BellState which) {
  const double h = 1.0 / std::sqrt(2.0);
  ComplexVector v = ComplexVector::Zero(4);
  switch (which) {
    case BellState::PhiPlus:
      v(0) = h;
      v(3) = h;
      break;
    case BellState::PhiMinus:
      v(0) = h;
      v(3) = -h;
      break;
    case BellState::PsiPlus:
      v(1) = h;
      v(2) = h;
      break;
    case BellState::PsiMinus:
      v(1) = h;
      v(2) = -h;
      break;
  }
  return v;
}

DensityMatrix bell_state(BellState which) {
  return DensityMatrix::pure(bell_vector(which), {2, 2});
}

std::array<double, 4> bell_populations(const DensityMatrix& rho) {
  if (!rho.is_two_qubit()) {
    throw DimensionError("bell_populations requires a two-qubit state");
  }
  std::array<double, 4> p{};
  constexpr BellState order[] = {BellState::PhiPlus, BellState::PhiMinus,
                                 BellState::PsiPlus, BellState::PsiMinus};
  for (int k = 0; k < 4; ++k) {
    const ComplexVector b = bell_vector(order[k]);
    p[k] = (b.adjoint() * rho.matrix() * b)(0, 0).real();
  }
  return p;
}

DensityMatrix bell_diagonal_state(const std::array<double, 4>& populations) {
  constexpr BellState order[] = {BellState::PhiPlus, BellState::PhiMinus,
                                 BellState::PsiPlus, BellState::PsiMinus};
  ComplexMatrix m = ComplexMatrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) {
    const ComplexVector b = bell_vector(order[k]);
    m += populations[k] * b * b.adjoint();
  }
  return DensityMatrix(HermitianOperator::symmetrized(m), {2, 2});
}

DensityMatrix ghz_state(int num_qubits) {
  if (num_qubits < 2 || (1 << num_qubits) > kMaxDim) {
    throw DimensionError("GHZ state supports 2 to 4 qubits");
  }
  const int d = 1 << num_qubits;
  ComplexVector v = ComplexVector::Zero(d);
  v(0) = 1.0;
  v(d - 1) = 1.0;
  return DensityMatrix::pure(v, std::vector<int>(num_qubits, 2));
}

}  // namespace thermoent
