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

#include <array>
#include <stdexcept>
#include <vector>

#include "thermoent/linalg.hpp"

namespace thermoent {

class InvalidStateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class PauliAxis { X, Y, Z };

/// Couplings of H = x XX + y YY + z ZZ; energies in units with k_B = 1.
struct XYZCouplings {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// beta = 1/T, finite and non-negative. beta == 0 is infinite temperature.
class InverseTemperature {
 public:
  explicit InverseTemperature(double beta);
  double value() const noexcept { return beta_; }
  double temperature() const noexcept;

 private:
  double beta_;
};

inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-9;

/// Unit-trace positive semidefinite operator on a tensor product space.
/// Factor ordering is big-endian: subsystem 0 owns the most significant
/// index block.
class DensityMatrix {
 public:
  /// Throws InvalidStateError on trace, positivity or dims violations.
  DensityMatrix(HermitianOperator op, std::vector<int> subsystem_dims);

  /// Two-qubit convenience constructor.
  explicit DensityMatrix(HermitianOperator op);

  const HermitianOperator& op() const noexcept { return op_; }
  const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
  const std::vector<int>& subsystem_dims() const noexcept { return dims_; }
  int dim() const noexcept { return op_.dim(); }
  int num_subsystems() const noexcept { return static_cast<int>(dims_.size()); }
  bool is_two_qubit() const noexcept {
    return dims_.size() == 2 && dims_[0] == 2 && dims_[1] == 2;
  }

  /// |psi><psi| of a (not necessarily normalized) vector.
  static DensityMatrix pure(const ComplexVector& psi, std::vector<int> dims);
  static DensityMatrix maximally_mixed(std::vector<int> dims);

  /// lambda a + (1 - lambda) b.
  static DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b,
                           double lambda);

 private:
  HermitianOperator op_;
  std::vector<int> dims_;
};

HermitianOperator pauli(PauliAxis axis);

/// x XX + y YY + z ZZ on two qubits.
HermitianOperator build_xyz(const XYZCouplings& c);

/// exp(-beta H)/Z, evaluated as exp(-beta (H - lambda_min)) / Z' so that
/// beta up to several hundred stays finite.
DensityMatrix gibbs_state(const HermitianOperator& h, InverseTemperature beta,
                          std::vector<int> subsystem_dims);
DensityMatrix gibbs_state(const HermitianOperator& h, InverseTemperature beta);

/// Transpose on one tensor factor; the result is Hermitian with unit trace
/// but in general not positive.
HermitianOperator partial_transpose(const HermitianOperator& op,
                                    const std::vector<int>& dims,
                                    int subsystem_index);
HermitianOperator partial_transpose(const DensityMatrix& rho,
                                    int subsystem_index = 0);

/// Transpose on every factor listed in `subsystems`.
HermitianOperator partial_transpose(const HermitianOperator& op,
                                    const std::vector<int>& dims,
                                    const std::vector<int>& subsystems);

/// Reduced state on the subsystems in `keep` (kept in ascending order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<int> keep);

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

/// (|00> + |11>)/sqrt2, (|00> - |11>)/sqrt2, (|01> + |10>)/sqrt2,
/// (|01> - |10>)/sqrt2.
ComplexVector bell_vector(BellState which);
DensityMatrix bell_state(BellState which);

/// <B|rho|B> for B in (Phi+, Phi-, Psi+, Psi-).
std::array<double, 4> bell_populations(const DensityMatrix& rho);

/// Bell-diagonal state with the given populations in (Phi+, Phi-, Psi+, Psi-)
/// order.
DensityMatrix bell_diagonal_state(const std::array<double, 4>& populations);

/// (|0...0> + |1...1>)/sqrt2 on n qubits.
DensityMatrix ghz_state(int num_qubits);

}  // namespace thermoent
