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

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace thermoent {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Largest supported operator dimension (four qubits).
inline constexpr int kMaxDim = 16;

/// Elementwise tolerance on |A(i,j) - conj(A(j,i))| for Hermitian inputs.
inline constexpr double kHermitianTolerance = 1e-12;

class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(const std::string& what, double max_asymmetry)
      : std::invalid_argument(what), max_asymmetry_(max_asymmetry) {}
  double max_asymmetry() const noexcept { return max_asymmetry_; }

 private:
  double max_asymmetry_;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Dense self-adjoint operator on a space of dimension 1..16.
///
/// Construction checks Hermiticity to kHermitianTolerance and then stores the
/// exactly symmetrized matrix, so every downstream routine can rely on
/// A(i,j) == conj(A(j,i)) bit for bit.
class HermitianOperator {
 public:
  HermitianOperator() = default;

  /// Throws NotHermitianError (carrying the max asymmetry) or DimensionError.
  explicit HermitianOperator(const ComplexMatrix& m,
                             double tolerance = kHermitianTolerance);

  /// Symmetrizes without checking; for results of algebra that is Hermitian
  /// by construction (A X A, V D V^dagger, ...).
  static HermitianOperator symmetrized(const ComplexMatrix& m);

  static HermitianOperator identity(int dim);
  static HermitianOperator zero(int dim);

  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  double trace() const { return m_.trace().real(); }

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  struct Unchecked {};
  HermitianOperator(Unchecked, ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Eigendecomposition A = V diag(eigenvalues) V^dagger, eigenvalues ascending.
struct Spectrum {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;  // columns, same order as eigenvalues

  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }

  /// V f(diag) V^dagger for a real function applied to the eigenvalues.
  template <class F>
  HermitianOperator apply(F&& f) const {
    RealVector d = eigenvalues.unaryExpr(f);
    return HermitianOperator::symmetrized(eigenvectors * d.asDiagonal() *
                                          eigenvectors.adjoint());
  }
};

/// Largest |A(i,j) - conj(A(j,i))| over all entries.
double max_asymmetry(const ComplexMatrix& m);

/// Cyclic complex Jacobi rotations; sweeps until the largest off-diagonal
/// modulus drops below 1e-13 (relative to the Frobenius norm when that
/// exceeds one).
Spectrum eig_hermitian(const HermitianOperator& a);

/// Checked entry point for raw matrices; rejects non-Hermitian input with a
/// NotHermitianError reporting the max asymmetry.
Spectrum eig_hermitian(const ComplexMatrix& a);

/// V diag(exp(s * lambda_i)) V^dagger. Throws OverflowError when
/// s * lambda would leave the finite double range; callers that need large
/// arguments shift the spectrum first (see gibbs_state).
HermitianOperator expm_hermitian(const HermitianOperator& a, double s);

/// Sum of |lambda_i|.
double trace_norm(const HermitianOperator& a);

/// Largest |lambda_i|.
double operator_norm(const HermitianOperator& a);

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

HermitianOperator dagger(const HermitianOperator& a);

/// Frobenius distance; throws DimensionError on mismatch.
double frob_dist(const HermitianOperator& a, const HermitianOperator& b);

/// Real part of Tr(a b); the Hilbert-Schmidt inner product on Hermitian
/// operators.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

}  // namespace thermoent
