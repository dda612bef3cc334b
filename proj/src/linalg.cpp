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

#include "thermoent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <vector>

namespace thermoent {

namespace {

constexpr double kJacobiTolerance = 1e-13;
constexpr int kMaxSweeps = 100;

void check_dim(int dim) {
  if (dim < 1 || dim > kMaxDim) {
    std::ostringstream os;
    os << "operator dimension " << dim << " outside supported range 1.."
       << kMaxDim;
    throw DimensionError(os.str());
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  return (m + m.adjoint()) * 0.5;
}

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

double max_offdiag(const ComplexMatrix& a) {
  double m = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tolerance) {
  if (m.rows() != m.cols()) {
    throw DimensionError("Hermitian operator must be square");
  }
  check_dim(static_cast<int>(m.rows()));
  if (!all_finite(m)) {
    throw std::invalid_argument("operator has non-finite entries");
  }
  const double asym = max_asymmetry(m);
  if (asym > tolerance) {
    std::ostringstream os;
    os << "operator is not Hermitian: max |A(i,j) - conj(A(j,i))| = " << asym;
    throw NotHermitianError(os.str(), asym);
  }
  m_ = hermitian_part(m);
}

HermitianOperator HermitianOperator::symmetrized(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("Hermitian operator must be square");
  }
  check_dim(static_cast<int>(m.rows()));
  return HermitianOperator(Unchecked{}, hermitian_part(m));
}

HermitianOperator HermitianOperator::identity(int dim) {
  check_dim(dim);
  return HermitianOperator(Unchecked{}, ComplexMatrix::Identity(dim, dim));
}

HermitianOperator HermitianOperator::zero(int dim) {
  check_dim(dim);
  return HermitianOperator(Unchecked{}, ComplexMatrix::Zero(dim, dim));
}

HermitianOperator HermitianOperator::operator+(
    const HermitianOperator& o) const {
  if (o.dim() != dim()) throw DimensionError("dimension mismatch in sum");
  return HermitianOperator(Unchecked{}, m_ + o.m_);
}

HermitianOperator HermitianOperator::operator-(
    const HermitianOperator& o) const {
  if (o.dim() != dim()) throw DimensionError("dimension mismatch in difference");
  return HermitianOperator(Unchecked{}, m_ - o.m_);
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(Unchecked{}, m_ * s);
}

double max_asymmetry(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

Spectrum eig_hermitian(const HermitianOperator& op) {
  ComplexMatrix a = op.matrix();
  const int n = op.dim();
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double scale = std::max(1.0, a.norm());
  const double tol = kJacobiTolerance * scale;

  for (int sweep = 0; sweep < kMaxSweeps && max_offdiag(a) >= tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double gabs = std::abs(g);
        if (gabs == 0.0) continue;
        // Phase e^{i phi} = g/|g| makes the (p,q) block real symmetric;
        // a real Jacobi rotation then annihilates it.
        const Complex phase = g / gabs;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * gabs);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Unitary on the (p,q) plane: columns p, q of
        // [[c, s], [-s conj(phase), c conj(phase)]].
        const Complex upp = c;
        const Complex upq = s;
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (int k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (int k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        for (int k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(i, i).real() < a(j, j).real();
  });

  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues(k) = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

Spectrum eig_hermitian(const ComplexMatrix& a) {
  return eig_hermitian(HermitianOperator(a));
}

HermitianOperator expm_hermitian(const HermitianOperator& a, double s) {
  if (!std::isfinite(s)) throw std::invalid_argument("non-finite exponent scale");
  const Spectrum spec = eig_hermitian(a);
  const double limit = std::log(std::numeric_limits<double>::max()) - 1.0;
  for (Eigen::Index i = 0; i < spec.eigenvalues.size(); ++i) {
    if (s * spec.eigenvalues(i) > limit) {
      std::ostringstream os;
      os << "exp(" << s * spec.eigenvalues(i)
         << ") overflows; shift the spectrum before exponentiating";
      throw OverflowError(os.str());
    }
  }
  return spec.apply([s](double x) { return std::exp(s * x); });
}

double trace_norm(const HermitianOperator& a) {
  return eig_hermitian(a).eigenvalues.cwiseAbs().sum();
}

double operator_norm(const HermitianOperator& a) {
  return eig_hermitian(a).eigenvalues.cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() * b.dim() > kMaxDim) {
    throw DimensionError("tensor product exceeds maximum dimension");
  }
  return HermitianOperator::symmetrized(kron(a.matrix(), b.matrix()));
}

HermitianOperator dagger(const HermitianOperator& a) {
  return HermitianOperator::symmetrized(a.matrix().adjoint());
}

double frob_dist(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("frob_dist: dimension mismatch");
  return (a.matrix() - b.matrix()).norm();
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("hs_inner: dimension mismatch");
  // Tr(ab) = sum_ij a_ij b_ji = sum_ij a_ij conj(b_ij) for Hermitian b.
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

}  // namespace thermoent
