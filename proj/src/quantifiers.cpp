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

#include "thermoent/quantifiers.hpp"

#include <algorithm>
#include <cmath>

namespace thermoent {

namespace {

void require_two_qubit(const DensityMatrix& rho, const char* what) {
  if (!rho.is_two_qubit()) {
    throw DimensionError(std::string(what) + " requires a two-qubit state");
  }
}

double binary_entropy(double p) {
  auto term = [](double q) { return q <= 0.0 ? 0.0 : -q * std::log2(q); };
  return term(p) + term(1.0 - p);
}

}  // namespace

std::string_view short_name(QuantifierKind kind) {
  switch (kind) {
    case QuantifierKind::Concurrence:
      return "C";
    case QuantifierKind::EoF:
      return "Ef";
    case QuantifierKind::Negativity:
      return "N";
    case QuantifierKind::LogNegativity:
      return "EN";
    case QuantifierKind::Indicator:
      return "IM";
  }
  return "?";
}

std::optional<QuantifierKind> parse_quantifier(std::string_view name) {
  for (QuantifierKind k : kAllQuantifiers)
    if (short_name(k) == name) return k;
  return std::nullopt;
}

double concurrence(const DensityMatrix& rho) {
  require_two_qubit(rho, "concurrence");
  // The lambda_i are the square roots of the eigenvalues of
  // sqrt(rho) rho~ sqrt(rho) = M M^dagger with M = sqrt(rho) (Y x Y) sqrt(rho)^*,
  // i.e. the singular values of M. They are read off the Hermitian dilation
  // [[0, M], [M^dagger, 0]] (eigenvalues +-sigma_i), which keeps absolute
  // accuracy near machine epsilon where sqrt(eig(M M^dagger)) would lose half
  // the digits for small lambda.
  const Spectrum s = eig_hermitian(rho.op());
  const HermitianOperator sqrt_rho =
      s.apply([](double x) { return std::sqrt(std::max(x, 0.0)); });
  const auto sy = pauli(PauliAxis::Y);
  const ComplexMatrix yy = kron(sy.matrix(), sy.matrix());
  const ComplexMatrix m = sqrt_rho.matrix() * yy * sqrt_rho.matrix().conjugate();
  ComplexMatrix dilation = ComplexMatrix::Zero(8, 8);
  dilation.topRightCorner(4, 4) = m;
  dilation.bottomLeftCorner(4, 4) = m.adjoint();
  const RealVector ev = eig_hermitian(HermitianOperator::symmetrized(dilation)).eigenvalues;
  // Ascending: the four largest are sigma_4 <= ... <= sigma_1.
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i) l[i] = std::max(ev(4 + i), 0.0);
  return std::clamp(l[3] - l[2] - l[1] - l[0], 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  c = std::clamp(c, 0.0, 1.0);
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

double entanglement_of_formation(const DensityMatrix& rho) {
  return eof_from_concurrence(concurrence(rho));
}

double min_partial_transpose_eigenvalue(const DensityMatrix& rho) {
  return eig_hermitian(partial_transpose(rho, 0)).min();
}

double negativity(const DensityMatrix& rho) {
  if (rho.num_subsystems() < 2) {
    throw DimensionError("negativity requires a multipartite state");
  }
  const Spectrum s = eig_hermitian(partial_transpose(rho, 0));
  // A PSD partial transpose has trace norm equal to its trace; report the
  // exact zero rather than rounding noise.
  if (s.min() >= 0.0) return 0.0;
  return std::max(0.0, s.eigenvalues.cwiseAbs().sum() - 1.0);
}

double log_negativity_from_negativity(double n) { return std::log2(1.0 + n); }

double log_negativity(const DensityMatrix& rho) {
  return log_negativity_from_negativity(negativity(rho));
}

int indicator(const DensityMatrix& rho) {
  if (!rho.is_two_qubit()) {
    throw DimensionError(
        "indicator is only decidable by PPT for two-qubit states");
  }
  return min_partial_transpose_eigenvalue(rho) < -kPptEpsilon ? 1 : 0;
}

double evaluate(QuantifierKind kind, const DensityMatrix& rho) {
  switch (kind) {
    case QuantifierKind::Concurrence:
      return concurrence(rho);
    case QuantifierKind::EoF:
      return entanglement_of_formation(rho);
    case QuantifierKind::Negativity:
      return negativity(rho);
    case QuantifierKind::LogNegativity:
      return log_negativity(rho);
    case QuantifierKind::Indicator:
      return indicator(rho);
  }
  return 0.0;
}

double QuantifierSet::get(QuantifierKind kind) const {
  switch (kind) {
    case QuantifierKind::Concurrence:
      return concurrence;
    case QuantifierKind::EoF:
      return eof;
    case QuantifierKind::Negativity:
      return negativity;
    case QuantifierKind::LogNegativity:
      return log_negativity;
    case QuantifierKind::Indicator:
      return indicator;
  }
  return 0.0;
}

QuantifierSet evaluate_all(const DensityMatrix& rho) {
  require_two_qubit(rho, "evaluate_all");
  QuantifierSet q;
  q.concurrence = thermoent::concurrence(rho);
  q.eof = eof_from_concurrence(q.concurrence);
  const RealVector pt = eig_hermitian(partial_transpose(rho, 0)).eigenvalues;
  q.negativity = std::max(0.0, pt.cwiseAbs().sum() - 1.0);
  q.log_negativity = log_negativity_from_negativity(q.negativity);
  q.indicator = pt(0) < -kPptEpsilon ? 1 : 0;
  return q;
}

}  // namespace thermoent
