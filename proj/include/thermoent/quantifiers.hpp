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
#include <optional>
#include <string_view>

#include "thermoent/quantum.hpp"

namespace thermoent {

enum class QuantifierKind { Concurrence, EoF, Negativity, LogNegativity, Indicator };

inline constexpr std::array<QuantifierKind, 5> kAllQuantifiers = {
    QuantifierKind::Indicator, QuantifierKind::Concurrence,
    QuantifierKind::Negativity, QuantifierKind::LogNegativity,
    QuantifierKind::EoF};

/// Short column names: C, Ef, N, EN, IM.
std::string_view short_name(QuantifierKind kind);
std::optional<QuantifierKind> parse_quantifier(std::string_view name);

struct QuantifierValue {
  QuantifierKind kind;
  double value;
};

/// Threshold on the smallest eigenvalue of rho^{T_A} below which a two-qubit
/// state counts as entangled.
inline constexpr double kPptEpsilon = 1e-10;

/// Wootters concurrence max(0, l1 - l2 - l3 - l4). The l_i are square roots
/// of the eigenvalues of sqrt(rho) (Y x Y) rho* (Y x Y) sqrt(rho), which is
/// Hermitian and isospectral to the usual non-Hermitian product; they are
/// computed as singular values so small l_i keep full absolute accuracy.
double concurrence(const DensityMatrix& rho);

/// Binary entropy (base 2) of (1 + sqrt(1 - C^2))/2.
double eof_from_concurrence(double c);
double entanglement_of_formation(const DensityMatrix& rho);

/// ||rho^{T_A}||_1 - 1; exactly zero when rho^{T_A} is PSD.
double negativity(const DensityMatrix& rho);

double log_negativity_from_negativity(double n);
double log_negativity(const DensityMatrix& rho);

/// 1 iff lambda_min(rho^{T_A}) < -kPptEpsilon. Two-qubit states only, where
/// PPT decides separability.
int indicator(const DensityMatrix& rho);

/// Smallest eigenvalue of rho^{T_A}; the PPT boundary is its zero set.
double min_partial_transpose_eigenvalue(const DensityMatrix& rho);

double evaluate(QuantifierKind kind, const DensityMatrix& rho);

/// Evaluates all quantifiers with a single partial-transpose and spin-flip
/// decomposition.
struct QuantifierSet {
  double concurrence = 0.0;
  double eof = 0.0;
  double negativity = 0.0;
  double log_negativity = 0.0;
  int indicator = 0;

  double get(QuantifierKind kind) const;
};

QuantifierSet evaluate_all(const DensityMatrix& rho);

}  // namespace thermoent
