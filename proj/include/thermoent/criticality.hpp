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
#include <functional>
#include <optional>
#include <vector>

#include "thermoent/quantifiers.hpp"

namespace thermoent {

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

struct SweepSpec {
  double beta_min = 0.0;
  double beta_max = 2.0;
  int points = 201;
  std::vector<QuantifierKind> kinds;

  /// Throws std::invalid_argument unless 0 <= beta_min < beta_max and
  /// 2 <= points <= 1e6.
  void validate() const;
  /// Inclusive, strictly increasing grid.
  std::vector<double> grid() const;
};

struct QuantifierSeries {
  std::vector<double> betas;
  std::vector<QuantifierKind> kinds;
  /// values[k][i] is kinds[k] at betas[i].
  std::vector<std::vector<double>> values;
};

/// Gibbs state plus quantifiers at every grid point. Grid points are
/// distributed over `jobs` threads; the result does not depend on `jobs`.
QuantifierSeries sweep(const XYZCouplings& c, const SweepSpec& spec, int jobs = 1);

/// Per-kind d/dbeta columns: centered differences in the interior, one-sided
/// at the endpoints and at the two grid points that straddle beta_c.
std::vector<std::vector<double>> sweep_derivatives(const QuantifierSeries& series,
                                                   std::optional<double> beta_c);

// ---------------------------------------------------------------------------
// Critical point
// ---------------------------------------------------------------------------

enum class CriticalStatus { Found, AllSeparable, AllEntangled };

struct CriticalSearch {
  CriticalStatus status = CriticalStatus::AllSeparable;
  double beta_c = 0.0;
  /// lambda_min(rho(beta_c)^{T_A}).
  double boundary_value = 0.0;
  int iterations = 0;
};

inline constexpr double kDefaultBracketLow = 1e-6;
inline constexpr double kDefaultBracketHigh = 10.0;
inline constexpr double kBisectionWidth = 1e-10;

/// Bisection on f(beta) = lambda_min(gibbs(c, beta)^{T_A}) until the bracket
/// is narrower than 1e-10. A bracket without a sign change is reported as
/// AllSeparable or AllEntangled rather than thrown.
CriticalSearch find_critical_beta(const XYZCouplings& c,
                                  double beta_lo = kDefaultBracketLow,
                                  double beta_hi = kDefaultBracketHigh);

// ---------------------------------------------------------------------------
// One-sided derivatives
// ---------------------------------------------------------------------------

enum class Side { Left, Right };

struct DerivativeEstimate {
  double value = 0.0;
  /// Spread of the last two diagonal Richardson extrapolants.
  double error = 0.0;
  /// Raw differences kept growing under step halving (no finite limit).
  bool divergent = false;
};

inline constexpr double kDefaultStep = 1e-2;
inline constexpr int kRichardsonLevels = 7;

/// One-sided estimate of the order-th derivative (order 0 is the one-sided
/// limit of f itself) from stencils that only touch x0 + s*h*{1,2,3},
/// s = -1 for Left and +1 for Right, at steps h0 2^{-k}, k = 0..6, followed by
/// Richardson extrapolation. Throws std::domain_error on non-finite samples.
DerivativeEstimate one_sided_derivative(const std::function<double(double)>& f,
                                        double x0, Side side, int order,
                                        double h0 = kDefaultStep);

// ---------------------------------------------------------------------------
// Transition order
// ---------------------------------------------------------------------------

/// Jump test between the two sides: divergence on either side, or
/// |right - left| > max(1e-4, 10 (err_left + err_right)).
bool is_discontinuous(const DerivativeEstimate& left, const DerivativeEstimate& right);

struct OrderEvidence {
  DerivativeEstimate left;
  DerivativeEstimate right;
  bool jump = false;
};

struct QuantifierTransition {
  QuantifierKind kind;
  /// Smallest n in {0,1,2} with a jump; nullopt means analytic through order
  /// 2 ("order >= 3").
  std::optional<int> order;
  std::array<OrderEvidence, 3> evidence;
};

struct TransitionOptions {
  double beta_lo = kDefaultBracketLow;
  double beta_hi = kDefaultBracketHigh;
  double h0 = kDefaultStep;
  std::vector<QuantifierKind> kinds{kAllQuantifiers.begin(), kAllQuantifiers.end()};
};

struct TransitionReport {
  CriticalSearch critical;
  std::vector<QuantifierTransition> quantifiers;

  bool found() const { return critical.status == CriticalStatus::Found; }
};

/// beta -> quantifier value along the Gibbs family of `c`.
std::function<double(double)> quantifier_along_beta(const XYZCouplings& c,
                                                    QuantifierKind kind);

QuantifierTransition classify_order(const XYZCouplings& c, QuantifierKind kind,
                                    double beta_c, double h0 = kDefaultStep);

/// Locates beta_c and classifies every requested quantifier. When no
/// transition is found the quantifier list is empty.
TransitionReport analyze_transition(const XYZCouplings& c,
                                    const TransitionOptions& options = {});

// ---------------------------------------------------------------------------
// Chain-rule identities
// ---------------------------------------------------------------------------

struct ChainRuleCheck {
  double lhs = 0.0;  // derivative of the composite quantifier
  double rhs = 0.0;  // prefactor times derivative of the base quantifier
  double residual = 0.0;
};

/// dE_N/dbeta against dN/dbeta / ((1 + N) ln 2). The derivative side is
/// chosen so that no stencil point crosses beta_c.
ChainRuleCheck verify_chain_rule_en(const XYZCouplings& c, double beta,
                                    double h0 = kDefaultStep);

/// dE_f/dC = -(C / (2 sqrt(1 - C^2))) log2((1 - s)/(1 + s)), s = sqrt(1 - C^2).
/// Vanishes like C log C as C -> 0+.
double eof_chain_prefactor(double c);

/// dE_f/dbeta against eof_chain_prefactor(C) dC/dbeta.
ChainRuleCheck verify_chain_rule_ef(const XYZCouplings& c, double beta,
                                    double h0 = kDefaultStep);

}  // namespace thermoent
