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

#include "thermoent/criticality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace thermoent {

// ---------------------------------------------------------------------------
// Sweeps
// ---------------------------------------------------------------------------

void SweepSpec::validate() const {
  if (!std::isfinite(beta_min) || !std::isfinite(beta_max) || beta_min < 0.0) {
    throw std::invalid_argument("beta range must be finite with beta_min >= 0");
  }
  if (!(beta_max > beta_min)) {
    throw std::invalid_argument("beta_max must exceed beta_min");
  }
  if (points < 2 || points > 1'000'000) {
    throw std::invalid_argument("sweep needs between 2 and 1e6 points");
  }
}

std::vector<double> SweepSpec::grid() const {
  validate();
  std::vector<double> g(points);
  const double step = (beta_max - beta_min) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = beta_min + step * i;
  g.back() = beta_max;
  return g;
}

QuantifierSeries sweep(const XYZCouplings& c, const SweepSpec& spec, int jobs) {
  QuantifierSeries out;
  out.betas = spec.grid();
  out.kinds = spec.kinds;
  const std::size_t n = out.betas.size();
  out.values.assign(out.kinds.size(), std::vector<double>(n, 0.0));

  const HermitianOperator h = build_xyz(c);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const QuantifierSet q =
          evaluate_all(gibbs_state(h, InverseTemperature(out.betas[i])));
      for (std::size_t k = 0; k < out.kinds.size(); ++k)
        out.values[k][i] = q.get(out.kinds[k]);
    }
  };

  const std::size_t threads =
      std::clamp<std::size_t>(jobs < 1 ? 1 : static_cast<std::size_t>(jobs), 1, n);
  if (threads == 1) {
    work(0, n);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (n + threads - 1) / threads;
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        work(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::vector<double>> sweep_derivatives(const QuantifierSeries& series,
                                                   std::optional<double> beta_c) {
  const auto& b = series.betas;
  const std::size_t n = b.size();
  std::vector<std::vector<double>> out(series.values.size(),
                                       std::vector<double>(n, 0.0));
  if (n < 2) return out;

  // Index of the last grid point strictly below beta_c, when beta_c is inside
  // the grid.
  std::optional<std::size_t> below;
  if (beta_c && *beta_c > b.front() && *beta_c < b.back()) {
    const auto it = std::lower_bound(b.begin(), b.end(), *beta_c);
    below = static_cast<std::size_t>(it - b.begin()) - 1;
  }

  for (std::size_t k = 0; k < series.values.size(); ++k) {
    const auto& f = series.values[k];
    for (std::size_t i = 0; i < n; ++i) {
      bool backward = i == n - 1;
      bool forward = i == 0;
      if (below) {
        if (i == *below) backward = true;
        if (i == *below + 1) forward = true;
      }
      if (backward && i > 0) {
        out[k][i] = (f[i] - f[i - 1]) / (b[i] - b[i - 1]);
      } else if (forward && i + 1 < n) {
        out[k][i] = (f[i + 1] - f[i]) / (b[i + 1] - b[i]);
      } else {
        out[k][i] = (f[i + 1] - f[i - 1]) / (b[i + 1] - b[i - 1]);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Critical point
// ---------------------------------------------------------------------------

namespace {

double ppt_boundary(const HermitianOperator& h, double beta) {
  return min_partial_transpose_eigenvalue(gibbs_state(h, InverseTemperature(beta)));
}

}  // namespace

CriticalSearch find_critical_beta(const XYZCouplings& c, double beta_lo,
                                  double beta_hi) {
  if (!(beta_lo >= 0.0) || !(beta_hi > beta_lo) || !std::isfinite(beta_hi)) {
    throw std::invalid_argument("critical bracket must satisfy 0 <= lo < hi");
  }
  const HermitianOperator h = build_xyz(c);
  double flo = ppt_boundary(h, beta_lo);
  double fhi = ppt_boundary(h, beta_hi);

  CriticalSearch out;
  const bool ent_lo = flo < 0.0;
  const bool ent_hi = fhi < 0.0;
  if (ent_lo == ent_hi) {
    out.status = ent_lo ? CriticalStatus::AllEntangled : CriticalStatus::AllSeparable;
    out.beta_c = std::numeric_limits<double>::quiet_NaN();
    out.boundary_value = ent_lo ? std::max(flo, fhi) : std::min(flo, fhi);
    return out;
  }

  double lo = beta_lo;
  double hi = beta_hi;
  while (hi - lo >= kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = ppt_boundary(h, mid);
    ++out.iterations;
    if ((fm < 0.0) == ent_lo) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  out.status = CriticalStatus::Found;
  out.beta_c = 0.5 * (lo + hi);
  out.boundary_value = ppt_boundary(h, out.beta_c);
  return out;
}

// ---------------------------------------------------------------------------
// One-sided derivatives
// ---------------------------------------------------------------------------

namespace {

// Ratio of successive raw increments above which a sequence is treated as
// not converging. A finite one-sided derivative gives ~0.5 (O(h) error).
constexpr double kDivergenceRatio = 0.8;

double stencil(const std::function<double(double)>& f, double x0, double s,
               int order, double h) {
  auto sample = [&](int m) {
    const double v = f(x0 + s * m * h);
    if (!std::isfinite(v)) throw std::domain_error("non-finite function sample");
    return v;
  };
  switch (order) {
    case 0:
      return sample(1);
    case 1:
      return s * (sample(2) - sample(1)) / h;
    case 2:
      return (sample(3) - 2.0 * sample(2) + sample(1)) / (h * h);
    default:
      throw std::invalid_argument("derivative order must be 0, 1 or 2");
  }
}

bool raw_sequence_diverges(const std::array<double, kRichardsonLevels>& d) {
  std::array<double, kRichardsonLevels - 1> inc{};
  for (int k = 1; k < kRichardsonLevels; ++k) inc[k - 1] = d[k] - d[k - 1];
  const double last = inc.back();
  const double scale = std::max(1.0, std::abs(d.back()));
  if (std::abs(last) <= 1e-6 * scale) return false;
  for (int k = kRichardsonLevels - 3; k < kRichardsonLevels - 1; ++k) {
    const double prev = inc[k - 1];
    const double cur = inc[k];
    if (prev == 0.0 || (prev > 0.0) != (cur > 0.0)) return false;
    if (std::abs(cur) < kDivergenceRatio * std::abs(prev)) return false;
  }
  return true;
}

}  // namespace

DerivativeEstimate one_sided_derivative(const std::function<double(double)>& f,
                                        double x0, Side side, int order,
                                        double h0) {
  if (!(h0 > 0.0) || !std::isfinite(h0)) {
    throw std::invalid_argument("initial step must be positive");
  }
  if (order < 0 || order > 2) {
    throw std::invalid_argument("derivative order must be 0, 1 or 2");
  }
  const double s = side == Side::Right ? 1.0 : -1.0;

  std::array<double, kRichardsonLevels> raw{};
  std::array<std::array<double, kRichardsonLevels>, kRichardsonLevels> t{};
  for (int k = 0; k < kRichardsonLevels; ++k) {
    const double h = h0 * std::ldexp(1.0, -k);
    raw[k] = stencil(f, x0, s, order, h);
    t[k][0] = raw[k];
    for (int j = 1; j <= k; ++j) {
      const double p = std::ldexp(1.0, j);
      t[k][j] = (p * t[k][j - 1] - t[k - 1][j - 1]) / (p - 1.0);
    }
  }

  DerivativeEstimate out;
  constexpr int last = kRichardsonLevels - 1;
  if (raw_sequence_diverges(raw)) {
    out.value = raw[last];
    out.error = std::abs(raw[last] - raw[last - 1]);
    out.divergent = true;
    return out;
  }
  out.value = t[last][last];
  out.error = std::abs(t[last][last] - t[last - 1][last - 1]);
  return out;
}

// ---------------------------------------------------------------------------
// Transition order
// ---------------------------------------------------------------------------

bool is_discontinuous(const DerivativeEstimate& left, const DerivativeEstimate& right) {
  if (left.divergent || right.divergent) return true;
  const double threshold = std::max(1e-4, 10.0 * (left.error + right.error));
  return std::abs(right.value - left.value) > threshold;
}

std::function<double(double)> quantifier_along_beta(const XYZCouplings& c,
                                                    QuantifierKind kind) {
  HermitianOperator h = build_xyz(c);
  return [h = std::move(h), kind](double beta) {
    return evaluate(kind, gibbs_state(h, InverseTemperature(beta)));
  };
}

QuantifierTransition classify_order(const XYZCouplings& c, QuantifierKind kind,
                                    double beta_c, double h0) {
  // Keep the left stencil (down to beta_c - 3 h0) at non-negative beta.
  h0 = std::min(h0, beta_c / 4.0);
  if (!(h0 > 0.0)) throw std::invalid_argument("beta_c must be positive");
  const auto f = quantifier_along_beta(c, kind);
  QuantifierTransition out{kind, std::nullopt, {}};
  for (int n = 0; n <= 2; ++n) {
    auto& e = out.evidence[n];
    e.left = one_sided_derivative(f, beta_c, Side::Left, n, h0);
    e.right = one_sided_derivative(f, beta_c, Side::Right, n, h0);
    e.jump = is_discontinuous(e.left, e.right);
    if (e.jump && !out.order) out.order = n;
  }
  return out;
}

TransitionReport analyze_transition(const XYZCouplings& c,
                                    const TransitionOptions& options) {
  TransitionReport report;
  report.critical = find_critical_beta(c, options.beta_lo, options.beta_hi);
  if (!report.found()) return report;
  for (QuantifierKind kind : options.kinds)
    report.quantifiers.push_back(
        classify_order(c, kind, report.critical.beta_c, options.h0));
  return report;
}

// ---------------------------------------------------------------------------
// Chain rules
// ---------------------------------------------------------------------------

namespace {

struct SideChoice {
  Side side;
  double h0;
};

// Picks the side facing away from beta_c and shrinks h0 so the three-point
// stencil stays within one phase and at beta >= 0.
SideChoice side_away_from_transition(const XYZCouplings& c, double beta, double h0) {
  const CriticalSearch cs = find_critical_beta(c);
  Side side = Side::Right;
  double room = std::numeric_limits<double>::infinity();
  if (cs.status == CriticalStatus::Found) {
    if (beta < cs.beta_c) {
      side = Side::Left;
      room = std::min(cs.beta_c - beta, beta);
    } else {
      room = beta - cs.beta_c;
    }
  }
  return {side, std::min(h0, room / 4.0)};
}

}  // namespace

ChainRuleCheck verify_chain_rule_en(const XYZCouplings& c, double beta, double h0) {
  const auto [side, h] = side_away_from_transition(c, beta, h0);
  const auto fn = quantifier_along_beta(c, QuantifierKind::Negativity);
  const auto fen = quantifier_along_beta(c, QuantifierKind::LogNegativity);
  ChainRuleCheck out;
  out.lhs = one_sided_derivative(fen, beta, side, 1, h).value;
  const double n = fn(beta);
  out.rhs = one_sided_derivative(fn, beta, side, 1, h).value /
            ((1.0 + n) * std::numbers::ln2);
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

double eof_chain_prefactor(double c) {
  if (c <= 0.0) return 0.0;
  if (c > 1.0) c = 1.0;
  const double s = std::sqrt(1.0 - c * c);
  if (s < 1e-12) return c / std::numbers::ln2;  // limit as s -> 0
  // (1 - s) computed as C^2 / (1 + s) to keep precision for small C.
  const double one_minus_s = c * c / (1.0 + s);
  return -(c / (2.0 * s)) * std::log2(one_minus_s / (1.0 + s));
}

ChainRuleCheck verify_chain_rule_ef(const XYZCouplings& c, double beta, double h0) {
  const auto [side, h] = side_away_from_transition(c, beta, h0);
  const auto fc = quantifier_along_beta(c, QuantifierKind::Concurrence);
  const auto fe = quantifier_along_beta(c, QuantifierKind::EoF);
  ChainRuleCheck out;
  out.lhs = one_sided_derivative(fe, beta, side, 1, h).value;
  out.rhs = eof_chain_prefactor(fc(beta)) *
            one_sided_derivative(fc, beta, side, 1, h).value;
  out.residual = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace thermoent
