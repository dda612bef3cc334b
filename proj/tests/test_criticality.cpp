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

#include <cmath>

#include "doctest.h"
#include "thermoent/criticality.hpp"

using namespace thermoent;

namespace {

struct Case {
  XYZCouplings c;
  double beta_c;  // mpmath, 30 digits
};

const Case kCases[] = {
    {{1, 1, 1}, 0.274653072167027},  // ln 3 / 4
    {{3, 1, 1}, 0.173286795139986},  // ln 2 / 4
    {{3, 2, 1}, 0.140599787161481},  // e^{6b} = e^{-2b} + 1 + e^{-4b}
};

double closed_form_c111(double beta) {
  const double u = std::exp(4.0 * beta);
  return std::max(0.0, (u - 3.0) / (u + 3.0));
}

}  // namespace

TEST_SUITE("criticality") {

TEST_CASE("critical points") {
  for (const auto& k : kCases) {
    const CriticalSearch s = find_critical_beta(k.c);
    REQUIRE(s.status == CriticalStatus::Found);
    CHECK(std::abs(s.beta_c - k.beta_c) <= 1e-8);
    CHECK(std::abs(s.boundary_value) < 1e-9);
  }
}

TEST_CASE("critical point agrees with the concurrence zero along a sweep") {
  for (const auto& k : kCases) {
    const double bc = find_critical_beta(k.c).beta_c;
    // Concurrence zero located by bisection on the swept quantity itself.
    const HermitianOperator h = build_xyz(k.c);
    double lo = bc - 0.05, hi = bc + 0.05;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      (concurrence(gibbs_state(h, InverseTemperature(mid))) > 0.0 ? hi : lo) = mid;
    }
    CHECK(std::abs(bc - 0.5 * (lo + hi)) <= 1e-8);
  }
}

TEST_CASE("no sign change in the bracket") {
  CHECK(find_critical_beta({-1, -1, -1}).status == CriticalStatus::AllSeparable);
  CHECK(find_critical_beta({1, 1, 1}, 1.0, 10.0).status == CriticalStatus::AllEntangled);
  CHECK(find_critical_beta({0, 0, 0}).status == CriticalStatus::AllSeparable);
  CHECK_THROWS_AS(find_critical_beta({1, 1, 1}, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("one-sided derivatives of smooth functions") {
  auto e = [](double x) { return std::exp(x); };
  for (Side side : {Side::Left, Side::Right}) {
    for (int order = 0; order <= 2; ++order) {
      // Second differences at the finest step carry ~1e-8 rounding noise.
      const double tol = order == 2 ? 1e-7 : 1e-10;
      const DerivativeEstimate d = one_sided_derivative(e, 0.3, side, order);
      CHECK(d.value == doctest::Approx(std::exp(0.3)).epsilon(tol));
      CHECK_FALSE(d.divergent);
      CHECK(d.error < 10 * tol);
    }
  }
  auto cube = [](double x) { return x * x * x - 2 * x; };
  CHECK(one_sided_derivative(cube, 1.0, Side::Right, 1).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(one_sided_derivative(cube, 1.0, Side::Left, 2).value ==
        doctest::Approx(6.0).epsilon(1e-7));
}

TEST_CASE("one-sided derivatives see kinks and steps") {
  auto absf = [](double x) { return std::abs(x); };
  const auto l = one_sided_derivative(absf, 0.0, Side::Left, 1);
  const auto r = one_sided_derivative(absf, 0.0, Side::Right, 1);
  CHECK(l.value == doctest::Approx(-1.0));
  CHECK(r.value == doctest::Approx(1.0));
  CHECK(is_discontinuous(l, r));

  auto step = [](double x) { return x > 0 ? 1.0 : 0.0; };
  CHECK(is_discontinuous(one_sided_derivative(step, 0.0, Side::Left, 0),
                         one_sided_derivative(step, 0.0, Side::Right, 0)));
  auto smooth = [](double x) { return std::sin(x); };
  CHECK_FALSE(is_discontinuous(one_sided_derivative(smooth, 0.0, Side::Left, 1),
                               one_sided_derivative(smooth, 0.0, Side::Right, 1)));
}

TEST_CASE("logarithmic divergence is detected") {
  auto f = [](double x) { return x > 0 ? x * x * std::log(x) : 0.0; };
  const auto r = one_sided_derivative(f, 0.0, Side::Right, 2);
  CHECK(r.divergent);
  const auto l = one_sided_derivative(f, 0.0, Side::Left, 2);
  CHECK_FALSE(l.divergent);
  CHECK(is_discontinuous(l, r));
}

TEST_CASE("derivative argument checks") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(one_sided_derivative(f, 0.0, Side::Right, 3), std::invalid_argument);
  CHECK_THROWS_AS(one_sided_derivative(f, 0.0, Side::Right, 1, 0.0), std::invalid_argument);
}

TEST_CASE("right derivative of C at the (1,1,1) critical point is 2") {
  const double bc = std::log(3.0) / 4.0;
  const auto d = one_sided_derivative(closed_form_c111, bc, Side::Right, 1, 0.05);
  CHECK(d.value == doctest::Approx(2.0).epsilon(1e-8));
  const auto lib = one_sided_derivative(
      quantifier_along_beta({1, 1, 1}, QuantifierKind::Concurrence), bc, Side::Right, 1, 0.05);
  CHECK(lib.value == doctest::Approx(2.0).epsilon(1e-7));
}

TEST_CASE("richardson derivative of C matches the analytic slope") {
  for (double beta = std::log(3.0) / 4.0 + 0.05; beta <= 2.0; beta += 0.05) {
    const double u = std::exp(4.0 * beta);
    const double exact = 24.0 * u / ((u + 3.0) * (u + 3.0));
    const auto d = one_sided_derivative(closed_form_c111, beta, Side::Right, 1, 0.01);
    CHECK(std::abs(d.value - exact) <= 1e-7);
  }
}

TEST_CASE("transition orders") {
  for (const auto& k : kCases) {
    const TransitionReport r = analyze_transition(k.c);
    REQUIRE(r.found());
    for (const auto& q : r.quantifiers) {
      CAPTURE(short_name(q.kind));
      REQUIRE(q.order.has_value());
      switch (q.kind) {
        case QuantifierKind::Indicator:
          CHECK(*q.order == 0);
          break;
        case QuantifierKind::EoF:
          CHECK(*q.order == 2);
          break;
        default:
          CHECK(*q.order == 1);
      }
    }
  }
}

TEST_CASE("a smooth function has no transition through order 2") {
  const auto q = classify_order({1, 1, 1}, QuantifierKind::Concurrence, 1.0);
  CHECK_FALSE(q.order.has_value());
}

TEST_CASE("two-phase structure") {
  for (const auto& k : kCases) {
    const HermitianOperator h = build_xyz(k.c);
    for (double f : {0.1, 0.5, 0.9, 0.999}) {
      const QuantifierSet q = evaluate_all(gibbs_state(h, InverseTemperature(f * k.beta_c)));
      CHECK(q.concurrence == 0.0);
      CHECK(q.negativity == 0.0);
      CHECK(q.eof == 0.0);
      CHECK(q.log_negativity == 0.0);
      CHECK(q.indicator == 0);
    }
    for (double f : {1.001, 1.1, 2.0, 10.0}) {
      const QuantifierSet q = evaluate_all(gibbs_state(h, InverseTemperature(f * k.beta_c)));
      CHECK(q.concurrence > 0.0);
      CHECK(q.negativity > 0.0);
      CHECK(q.eof > 0.0);
      CHECK(q.log_negativity > 0.0);
      CHECK(q.indicator == 1);
    }
  }
}

TEST_CASE("chain rules away from the critical point") {
  for (const auto& k : kCases) {
    for (double beta : {0.5 * k.beta_c, 1.5 * k.beta_c, 1.0, 3.0}) {
      CHECK(std::abs(verify_chain_rule_en(k.c, beta).residual) <= 1e-6);
      CHECK(std::abs(verify_chain_rule_ef(k.c, beta).residual) <= 1e-6);
    }
  }
}

TEST_CASE("eof chain prefactor") {
  // dE_f/dC = (C / 2s) log2((1+s)/(1-s)), s = sqrt(1 - C^2); mpmath reference.
  CHECK(eof_chain_prefactor(1e-6) == doctest::Approx(2.09316e-5).epsilon(1e-5));
  CHECK(eof_chain_prefactor(0.0) == 0.0);
  CHECK(eof_chain_prefactor(0.5) > 0.0);
  // Monotone in C and vanishing at the separable boundary.
  double prev = 0.0;
  for (double c = 1e-9; c < 0.99; c *= 1.5) {
    const double v = eof_chain_prefactor(c);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("sweep grid, values and threading") {
  SweepSpec spec{0.0, 2.0, 200, {QuantifierKind::Concurrence, QuantifierKind::EoF}};
  const auto one = sweep({1, 1, 1}, spec, 1);
  const auto four = sweep({1, 1, 1}, spec, 4);
  CHECK(one.values == four.values);
  CHECK(one.betas.front() == 0.0);
  CHECK(one.betas.back() == 2.0);
  CHECK(one.betas.size() == 200);
  for (std::size_t i = 0; i < one.betas.size(); ++i)
    CHECK(std::abs(one.values[0][i] - closed_form_c111(one.betas[i])) <= 1e-9);

  CHECK_THROWS_AS((SweepSpec{1.0, 0.5, 10, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SweepSpec{-1.0, 0.5, 10, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SweepSpec{0.0, 1.0, 1, {}}.validate()), std::invalid_argument);
}

TEST_CASE("sweep derivatives go one-sided around beta_c") {
  SweepSpec spec{0.0, 1.0, 101, {QuantifierKind::Concurrence}};
  const auto s = sweep({1, 1, 1}, spec);
  const double bc = std::log(3.0) / 4.0;
  const auto d = sweep_derivatives(s, bc);
  // Grid spacing 0.01: beta_c lies between indices 27 and 28.
  CHECK(d[0][27] == 0.0);
  CHECK(d[0][28] == doctest::Approx((s.values[0][29] - s.values[0][28]) / 0.01));
  CHECK(d[0][50] == doctest::Approx((s.values[0][51] - s.values[0][49]) / 0.02));
  const auto centered = sweep_derivatives(s, std::nullopt);
  CHECK(centered[0][27] > 0.0);
}

}  // TEST_SUITE
