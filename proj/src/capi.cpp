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

#include "thermoent/thermoent.h"

#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "thermoent/criticality.hpp"
#include "thermoent/quantifiers.hpp"
#include "thermoent/state_io.hpp"
#include "thermoent/witness.hpp"

using namespace thermoent;

struct te_state {
  DensityMatrix rho;
};

struct te_series {
  QuantifierSeries series;
  std::vector<std::vector<double>> derivatives;
  std::optional<double> beta_c;
};

struct te_transition {
  TransitionReport report;
};

struct te_ew {
  EwResult result;
};

struct te_path {
  StatePath path;
};

struct te_path_report {
  PathReport report;
};

namespace {

thread_local std::string g_last_error;

te_status fail(te_status code, const char* what) {
  g_last_error = what;
  return code;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
te_status guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return fail(TE_ERR_PARSE, e.what());
  } catch (const IoError& e) {
    return fail(TE_ERR_IO, e.what());
  } catch (const InvalidStateError& e) {
    return fail(TE_ERR_INVALID_STATE, e.what());
  } catch (const NotHermitianError& e) {
    return fail(TE_ERR_NOT_HERMITIAN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(TE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(TE_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(TE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TE_ERR_INTERNAL, "unknown error");
  }
}

#define TE_REQUIRE(cond)                                                  \
  do {                                                                    \
    if (!(cond)) return fail(TE_ERR_INVALID_ARGUMENT, "invalid argument: " #cond); \
  } while (0)

std::optional<QuantifierKind> kind_from_int(int k) {
  if (k < 0 || k >= TE_Q_COUNT) return std::nullopt;
  return static_cast<QuantifierKind>(k);
}

te_status new_state(DensityMatrix rho, te_state** out) {
  *out = new te_state{std::move(rho)};
  return TE_OK;
}

}  // namespace

extern "C" {

const char* te_last_error(void) { return g_last_error.c_str(); }

const char* te_version(void) { return "1.0.0"; }

const char* te_quantifier_name(int kind) {
  static const char* names[] = {"C", "Ef", "N", "EN", "IM"};
  if (kind < 0 || kind >= TE_Q_COUNT) return nullptr;
  return names[kind];
}

te_status te_quantifier_parse(const char* name, int* kind) {
  TE_REQUIRE(name && kind);
  const auto k = parse_quantifier(name);
  if (!k) return fail(TE_ERR_INVALID_ARGUMENT, "unknown quantifier name");
  *kind = static_cast<int>(*k);
  return TE_OK;
}

te_status te_format_real(double value, char* buf, size_t cap) {
  TE_REQUIRE(buf && cap > 0);
  return guarded([&] {
    const std::string s = format_real(value);
    if (s.size() + 1 > cap) return fail(TE_ERR_INVALID_ARGUMENT, "buffer too small");
    std::memcpy(buf, s.c_str(), s.size() + 1);
    return TE_OK;
  });
}

// ---- States ----------------------------------------------------------------

te_status te_state_load(const char* path, te_state** out) {
  TE_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] { return new_state(load_state(path), out); });
}

te_status te_state_save(const te_state* state, const char* path) {
  TE_REQUIRE(state && path);
  return guarded([&] {
    save_state(path, state->rho);
    return TE_OK;
  });
}

te_status te_state_from_entries(const int* dims, size_t num_dims,
                                const double* entries, te_state** out) {
  TE_REQUIRE(dims && num_dims > 0 && entries && out);
  *out = nullptr;
  return guarded([&] {
    std::vector<int> d(dims, dims + num_dims);
    long total = 1;
    for (int x : d) {
      if (x < 1) throw std::invalid_argument("subsystem dimensions must be positive");
      total *= x;
      if (total > kMaxDim) throw std::invalid_argument("dimension exceeds 16");
    }
    const int n = static_cast<int>(total);
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m(i, j) = Complex(entries[2 * (i * n + j)], entries[2 * (i * n + j) + 1]);
    try {
      return new_state(DensityMatrix(HermitianOperator(m), d), out);
    } catch (const NotHermitianError& e) {
      throw InvalidStateError(e.what());
    }
  });
}

te_status te_state_gibbs(double x, double y, double z, double beta, te_state** out) {
  TE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    return new_state(gibbs_state(build_xyz({x, y, z}), InverseTemperature(beta)), out);
  });
}

te_status te_state_bell(int which, te_state** out) {
  TE_REQUIRE(out && which >= 0 && which <= 3);
  return guarded([&] { return new_state(bell_state(static_cast<BellState>(which)), out); });
}

te_status te_state_ghz(int num_qubits, te_state** out) {
  TE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { return new_state(ghz_state(num_qubits), out); });
}

te_status te_state_maximally_mixed(const int* dims, size_t num_dims, te_state** out) {
  TE_REQUIRE(dims && num_dims > 0 && out);
  *out = nullptr;
  return guarded([&] {
    return new_state(
        DensityMatrix::maximally_mixed(std::vector<int>(dims, dims + num_dims)), out);
  });
}

te_status te_state_mix(const te_state* a, const te_state* b, double lambda,
                       te_state** out) {
  TE_REQUIRE(a && b && out);
  *out = nullptr;
  return guarded([&] { return new_state(DensityMatrix::mix(a->rho, b->rho, lambda), out); });
}

void te_state_free(te_state* state) { delete state; }

te_status te_state_dim(const te_state* state, int* dim) {
  TE_REQUIRE(state && dim);
  *dim = state->rho.dim();
  return TE_OK;
}

te_status te_state_num_subsystems(const te_state* state, int* count) {
  TE_REQUIRE(state && count);
  *count = state->rho.num_subsystems();
  return TE_OK;
}

te_status te_state_entry(const te_state* state, int row, int col, double* re,
                         double* im) {
  TE_REQUIRE(state && re && im);
  const int n = state->rho.dim();
  TE_REQUIRE(row >= 0 && row < n && col >= 0 && col < n);
  const Complex z = state->rho.matrix()(row, col);
  *re = z.real();
  *im = z.imag();
  return TE_OK;
}

te_status te_state_bell_populations(const te_state* state, double out[4]) {
  TE_REQUIRE(state && out);
  return guarded([&] {
    const auto p = bell_populations(state->rho);
    std::copy(p.begin(), p.end(), out);
    return TE_OK;
  });
}

te_status te_quantifier(const te_state* state, int kind, double* value) {
  TE_REQUIRE(state && value);
  const auto k = kind_from_int(kind);
  TE_REQUIRE(k.has_value());
  return guarded([&] {
    *value = evaluate(*k, state->rho);
    return TE_OK;
  });
}

// ---- Sweeps ----------------------------------------------------------------

te_status te_sweep(double x, double y, double z, double beta_min, double beta_max,
                   int points, const int* kinds, size_t num_kinds, int jobs,
                   te_series** out) {
  TE_REQUIRE(out && (kinds || num_kinds == 0));
  *out = nullptr;
  return guarded([&] {
    SweepSpec spec{beta_min, beta_max, points, {}};
    for (size_t i = 0; i < num_kinds; ++i) {
      const auto k = kind_from_int(kinds[i]);
      if (!k) throw std::invalid_argument("unknown quantifier kind");
      spec.kinds.push_back(*k);
    }
    spec.validate();
    auto s = std::make_unique<te_series>();
    const XYZCouplings c{x, y, z};
    s->series = sweep(c, spec, jobs);
    const CriticalSearch cs =
        find_critical_beta(c, std::max(beta_min, kDefaultBracketLow),
                           std::max(beta_max, kDefaultBracketHigh));
    if (cs.status == CriticalStatus::Found) s->beta_c = cs.beta_c;
    s->derivatives = sweep_derivatives(s->series, s->beta_c);
    *out = s.release();
    return TE_OK;
  });
}

void te_series_free(te_series* series) { delete series; }

te_status te_series_size(const te_series* series, size_t* points) {
  TE_REQUIRE(series && points);
  *points = series->series.betas.size();
  return TE_OK;
}

te_status te_series_beta(const te_series* series, size_t index, double* beta) {
  TE_REQUIRE(series && beta && index < series->series.betas.size());
  *beta = series->series.betas[index];
  return TE_OK;
}

te_status te_series_value(const te_series* series, size_t column, size_t index,
                          double* value) {
  TE_REQUIRE(series && value && column < series->series.values.size() &&
             index < series->series.betas.size());
  *value = series->series.values[column][index];
  return TE_OK;
}

te_status te_series_derivative(const te_series* series, size_t column, size_t index,
                               double* value) {
  TE_REQUIRE(series && value && column < series->derivatives.size() &&
             index < series->series.betas.size());
  *value = series->derivatives[column][index];
  return TE_OK;
}

te_status te_series_beta_c(const te_series* series, int* found, double* beta_c) {
  TE_REQUIRE(series && found && beta_c);
  *found = series->beta_c ? 1 : 0;
  *beta_c = series->beta_c.value_or(0.0);
  return TE_OK;
}

// ---- Transitions -----------------------------------------------------------

te_status te_analyze_transition(double x, double y, double z, double beta_lo,
                                double beta_hi, te_transition** out) {
  TE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    TransitionOptions opts;
    opts.beta_lo = beta_lo;
    opts.beta_hi = beta_hi;
    auto t = std::make_unique<te_transition>();
    t->report = analyze_transition({x, y, z}, opts);
    const bool found = t->report.found();
    *out = t.release();
    if (!found) return fail(TE_ERR_NO_TRANSITION, "no transition in bracket");
    return TE_OK;
  });
}

void te_transition_free(te_transition* report) { delete report; }

te_status te_transition_outcome(const te_transition* report, int* outcome) {
  TE_REQUIRE(report && outcome);
  switch (report->report.critical.status) {
    case CriticalStatus::Found:
      *outcome = TE_TRANSITION_FOUND;
      break;
    case CriticalStatus::AllSeparable:
      *outcome = TE_TRANSITION_ALL_SEPARABLE;
      break;
    case CriticalStatus::AllEntangled:
      *outcome = TE_TRANSITION_ALL_ENTANGLED;
      break;
  }
  return TE_OK;
}

te_status te_transition_beta_c(const te_transition* report, double* beta_c) {
  TE_REQUIRE(report && beta_c);
  if (!report->report.found()) return fail(TE_ERR_NO_TRANSITION, "no transition");
  *beta_c = report->report.critical.beta_c;
  return TE_OK;
}

te_status te_transition_boundary_value(const te_transition* report, double* value) {
  TE_REQUIRE(report && value);
  *value = report->report.critical.boundary_value;
  return TE_OK;
}

namespace {

const QuantifierTransition* find_kind(const te_transition* report, int kind) {
  for (const auto& q : report->report.quantifiers)
    if (static_cast<int>(q.kind) == kind) return &q;
  return nullptr;
}

}  // namespace

te_status te_transition_order(const te_transition* report, int kind, int* order) {
  TE_REQUIRE(report && order);
  const auto* q = find_kind(report, kind);
  if (!q) return fail(TE_ERR_INVALID_ARGUMENT, "quantifier not analyzed");
  *order = q->order.value_or(TE_ORDER_ANALYTIC);
  return TE_OK;
}

te_status te_transition_derivative(const te_transition* report, int kind, int order,
                                   int side, double* value, double* error,
                                   int* divergent) {
  TE_REQUIRE(report && value && error && divergent);
  TE_REQUIRE(order >= 0 && order <= 2);
  TE_REQUIRE(side == TE_SIDE_LEFT || side == TE_SIDE_RIGHT);
  const auto* q = find_kind(report, kind);
  if (!q) return fail(TE_ERR_INVALID_ARGUMENT, "quantifier not analyzed");
  const auto& ev = q->evidence[order];
  const DerivativeEstimate& d = side == TE_SIDE_LEFT ? ev.left : ev.right;
  *value = d.value;
  *error = d.error;
  *divergent = d.divergent ? 1 : 0;
  return TE_OK;
}

te_status te_one_sided_derivative(te_real_fn f, void* user, double x0, int side,
                                  int order, double h0, double* value,
                                  double* error, int* divergent) {
  TE_REQUIRE(f && value && error && divergent);
  TE_REQUIRE(side == TE_SIDE_LEFT || side == TE_SIDE_RIGHT);
  return guarded([&] {
    const auto d = one_sided_derivative([&](double v) { return f(v, user); }, x0,
                                        side == TE_SIDE_LEFT ? Side::Left : Side::Right,
                                        order, h0);
    *value = d.value;
    *error = d.error;
    *divergent = d.divergent ? 1 : 0;
    return TE_OK;
  });
}

te_status te_chain_rule_en(double x, double y, double z, double beta, double* residual) {
  TE_REQUIRE(residual);
  return guarded([&] {
    *residual = verify_chain_rule_en({x, y, z}, beta).residual;
    return TE_OK;
  });
}

te_status te_chain_rule_ef(double x, double y, double z, double beta, double* residual) {
  TE_REQUIRE(residual);
  return guarded([&] {
    *residual = verify_chain_rule_ef({x, y, z}, beta).residual;
    return TE_OK;
  });
}

// ---- Witnessed entanglement ------------------------------------------------

te_status te_witnessed_entanglement(const te_state* state, const int* cut,
                                    size_t cut_size, te_ew** out) {
  TE_REQUIRE(state && out && (cut || cut_size == 0));
  *out = nullptr;
  return guarded([&] {
    Bipartition b{std::vector<int>(cut, cut + cut_size)};
    if (b.side.empty()) b.side = {0};
    try {
      *out = new te_ew{witnessed_entanglement(state->rho, b)};
      return TE_OK;
    } catch (const SolverFailure& e) {
      *out = new te_ew{e.best()};
      return fail(TE_ERR_SOLVER, e.what());
    }
  });
}

void te_ew_free(te_ew* result) { delete result; }

te_status te_ew_value(const te_ew* result, double* value) {
  TE_REQUIRE(result && value);
  *value = result->result.value;
  return TE_OK;
}

te_status te_ew_duality_gap(const te_ew* result, double* gap) {
  TE_REQUIRE(result && gap);
  *gap = result->result.duality_gap;
  return TE_OK;
}

te_status te_ew_iterations(const te_ew* result, int* iterations) {
  TE_REQUIRE(result && iterations);
  *iterations = result->result.iterations;
  return TE_OK;
}

te_status te_ew_exact(const te_ew* result, int* exact) {
  TE_REQUIRE(result && exact);
  *exact = result->result.exact ? 1 : 0;
  return TE_OK;
}

te_status te_ew_dim(const te_ew* result, int* dim) {
  TE_REQUIRE(result && dim);
  *dim = result->result.witness.op.dim();
  return TE_OK;
}

te_status te_ew_witness_entry(const te_ew* result, int row, int col, double* re,
                              double* im) {
  TE_REQUIRE(result && re && im);
  const int n = result->result.witness.op.dim();
  TE_REQUIRE(row >= 0 && row < n && col >= 0 && col < n);
  const Complex z = result->result.witness.op(row, col);
  *re = z.real();
  *im = z.imag();
  return TE_OK;
}

te_status te_ew_product_check(const te_ew* result, const te_state* state, int samples,
                              uint64_t seed, double* minimum) {
  TE_REQUIRE(result && state && minimum && samples > 0);
  return guarded([&] {
    *minimum = witness_product_minimum(result->result.witness,
                                       state->rho.subsystem_dims(), result->result.cut,
                                       samples, seed);
    return TE_OK;
  });
}

te_status te_bipartition_count(int num_subsystems, size_t* count) {
  TE_REQUIRE(count);
  return guarded([&] {
    *count = all_bipartitions(num_subsystems).size();
    return TE_OK;
  });
}

te_status te_bipartition_get(int num_subsystems, size_t index, int* side,
                             size_t* side_size) {
  TE_REQUIRE(side && side_size);
  return guarded([&] {
    const auto cuts = all_bipartitions(num_subsystems);
    if (index >= cuts.size()) throw std::out_of_range("bipartition index");
    const auto& s = cuts[index].side;
    std::copy(s.begin(), s.end(), side);
    *side_size = s.size();
    return TE_OK;
  });
}

// ---- Paths -----------------------------------------------------------------

te_status te_path_gibbs(double x, double y, double z, double t_min, double t_max,
                        int points, te_path** out) {
  TE_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new te_path{gibbs_path({x, y, z}, t_min, t_max, points)};
    return TE_OK;
  });
}

te_status te_path_mix(const te_state* a, const te_state* b, double t_min, double t_max,
                      int points, te_path** out) {
  TE_REQUIRE(a && b && out);
  *out = nullptr;
  return guarded([&] {
    *out = new te_path{linear_mix_path(a->rho, b->rho, t_min, t_max, points)};
    return TE_OK;
  });
}

void te_path_free(te_path* path) { delete path; }

te_status te_track_witness_path(const te_path* path, double theta_w,
                                double delta_smooth, te_path_report** out) {
  TE_REQUIRE(path && out);
  *out = nullptr;
  return guarded([&] {
    TrackOptions opts;
    if (theta_w > 0.0) opts.theta_w = theta_w;
    if (delta_smooth > 0.0) opts.delta_smooth = delta_smooth;
    auto r = std::make_unique<te_path_report>();
    r->report = track_witness_path(path->path, opts);
    const bool complete = r->report.complete;
    *out = r.release();
    if (!complete) return fail(TE_ERR_SOLVER, "solver failed at some path points");
    return TE_OK;
  });
}

void te_path_report_free(te_path_report* report) { delete report; }

te_status te_path_report_size(const te_path_report* report, size_t* points) {
  TE_REQUIRE(report && points);
  *points = report->report.points.size();
  return TE_OK;
}

te_status te_path_report_point(const te_path_report* report, size_t index, double* t,
                               double* value, double* gap, double* witness_jump,
                               int* flagged, int* solved) {
  TE_REQUIRE(report && index < report->report.points.size());
  const PathPoint& p = report->report.points[index];
  if (t) *t = p.t;
  if (value) *value = p.value;
  if (gap) *gap = p.duality_gap;
  if (witness_jump) *witness_jump = p.witness_jump;
  if (flagged) *flagged = p.flagged ? 1 : 0;
  if (solved) *solved = p.solved ? 1 : 0;
  return TE_OK;
}

te_status te_path_report_slopes(const te_path_report* report, size_t index,
                                double* left, double* right) {
  TE_REQUIRE(report && left && right && index < report->report.points.size());
  *left = report->report.points[index].slope_left;
  *right = report->report.points[index].slope_right;
  return TE_OK;
}

te_status te_path_report_flag_count(const te_path_report* report, size_t* count) {
  TE_REQUIRE(report && count);
  *count = report->report.flags.size();
  return TE_OK;
}

te_status te_path_report_flag(const te_path_report* report, size_t k, size_t* index) {
  TE_REQUIRE(report && index && k < report->report.flags.size());
  *index = report->report.flags[k];
  return TE_OK;
}

te_status te_path_report_kink_count(const te_path_report* report, size_t* count) {
  TE_REQUIRE(report && count);
  *count = report->report.kinks.size();
  return TE_OK;
}

te_status te_path_report_kink(const te_path_report* report, size_t k, size_t* index) {
  TE_REQUIRE(report && index && k < report->report.kinks.size());
  *index = report->report.kinks[k];
  return TE_OK;
}

}  // extern "C"
