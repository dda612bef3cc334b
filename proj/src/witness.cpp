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

#include "thermoent/witness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "sdp.hpp"
#include "thermoent/quantifiers.hpp"

namespace thermoent {

namespace {

/// Orthonormal basis of n x n Hermitian matrices under Re Tr(A B).
std::vector<ComplexMatrix> hermitian_basis(int n) {
  std::vector<ComplexMatrix> basis;
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i) {
    ComplexMatrix e = ComplexMatrix::Zero(n, n);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ComplexMatrix re = ComplexMatrix::Zero(n, n);
      re(i, j) = r;
      re(j, i) = r;
      basis.push_back(re);
      ComplexMatrix im = ComplexMatrix::Zero(n, n);
      im(i, j) = Complex(0.0, -r);
      im(j, i) = Complex(0.0, r);
      basis.push_back(im);
    }
  }
  return basis;
}

void append_sparse(sdp::SparseHermitian& out, int block, const ComplexMatrix& m,
                   double scale) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != Complex(0.0)) out.push_back({block, i, j, scale * m(i, j)});
}

HermitianOperator psd_part(const ComplexMatrix& m) {
  const Spectrum s = eig_hermitian(HermitianOperator::symmetrized(m));
  return s.apply([](double x) { return std::max(x, 0.0); });
}

bool cut_is_exact(const std::vector<int>& dims, const Bipartition& cut) {
  int da = 1;
  int total = 1;
  for (int d : dims) total *= d;
  for (int s : cut.side) da *= dims[s];
  return da * (total / da) <= 6;
}

EwResult trivial_result(const DensityMatrix& rho, const Bipartition& cut,
                        double lambda_min) {
  EwResult r;
  r.value = 0.0;
  r.witness = Witness{HermitianOperator::zero(rho.dim())};
  // D = |lambda_min| I is feasible, bounding the primal optimum.
  r.primal_value = rho.dim() * std::max(0.0, -lambda_min);
  r.dual_value = 0.0;
  r.duality_gap = r.primal_value;
  r.iterations = 0;
  r.exact = cut_is_exact(rho.subsystem_dims(), cut);
  r.converged = true;
  r.cut = cut;
  return r;
}

}  // namespace

void validate_cut(const Bipartition& cut, int num_subsystems) {
  if (cut.side.empty()) throw std::invalid_argument("bipartition side is empty");
  std::vector<bool> seen(num_subsystems, false);
  for (int s : cut.side) {
    if (s < 0 || s >= num_subsystems) {
      throw std::out_of_range("bipartition refers to an invalid subsystem");
    }
    if (seen[s]) throw std::invalid_argument("bipartition repeats a subsystem");
    seen[s] = true;
  }
  if (static_cast<int>(cut.side.size()) >= num_subsystems) {
    throw std::invalid_argument("bipartition complement is empty");
  }
}

std::vector<Bipartition> all_bipartitions(int num_subsystems) {
  if (num_subsystems < 2) throw std::invalid_argument("need at least two subsystems");
  std::vector<Bipartition> out;
  for (int size = 1; size <= num_subsystems / 2; ++size) {
    for (unsigned mask = 0; mask < (1u << num_subsystems); ++mask) {
      if (std::popcount(mask) != size) continue;
      if (2 * size == num_subsystems && !(mask & 1u)) continue;
      Bipartition b;
      for (int s = 0; s < num_subsystems; ++s)
        if (mask & (1u << s)) b.side.push_back(s);
      out.push_back(std::move(b));
    }
  }
  return out;
}

EwResult witnessed_entanglement(const DensityMatrix& rho, const Bipartition& cut,
                                const EwOptions& options) {
  validate_cut(cut, rho.num_subsystems());
  const auto& dims = rho.subsystem_dims();
  const int n = rho.dim();
  const HermitianOperator rho_pt = partial_transpose(rho.op(), dims, cut.side);

  const double lambda_min = eig_hermitian(rho_pt).min();
  if (lambda_min >= -kPptEpsilon) return trivial_result(rho, cut, lambda_min);

  // Block 0 holds D, block 1 holds S = (rho + D)^{T_A}; the equality
  // S - D^{T_A} = rho^{T_A} is imposed along an orthonormal Hermitian basis.
  sdp::Problem problem;
  problem.block_dims = {n, n};
  problem.cost = {ComplexMatrix::Identity(n, n), ComplexMatrix::Zero(n, n)};
  const auto basis = hermitian_basis(n);
  problem.rhs.resize(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const ComplexMatrix ek_pt =
        partial_transpose(HermitianOperator::symmetrized(basis[k]), dims, cut.side)
            .matrix();
    sdp::SparseHermitian a;
    append_sparse(a, 0, ek_pt, -1.0);
    append_sparse(a, 1, basis[k], 1.0);
    problem.constraints.push_back(std::move(a));
    problem.rhs(static_cast<Eigen::Index>(k)) =
        (basis[k].array() * rho_pt.matrix().conjugate().array()).sum().real();
  }

  sdp::Options sdp_options;
  sdp_options.max_iterations = options.max_iterations;
  const sdp::Solution sol = sdp::solve(problem, sdp_options);

  // Certified primal point: clip D to PSD, then lift by the residual
  // negativity of (rho + D)^{T_A} (adding c I shifts it by exactly c).
  HermitianOperator delta = psd_part(sol.primal[0]);
  const double s_min =
      eig_hermitian(partial_transpose(rho.op() + delta, dims, cut.side)).min();
  if (s_min < 0.0) delta = delta + HermitianOperator::identity(n) * (-s_min);

  // Certified dual point: Y = -sum y_k E_k clipped to PSD, W = Y^{T_A}
  // rescaled into W <= I.
  const auto ay = sdp::adjoint_map(problem, sol.dual);
  const HermitianOperator y_op = psd_part(-ay[1]);
  HermitianOperator w = partial_transpose(y_op, dims, cut.side);
  const double w_max = eig_hermitian(w).max();
  if (w_max > 1.0) w = w * (1.0 / w_max);

  EwResult r;
  r.primal_value = delta.trace();
  r.dual_value = -hs_inner(w, rho.op());
  r.value = std::max(0.0, r.dual_value);
  r.witness = Witness{w};
  r.duality_gap = std::abs(r.primal_value - r.dual_value);
  r.iterations = sol.iterations;
  r.exact = cut_is_exact(dims, cut);
  r.converged = r.duality_gap <= options.gap_contract;
  r.cut = cut;
  if (!r.converged) {
    std::ostringstream os;
    os << "witness SDP did not meet the duality-gap contract: gap "
       << r.duality_gap << " after " << sol.iterations << " iterations";
    throw SolverFailure(os.str(), r);
  }
  return r;
}

Witness extract_optimal_witness(const EwResult& result) { return result.witness; }

double witness_product_minimum(const Witness& w, const std::vector<int>& dims,
                               const Bipartition& cut, int samples,
                               std::uint64_t seed) {
  validate_cut(cut, static_cast<int>(dims.size()));
  std::vector<bool> on_a(dims.size(), false);
  for (int s : cut.side) on_a[s] = true;
  int da = 1, db = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) (on_a[k] ? da : db) *= dims[k];

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  auto haar = [&](int d) {
    ComplexVector v(d);
    for (int i = 0; i < d; ++i) v(i) = Complex(normal(rng), normal(rng));
    return ComplexVector(v / v.norm());
  };

  // Map (a, b) digits back to the full big-endian index.
  const int n = w.op.dim();
  std::vector<int> index_of(n);
  {
    std::vector<int> digits(dims.size());
    for (int flat = 0; flat < n; ++flat) {
      int rem = flat;
      for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
        digits[k] = rem % dims[k];
        rem /= dims[k];
      }
      int ia = 0, ib = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) {
        if (on_a[k]) ia = ia * dims[k] + digits[k];
        else ib = ib * dims[k] + digits[k];
      }
      index_of[ia * db + ib] = flat;
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const ComplexVector a = haar(da);
    const ComplexVector b = haar(db);
    ComplexVector psi(n);
    for (int ia = 0; ia < da; ++ia)
      for (int ib = 0; ib < db; ++ib) psi(index_of[ia * db + ib]) = a(ia) * b(ib);
    best = std::min(best, (psi.adjoint() * w.op.matrix() * psi)(0, 0).real());
  }
  return best;
}

BipartitionScan ew_bipartition_scan(const DensityMatrix& rho,
                                    const std::vector<Bipartition>& cuts,
                                    const EwOptions& options) {
  if (cuts.empty()) throw std::invalid_argument("partition spec is empty");
  BipartitionScan out;
  out.minimum = std::numeric_limits<double>::infinity();
  for (const auto& cut : cuts) {
    out.per_cut.push_back(witnessed_entanglement(rho, cut, options));
    out.minimum = std::min(out.minimum, out.per_cut.back().value);
    out.exact = out.exact && out.per_cut.back().exact;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

double StatePath::max_step() const {
  double m = 0.0;
  for (std::size_t i = 1; i < states.size(); ++i)
    m = std::max(m, frob_dist(states[i - 1].op(), states[i].op()));
  return m;
}

namespace {

std::vector<double> inclusive_grid(double lo, double hi, int points) {
  if (points < 2 || !(hi > lo)) throw std::invalid_argument("invalid path grid");
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * i / (points - 1);
  g.back() = hi;
  return g;
}

}  // namespace

StatePath gibbs_path(const XYZCouplings& c, double t_min, double t_max, int points) {
  StatePath p;
  p.params = inclusive_grid(t_min, t_max, points);
  const HermitianOperator h = build_xyz(c);
  for (double t : p.params) p.states.push_back(gibbs_state(h, InverseTemperature(t)));
  return p;
}

StatePath linear_mix_path(const DensityMatrix& a, const DensityMatrix& b,
                          double t_min, double t_max, int points) {
  if (t_min < 0.0 || t_max > 1.0) {
    throw std::invalid_argument("mixing parameter must stay within [0, 1]");
  }
  StatePath p;
  p.params = inclusive_grid(t_min, t_max, points);
  for (double t : p.params) p.states.push_back(DensityMatrix::mix(b, a, t));
  return p;
}

PathReport track_witness_path(const StatePath& path, const TrackOptions& options) {
  if (path.params.size() != path.states.size() || path.states.empty()) {
    throw std::invalid_argument("path parameters and states must align");
  }
  const std::size_t n = path.states.size();
  PathReport report;
  report.points.resize(n);

  std::optional<ComplexMatrix> last_direction;
  bool smooth_since_last = true;

  for (std::size_t i = 0; i < n; ++i) {
    PathPoint& pt = report.points[i];
    pt.t = path.params[i];
    if (i > 0 && frob_dist(path.states[i - 1].op(), path.states[i].op()) >=
                     options.delta_smooth) {
      smooth_since_last = false;
    }
    try {
      const EwResult r = witnessed_entanglement(path.states[i], {{0}}, options.ew);
      pt.solved = true;
      pt.value = r.value;
      pt.duality_gap = r.duality_gap;
      pt.witness = r.witness.op;
    } catch (const SolverFailure& failure) {
      pt.solved = false;
      pt.value = failure.best().value;
      pt.duality_gap = failure.best().duality_gap;
      report.complete = false;
      continue;
    }

    const double norm = pt.witness->matrix().norm();
    if (pt.value <= options.trivial_value || norm == 0.0) continue;
    const ComplexMatrix direction = pt.witness->matrix() / norm;
    if (last_direction) {
      pt.witness_jump = (direction - *last_direction).norm();
      if (pt.witness_jump > options.theta_w && smooth_since_last) {
        pt.flagged = true;
        report.flags.push_back(i);
      }
    }
    last_direction = direction;
    smooth_since_last = true;
  }

  for (std::size_t i = 0; i < n; ++i) {
    auto& p = report.points[i];
    if (i > 0) {
      p.slope_left = (p.value - report.points[i - 1].value) /
                     (p.t - report.points[i - 1].t);
    }
    if (i + 1 < n) {
      p.slope_right = (report.points[i + 1].value - p.value) /
                      (report.points[i + 1].t - p.t);
    }
  }
  // Kinks: interior points whose slope change exceeds the threshold, one per
  // run of consecutive candidates.
  std::optional<std::size_t> best;
  double best_change = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const auto& p = report.points[i];
    const double change = std::abs(p.slope_right - p.slope_left);
    if (change > options.kink_threshold) {
      if (!best || change > best_change) {
        best = i;
        best_change = change;
      }
      continue;
    }
    if (best) report.kinks.push_back(*best);
    best.reset();
    best_change = 0.0;
  }
  if (best) report.kinks.push_back(*best);
  return report;
}

}  // namespace thermoent
