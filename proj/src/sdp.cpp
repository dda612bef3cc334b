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

#include "sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace thermoent::sdp {

namespace {

using Blocks = std::vector<ComplexMatrix>;

double inner(const Blocks& a, const Blocks& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    s += (a[k].array() * b[k].conjugate().array()).sum().real();
  return s;
}

double apply_constraint(const SparseHermitian& a, const Blocks& x) {
  // Re Tr(A X) = Re sum_{r,c} A(r,c) X(c,r).
  double s = 0.0;
  for (const Entry& e : a) s += (e.value * x[e.block](e.col, e.row)).real();
  return s;
}

Blocks hermitian_part(const Blocks& a) {
  Blocks out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = (a[k] + a[k].adjoint()) * 0.5;
  return out;
}

// Largest alpha with X + alpha dX still positive semidefinite.
double max_step(const Blocks& x, const Blocks& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<ComplexMatrix> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    const ComplexMatrix l_inv = llt.matrixL().solve(
        ComplexMatrix::Identity(x[k].rows(), x[k].cols()));
    const ComplexMatrix m = l_inv * dx[k] * l_inv.adjoint();
    const double lmin = eig_hermitian(HermitianOperator::symmetrized(m)).min();
    if (lmin < 0.0) alpha = std::min(alpha, -1.0 / lmin);
  }
  return alpha;
}

Blocks inverse(const Blocks& z) {
  Blocks out(z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    Eigen::LLT<ComplexMatrix> llt(z[k]);
    if (llt.info() != Eigen::Success) {
      throw std::runtime_error("SDP iterate lost positive definiteness");
    }
    out[k] = llt.solve(ComplexMatrix::Identity(z[k].rows(), z[k].cols()));
    out[k] = (out[k] + out[k].adjoint()) * 0.5;
  }
  return out;
}

}  // namespace

std::vector<ComplexMatrix> adjoint_map(const Problem& problem, const RealVector& y) {
  Blocks out;
  for (int d : problem.block_dims) out.push_back(ComplexMatrix::Zero(d, d));
  for (std::size_t i = 0; i < problem.constraints.size(); ++i)
    for (const Entry& e : problem.constraints[i])
      out[e.block](e.row, e.col) += y(static_cast<Eigen::Index>(i)) * e.value;
  return out;
}

Solution solve(const Problem& problem, const Options& options) {
  const std::size_t nb = problem.block_dims.size();
  const auto m = static_cast<Eigen::Index>(problem.constraints.size());
  if (problem.cost.size() != nb || problem.rhs.size() != m) {
    throw std::invalid_argument("inconsistent SDP problem dimensions");
  }
  int total_dim = 0;
  for (int d : problem.block_dims) total_dim += d;

  // Dense copies of the constraint blocks for the Schur complement products.
  std::vector<Blocks> dense(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (int d : problem.block_dims) dense[i].push_back(ComplexMatrix::Zero(d, d));
    for (const Entry& e : problem.constraints[i])
      dense[i][e.block](e.row, e.col) += e.value;
  }

  auto constraint_map = [&](const Blocks& x) {
    RealVector out(m);
    for (Eigen::Index i = 0; i < m; ++i)
      out(i) = apply_constraint(problem.constraints[i], x);
    return out;
  };

  Solution s;
  Blocks& x = s.primal;
  Blocks& z = s.slack;
  RealVector& y = s.dual;
  for (int d : problem.block_dims) {
    x.push_back(ComplexMatrix::Identity(d, d) * options.initial_scale);
    z.push_back(ComplexMatrix::Identity(d, d) * options.initial_scale);
  }
  y = RealVector::Zero(m);

  const double b_norm = problem.rhs.norm();
  double c_norm = 0.0;
  for (const auto& c : problem.cost) c_norm += c.squaredNorm();
  c_norm = std::sqrt(c_norm);

  for (int iter = 0;; ++iter) {
    const RealVector rp = problem.rhs - constraint_map(x);
    const Blocks ay = adjoint_map(problem, y);
    Blocks rd(nb);
    for (std::size_t k = 0; k < nb; ++k) rd[k] = problem.cost[k] - ay[k] - z[k];

    s.primal_objective = inner(problem.cost, x);
    s.dual_objective = problem.rhs.dot(y);
    s.primal_infeasibility = rp.norm() / (1.0 + b_norm);
    double rd_norm = 0.0;
    for (const auto& r : rd) rd_norm += r.squaredNorm();
    s.dual_infeasibility = std::sqrt(rd_norm) / (1.0 + c_norm);
    s.iterations = iter;

    const double gap = std::abs(s.primal_objective - s.dual_objective);
    const double mu = inner(x, z) / total_dim;
    if (gap <= options.gap_tolerance *
                   (1.0 + std::abs(s.primal_objective) + std::abs(s.dual_objective)) &&
        s.primal_infeasibility <= options.feasibility_tolerance &&
        s.dual_infeasibility <= options.feasibility_tolerance) {
      s.converged = true;
      return s;
    }
    if (iter >= options.max_iterations) return s;

    const Blocks z_inv = inverse(z);

    // Schur complement M_ij = Re Tr(A_i X A_j Z^{-1}).
    Eigen::MatrixXd schur(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      Blocks g(nb);
      for (std::size_t k = 0; k < nb; ++k) g[k] = x[k] * dense[j][k] * z_inv[k];
      for (Eigen::Index i = 0; i < m; ++i)
        schur(i, j) = apply_constraint(problem.constraints[i], g);
    }
    schur = (schur + schur.transpose()).eval() * 0.5;
    Eigen::LLT<Eigen::MatrixXd> schur_llt(schur);
    const bool schur_ok = schur_llt.info() == Eigen::Success;
    Eigen::PartialPivLU<Eigen::MatrixXd> schur_lu;
    if (!schur_ok) schur_lu.compute(schur);
    auto schur_solve = [&](const RealVector& r) -> RealVector {
      return schur_ok ? RealVector(schur_llt.solve(r)) : RealVector(schur_lu.solve(r));
    };

    // X Rd Z^{-1}, shared by predictor and corrector.
    Blocks x_rd_zinv(nb);
    for (std::size_t k = 0; k < nb; ++k) x_rd_zinv[k] = x[k] * rd[k] * z_inv[k];

    struct Direction {
      Blocks dx, dz;
      RealVector dy;
    };
    auto direction = [&](double sigma_mu, const Blocks* correction) {
      Blocks k_rhs(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        k_rhs[k] = x[k] - sigma_mu * z_inv[k] + x_rd_zinv[k];
        if (correction) k_rhs[k] += (*correction)[k];
      }
      Direction d;
      d.dy = schur_solve(rp + constraint_map(k_rhs));
      const Blocks ady = adjoint_map(problem, d.dy);
      d.dz.resize(nb);
      d.dx.resize(nb);
      for (std::size_t k = 0; k < nb; ++k) {
        d.dz[k] = rd[k] - ady[k];
        d.dx[k] = sigma_mu * z_inv[k] - x[k] - x[k] * d.dz[k] * z_inv[k];
        if (correction) d.dx[k] -= (*correction)[k];
      }
      d.dx = hermitian_part(d.dx);
      d.dz = hermitian_part(d.dz);
      return d;
    };

    // Predictor.
    const Direction aff = direction(0.0, nullptr);
    const double ap_aff = std::min(1.0, max_step(x, aff.dx));
    const double ad_aff = std::min(1.0, max_step(z, aff.dz));
    Blocks x_aff(nb), z_aff(nb);
    for (std::size_t k = 0; k < nb; ++k) {
      x_aff[k] = x[k] + ap_aff * aff.dx[k];
      z_aff[k] = z[k] + ad_aff * aff.dz[k];
    }
    const double mu_aff = inner(x_aff, z_aff) / total_dim;
    const double sigma = std::clamp(std::pow(mu_aff / mu, 3.0), 0.0, 1.0);

    // Corrector with the second-order term dX_aff dZ_aff Z^{-1}.
    Blocks corr(nb);
    for (std::size_t k = 0; k < nb; ++k) corr[k] = aff.dx[k] * aff.dz[k] * z_inv[k];
    const Direction d = direction(sigma * mu, &corr);

    const double ap = std::min(1.0, options.step_fraction * max_step(x, d.dx));
    const double ad = std::min(1.0, options.step_fraction * max_step(z, d.dz));
    if (!(ap > 0.0) || !(ad > 0.0)) return s;
    for (std::size_t k = 0; k < nb; ++k) {
      x[k] += ap * d.dx[k];
      z[k] += ad * d.dz[k];
      x[k] = (x[k] + x[k].adjoint()).eval() * 0.5;
      z[k] = (z[k] + z[k].adjoint()).eval() * 0.5;
    }
    y += ad * d.dy;
  }
}

}  // namespace thermoent::sdp
