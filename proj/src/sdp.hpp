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

// Small dense complex-Hermitian SDP in block-diagonal standard form:
//
//   primal  min  <C, X>       s.t.  <A_i, X> = b_i,  X >= 0
//   dual    max  b^T y        s.t.  sum_i y_i A_i + Z = C,  Z >= 0
//
// with <A, X> = Re Tr(A X). Solved by an infeasible primal-dual path
// following method (HKM search direction, Mehrotra predictor-corrector).

#include <vector>

#include "thermoent/linalg.hpp"

namespace thermoent::sdp {

struct Entry {
  int block;
  int row;
  int col;
  Complex value;
};

/// A Hermitian constraint matrix stored as its non-zero entries (both
/// triangles).
using SparseHermitian = std::vector<Entry>;

struct Problem {
  std::vector<int> block_dims;
  std::vector<ComplexMatrix> cost;
  std::vector<SparseHermitian> constraints;
  RealVector rhs;
};

struct Options {
  int max_iterations = 200;
  double gap_tolerance = 1e-10;
  double feasibility_tolerance = 1e-10;
  double step_fraction = 0.98;
  double initial_scale = 10.0;
};

struct Solution {
  std::vector<ComplexMatrix> primal;  // X
  std::vector<ComplexMatrix> slack;   // Z
  RealVector dual;                    // y
  double primal_objective = 0.0;
  double dual_objective = 0.0;
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  bool converged = false;
};

Solution solve(const Problem& problem, const Options& options = {});

/// Dense block of sum_i y_i A_i.
std::vector<ComplexMatrix> adjoint_map(const Problem& problem, const RealVector& y);

}  // namespace thermoent::sdp
