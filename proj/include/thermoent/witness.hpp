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

// Witnessed entanglement under the witness set {W : W <= I, W decomposable
// across the cut}, i.e. the generalized robustness relative to PPT states:
//
//   E_W(rho) = min Tr(D)  s.t.  D >= 0,  (rho + D)^{T_A} >= 0
//            = max(0, max { -Tr(W rho) : W = Y^{T_A}, Y >= 0, W <= I }).
//
// PPT coincides with separability for 2x2 and 2x3, so the value is exact
// there and a lower bound on the separable-set robustness otherwise.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "thermoent/quantum.hpp"

namespace thermoent {

enum class WitnessConstraint { OpBoundedByIdentity };

struct Witness {
  HermitianOperator op;
  WitnessConstraint constraint_tag = WitnessConstraint::OpBoundedByIdentity;
};

/// Subsystems on the transposed side of a bipartition.
struct Bipartition {
  std::vector<int> side;
};

/// Checks that both sides are non-empty and indices are valid.
void validate_cut(const Bipartition& cut, int num_subsystems);

/// Every bipartition of n subsystems once: sides of size <= n/2, and for
/// even n the half-size sides that contain subsystem 0.
std::vector<Bipartition> all_bipartitions(int num_subsystems);

struct EwOptions {
  int max_iterations = 200;
  /// Success contract on |primal - dual| of the certified pair.
  double gap_contract = 1e-6;
};

struct EwResult {
  /// max(0, -Tr(W rho)) for the certified witness.
  double value = 0.0;
  Witness witness;
  double duality_gap = 0.0;
  int iterations = 0;
  /// Tr(D) of the certified feasible primal point.
  double primal_value = 0.0;
  /// -Tr(W rho).
  double dual_value = 0.0;
  /// PPT equals separability for this cut.
  bool exact = true;
  bool converged = true;
  Bipartition cut;
};

/// Thrown when the gap contract is not met; carries the best certified pair.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, EwResult best)
      : std::runtime_error(what), best_(std::move(best)) {}
  const EwResult& best() const noexcept { return best_; }

 private:
  EwResult best_;
};

/// Two-qubit default cut transposes subsystem 0.
EwResult witnessed_entanglement(const DensityMatrix& rho,
                                const Bipartition& cut = {{0}},
                                const EwOptions& options = {});

Witness extract_optimal_witness(const EwResult& result);

/// min Tr(W sigma) over `samples` Haar-random pure states that are product
/// across the cut. Deterministic for a given seed.
double witness_product_minimum(const Witness& w, const std::vector<int>& dims,
                               const Bipartition& cut, int samples,
                               std::uint64_t seed);

struct BipartitionScan {
  std::vector<EwResult> per_cut;
  /// Smallest per-cut value: positive only if every cut is entangled.
  double minimum = 0.0;
  bool exact = true;
};

BipartitionScan ew_bipartition_scan(const DensityMatrix& rho,
                                    const std::vector<Bipartition>& cuts,
                                    const EwOptions& options = {});

// ---------------------------------------------------------------------------
// Path tracking
// ---------------------------------------------------------------------------

struct StatePath {
  std::vector<double> params;
  std::vector<DensityMatrix> states;

  /// Largest Frobenius distance between consecutive states.
  double max_step() const;
};

/// gibbs(build_xyz(c), t) for t on an inclusive grid.
StatePath gibbs_path(const XYZCouplings& c, double t_min, double t_max, int points);

/// (1 - t) a + t b for t on an inclusive grid within [0, 1].
StatePath linear_mix_path(const DensityMatrix& a, const DensityMatrix& b,
                          double t_min, double t_max, int points);

struct TrackOptions {
  /// Jump threshold on Frobenius-normalized witnesses.
  double theta_w = 0.5;
  /// Consecutive-state distance below which the path counts as smooth.
  double delta_smooth = 0.05;
  /// Slope change along the grid reported as a kink in E_W.
  double kink_threshold = 0.5;
  /// E_W below this carries no witness direction.
  double trivial_value = 1e-8;
  EwOptions ew;
};

struct PathPoint {
  double t = 0.0;
  bool solved = false;
  double value = 0.0;
  double duality_gap = 0.0;
  std::optional<HermitianOperator> witness;
  /// Distance between this normalized witness and the previous non-trivial
  /// one (0 when either is trivial).
  double witness_jump = 0.0;
  bool flagged = false;
  /// Backward / forward difference quotients of E_W along the grid.
  double slope_left = 0.0;
  double slope_right = 0.0;
};

struct PathReport {
  std::vector<PathPoint> points;
  /// Indices flagged as geometric-transition candidates.
  std::vector<std::size_t> flags;
  /// Indices where E_W has a kink (largest slope change per cluster).
  std::vector<std::size_t> kinks;
  /// False when any solve failed; those points have solved == false.
  bool complete = true;
};

/// Solves E_W along the path and flags point i when its optimal witness
/// direction differs by more than theta_w from the most recent non-trivial
/// witness while every intermediate step moved rho by less than
/// delta_smooth. Trivial (zero) witnesses carry no direction, so entering
/// or leaving the separable region alone never raises a flag.
PathReport track_witness_path(const StatePath& path, const TrackOptions& options = {});

}  // namespace thermoent
