// Copyright 2026 The oam authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OAM_SOLVER_HPP
#define OAM_SOLVER_HPP

#include <optional>
#include <string>

#include "oam/composition.hpp"
#include "oam/oracle.hpp"

namespace oam {

// Outer approximation iteration
//
//   u_{k+1} = R_k(u_k - lambda_k F(u_k)),
//   R_k     = id + alpha_k (P_{H_k} - id),
//   H_k     = {z : <u_k - T_k(u_k), z - T_k(u_k)> <= 0},
//
// for an L-Lipschitz, strongly monotone F over S = C cap A^{-1}(Q). T_k comes
// from the variant builders; each H_k contains S because T_k is a cutter.

/// Strongly monotone Lipschitz operator with certified constants:
/// ToPoint: F(x) = x - a (L = alpha = 1); Affine: F(x) = M x + q.
struct MonotoneMap {
  enum class Kind { ToPoint, Affine } kind = Kind::ToPoint;
  Vector a;  // ToPoint target
  Matrix m;
  Vector q;
  double lipschitz = 1;        // upper bound on L
  double strong_monotone = 1;  // lower bound on alpha

  Vector operator()(const Vector& x) const;
};

MonotoneMap to_point_map(Vector a);

/// Constants via the certified norm bound: L = norm_ub(M) and
/// alpha = sigma - norm_ub(sigma I - (M + M^T)/2) with sigma = norm_ub of the
/// symmetric part. Throws ConfigError when the lower bound is not positive.
MonotoneMap affine_map(Matrix m, Vector q);

/// lambda_k = lambda0 / (k+1)^p with lambda0 > 0, p in (0, 1]: a null,
/// non-summable sequence.
struct StepSchedule {
  double lambda0 = 1.0;
  double p = 1.0;
  double at(int k) const;
};

StepSchedule make_schedule(double lambda0, double p);

struct TraceRecord {
  int k = 0;
  double lambda = 0;
  double step_norm = 0;
  double max_dist_c = 0;
  double max_dist_q = 0;
  double tk_residual = 0;
  std::optional<double> dist_to_ref;
};

struct Problem {
  std::vector<ConvexSet> c_sets;
  std::optional<LinearMap> a;
  std::vector<ConvexSet> q_sets;
  MonotoneMap f;
  int d1 = 0;
  int d2 = 0;

  bool split() const { return !q_sets.empty(); }
};

/// Dimension and mode consistency; throws ConfigError with the offending part.
void validate_problem(const Problem& problem);

struct SolverState {
  int k = 0;
  Vector u;
  double lambda = 1.0;
  double alpha = 1.0;
  HalfSpaceOrWhole last_halfspace = WholeSpace{};
  std::vector<TraceRecord> trace;
};

/// u - lambda F(u); requires lambda >= 0.
Vector gradient_step(const MonotoneMap& f, const Vector& u, double lambda);

/// One iteration: cuts H_k from T_k(u_k) (whole space when the residual is
/// below 1e-14), takes the gradient step and the alpha-relaxed projection,
/// and appends the trace record. Throws DivergenceError on non-finite
/// iterates; the state (including the trace) stays intact for dumping.
void oam_step(SolverState& state, const Problem& problem, const CutterOp& tk,
              const std::optional<Vector>& ref = std::nullopt);

struct SolveOptions {
  VariantConfig variant;
  UkMode uk_mode = UkMode::Simultaneous;
  Control control_c;
  Control control_q;
  StepSchedule schedule;
  double alpha = 1.0;
  double epsilon = 0.1;  // admissible relaxation band [eps, 2 - eps]
  int max_iter = 10000;
  double tol_step = 0;      // 0 disables the stall test
  double tol_residual = 0;  // 0 disables the residual test
  Vector u0;                // empty: zeros(d1)
  std::optional<Vector> reference;
};

struct SolveResult {
  Vector u;
  std::vector<TraceRecord> trace;
  int iterations = 0;
  bool diverged = false;
  std::string message;
  LandweberDiagnostics diagnostics;
};

/// Runs the outer approximation method, building T_k per variant at every
/// iteration. Deterministic given the configuration; stopping is best-effort
/// (the trace always reports residuals) and the trace is never truncated.
SolveResult solve(const Problem& problem, const SolveOptions& options);

/// For F(x) = x - a the unique solution is P_S(a); computed by the Dykstra
/// oracle over the C sets and the diagonal pullbacks of the Q sets. Throws
/// ConfigError for unsupported shapes (non-ToPoint F, non-diagonal A).
Vector vi_solution_oracle_identity(const Problem& problem, double tol = 1e-10);

}  // namespace oam

#endif  // OAM_SOLVER_HPP
