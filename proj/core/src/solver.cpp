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

#include "oam/solver.hpp"

#include <cmath>

namespace oam {

Vector MonotoneMap::operator()(const Vector& x) const {
  switch (kind) {
    case Kind::ToPoint:
      if (x.size() != a.size()) throw ShapeError("MonotoneMap: dim mismatch");
      return x - a;
    case Kind::Affine:
      if (x.size() != m.cols()) throw ShapeError("MonotoneMap: dim mismatch");
      return m * x + q;
  }
  throw ConfigError("MonotoneMap: unknown kind");
}

MonotoneMap to_point_map(Vector a) {
  if (!a.allFinite()) throw ConfigError("F.a must be finite");
  MonotoneMap f;
  f.kind = MonotoneMap::Kind::ToPoint;
  f.a = std::move(a);
  f.lipschitz = 1.0;
  f.strong_monotone = 1.0;
  return f;
}

MonotoneMap affine_map(Matrix m, Vector q) {
  if (m.rows() != m.cols() || m.rows() != q.size()) {
    throw ConfigError("F.M must be square with F.q of matching dim");
  }
  if (!m.allFinite() || !q.allFinite()) {
    throw ConfigError("F.M and F.q must be finite");
  }
  MonotoneMap f;
  f.kind = MonotoneMap::Kind::Affine;
  f.lipschitz = norm_upper_bound(m);
  Matrix sym = 0.5 * (m + m.transpose());
  if (sym.isZero(0.0)) {
    throw ConfigError(
        "F.M is not certifiably strongly monotone (symmetric part is zero)");
  }
  double shift = norm_upper_bound(sym);
  Matrix shifted = shift * Matrix::Identity(m.rows(), m.cols()) - sym;
  double alpha = shifted.isZero(0.0) ? shift : shift - norm_upper_bound(shifted);
  if (!(alpha > 0)) {
    throw ConfigError("F.M is not certifiably strongly monotone "
                      "(lower bound on the symmetric-part spectrum is " +
                      std::to_string(alpha) + ")");
  }
  f.strong_monotone = alpha;
  f.m = std::move(m);
  f.q = std::move(q);
  return f;
}

double StepSchedule::at(int k) const {
  return lambda0 / std::pow(static_cast<double>(k) + 1.0, p);
}

StepSchedule make_schedule(double lambda0, double p) {
  if (!(p > 0) || p > 1) throw ConfigError("p must lie in (0,1]");
  if (!(lambda0 > 0)) throw ConfigError("lambda0 must be > 0");
  StepSchedule s;
  s.lambda0 = lambda0;
  s.p = p;
  return s;
}

void validate_problem(const Problem& problem) {
  if (problem.d1 <= 0) throw ConfigError("problem.d1 must be positive");
  for (const auto& set : problem.c_sets) {
    if (dim(set) != problem.d1) {
      throw ConfigError("problem.C: set dimension does not match d1");
    }
  }
  if (problem.split()) {
    if (!problem.a) throw ConfigError("problem.Q requires the map problem.A");
    if (problem.a->is_zero()) {
      throw ConfigError("Landweber requires nonzero A");
    }
    if (problem.a->cols() != problem.d1) {
      throw ConfigError("problem.A: cols must equal d1");
    }
    if (problem.d2 <= 0 || problem.a->rows() != problem.d2) {
      throw ConfigError("problem.A: rows must equal d2");
    }
    for (const auto& set : problem.q_sets) {
      if (dim(set) != problem.d2) {
        throw ConfigError("problem.Q: set dimension does not match d2");
      }
    }
  } else if (problem.a) {
    throw ConfigError("problem.A is given but problem.Q is empty");
  }
  if (problem.c_sets.empty() && problem.q_sets.empty()) {
    throw ConfigError("problem: needs at least one constraint set");
  }
  switch (problem.f.kind) {
    case MonotoneMap::Kind::ToPoint:
      if (problem.f.a.size() != problem.d1) {
        throw ConfigError("problem.F: dimension does not match d1");
      }
      break;
    case MonotoneMap::Kind::Affine:
      if (problem.f.m.cols() != problem.d1) {
        throw ConfigError("problem.F: dimension does not match d1");
      }
      break;
  }
}

Vector gradient_step(const MonotoneMap& f, const Vector& u, double lambda) {
  if (lambda < 0) throw std::domain_error("gradient_step: lambda must be >= 0");
  if (lambda == 0) return u;
  return u - lambda * f(u);
}

void oam_step(SolverState& state, const Problem& problem, const CutterOp& tk,
              const std::optional<Vector>& ref) {
  Vector t = tk(state.u);
  if (!is_finite(t)) {
    throw DivergenceError("oam_step: non-finite cutter image at k = " +
                          std::to_string(state.k));
  }
  double tk_residual = (t - state.u).norm();
  if (tk_residual <= 1e-14) {
    state.last_halfspace = WholeSpace{};
  } else {
    Vector normal = state.u - t;
    state.last_halfspace = HalfSpace(normal, normal.dot(t));
  }

  Vector v = gradient_step(problem.f, state.u, state.lambda);
  Vector projected = project(state.last_halfspace, v);
  Vector u_next = v + state.alpha * (projected - v);
  if (!is_finite(u_next)) {
    throw DivergenceError("oam_step: non-finite iterate at k = " +
                          std::to_string(state.k));
  }

  ResidualPair res =
      residuals(problem.c_sets, problem.a ? &*problem.a : nullptr,
                problem.q_sets, state.u);
  TraceRecord record;
  record.k = state.k;
  record.lambda = state.lambda;
  record.step_norm = (u_next - state.u).norm();
  record.max_dist_c = res.max_dist_c;
  record.max_dist_q = res.max_dist_q;
  record.tk_residual = tk_residual;
  if (ref) record.dist_to_ref = (state.u - *ref).norm();
  state.trace.push_back(record);

  state.u = std::move(u_next);
  ++state.k;
}

SolveResult solve(const Problem& problem, const SolveOptions& options) {
  validate_problem(problem);
  if (!(options.epsilon > 0 && options.epsilon < 1)) {
    throw ConfigError("epsilon must lie in (0, 1)");
  }
  if (options.alpha < options.epsilon ||
      options.alpha > 2.0 - options.epsilon) {
    throw ConfigError("alpha must lie in [epsilon, 2 - epsilon]");
  }
  if (options.max_iter < 0) throw ConfigError("max_iter must be >= 0");
  make_schedule(options.schedule.lambda0, options.schedule.p);

  std::vector<CutterOp> c_ops;
  c_ops.reserve(problem.c_sets.size());
  for (const auto& set : problem.c_sets) c_ops.push_back(cutter_for(set));
  std::vector<CutterOp> q_ops;
  q_ops.reserve(problem.q_sets.size());
  for (const auto& set : problem.q_sets) q_ops.push_back(cutter_for(set));
  if (!c_ops.empty()) validate_control(options.control_c);
  if (!q_ops.empty()) validate_control(options.control_q);

  SolveResult result;
  SolverState state;
  state.u = options.u0.size() == 0 ? Vector::Zero(problem.d1) : options.u0;
  if (state.u.size() != problem.d1) {
    throw ConfigError("u0 dimension does not match d1");
  }
  if (!is_finite(state.u)) throw ConfigError("u0 must be finite");
  if (options.reference && options.reference->size() != problem.d1) {
    throw ConfigError("reference dimension does not match d1");
  }
  state.alpha = options.alpha;

  const bool both_sides = !c_ops.empty() && !q_ops.empty();
  const bool alternating =
      options.variant.kind == VariantConfig::Kind::Alternating && both_sides;
  std::shared_ptr<const LinearMap> a_shared;
  if (!q_ops.empty()) a_shared = std::make_shared<LinearMap>(*problem.a);

  double prev_surrogate = -1;
  for (int k = 0; k < options.max_iter; ++k) {
    // The alternating variant consumes one inner operator pair per two
    // global steps.
    int inner = alternating ? k / 2 : k;
    std::optional<CutterOp> uk;
    if (!c_ops.empty()) {
      uk = build_Uk(c_ops, options.control_c, options.uk_mode, inner).op;
    }
    std::optional<LandweberOp> vk;
    if (!q_ops.empty()) {
      BuiltOp v = build_Uk(q_ops, options.control_q, options.uk_mode, inner);
      vk = make_landweber(std::move(v.op), a_shared, options.variant.sigma,
                          &result.diagnostics);
    }
    CutterOp tk = build_Tk(options.variant, uk, vk, k);

    state.lambda = options.schedule.at(k);
    try {
      oam_step(state, problem, tk, options.reference);
    } catch (const DivergenceError& err) {
      result.u = state.u;
      result.trace = std::move(state.trace);
      result.iterations = state.k;
      result.diverged = true;
      result.message = err.what();
      return result;
    }

    const TraceRecord& rec = state.trace.back();
    if (options.tol_residual > 0 && options.tol_step > 0 && rec.lambda > 0) {
      double surrogate = rec.step_norm / rec.lambda;
      bool residual_ok = rec.max_dist_c <= options.tol_residual &&
                         rec.max_dist_q <= options.tol_residual;
      bool stalled = prev_surrogate >= 0 &&
                     std::abs(surrogate - prev_surrogate) <=
                         options.tol_step * (1.0 + std::abs(surrogate));
      prev_surrogate = surrogate;
      if (residual_ok && stalled) break;
    }
  }

  result.u = state.u;
  result.trace = std::move(state.trace);
  result.iterations = state.k;
  return result;
}

Vector vi_solution_oracle_identity(const Problem& problem, double tol) {
  validate_problem(problem);
  if (problem.f.kind != MonotoneMap::Kind::ToPoint) {
    throw ConfigError("oracle: F must be of to_point kind");
  }
  std::vector<ConvexSet> sets = problem.c_sets;
  if (problem.split()) {
    if (!is_diagonal(*problem.a)) {
      throw ConfigError("oracle: A must be diagonal (or absent)");
    }
    for (const auto& q : problem.q_sets) {
      sets.push_back(pullback(*problem.a, q));
    }
  }
  return dykstra_project(sets, problem.f.a, tol);
}

}  // namespace oam
