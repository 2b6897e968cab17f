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

#include "oam/check.hpp"

#include <algorithm>
#include <cmath>

namespace oam {

namespace {

constexpr int kBuiltKs = 10;       // iteration indices probed per suite
constexpr int kCertifiedPoints = 24;

Vector gaussian(Eigen::Index d, std::mt19937& rng, double scale) {
  std::normal_distribution<double> dist(0.0, scale);
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = dist(rng);
  return v;
}

struct Workspace {
  std::vector<CutterOp> c_ops;
  std::vector<CutterOp> q_ops;
  std::vector<Vector> xs;          // random probes in H1
  std::vector<Vector> ys;          // random probes in H2
  std::vector<Vector> feasible;    // certified points of S (may be empty)
  std::vector<Vector> q_pullback_feasible;  // certified points of A^{-1}(Q)
  bool oracle_representable = false;
};

bool pullbackable(const Problem& problem) {
  if (!problem.split()) return true;
  if (!is_diagonal(*problem.a)) return false;
  for (const auto& q : problem.q_sets) {
    if (!std::holds_alternative<Box>(q) && !std::holds_alternative<HalfSpace>(q)) {
      return false;
    }
  }
  return true;
}

Workspace make_workspace(const Problem& problem, int samples,
                         std::uint64_t seed) {
  Workspace ws;
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  for (const auto& set : problem.c_sets) ws.c_ops.push_back(cutter_for(set));
  for (const auto& set : problem.q_sets) ws.q_ops.push_back(cutter_for(set));

  ws.xs.reserve(static_cast<size_t>(samples));
  for (int i = 0; i < samples; ++i) ws.xs.push_back(gaussian(problem.d1, rng, 2.0));
  if (problem.split()) {
    ws.ys.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) ws.ys.push_back(gaussian(problem.d2, rng, 2.0));
  }

  ws.oracle_representable = pullbackable(problem);
  if (ws.oracle_representable) {
    std::vector<ConvexSet> all = problem.c_sets;
    std::vector<ConvexSet> pullbacks;
    if (problem.split()) {
      for (const auto& q : problem.q_sets) {
        pullbacks.push_back(pullback(*problem.a, q));
      }
      all.insert(all.end(), pullbacks.begin(), pullbacks.end());
    }
    for (int i = 0; i < kCertifiedPoints; ++i) {
      Vector x = gaussian(problem.d1, rng, 2.0);
      ws.feasible.push_back(dykstra_project(all, x, 1e-11));
      if (!pullbacks.empty()) {
        ws.q_pullback_feasible.push_back(dykstra_project(pullbacks, x, 1e-11));
      }
    }
  }
  return ws;
}

double worst_cutter(const CutterOp& op, const std::vector<Vector>& zs,
                    const std::vector<Vector>& xs) {
  double worst = 0;
  for (const Vector& x : xs) {
    Vector ux = op(x);
    for (const Vector& z : zs) {
      worst = std::max(worst, (z - ux).dot(x - ux));
    }
  }
  return worst;
}

std::vector<Vector> witness_points(const CutterOp& op, std::mt19937& rng,
                                   int count) {
  std::vector<Vector> zs;
  if (!op.fix_witness) return zs;
  zs.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) zs.push_back(op.fix_witness(rng));
  return zs;
}

}  // namespace

std::vector<SuiteResult> run_invariant_suites(const Problem& problem,
                                              const SolveOptions& options,
                                              int samples, std::uint64_t seed) {
  if (samples <= 0) throw ConfigError("samples must be positive");
  validate_problem(problem);

  Workspace ws = make_workspace(problem, samples, seed);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed ^ 0x9e3779b9u));

  // Exercises the configured builder chain exactly as the solver does.
  LandweberDiagnostics diag;
  std::shared_ptr<const LinearMap> a_shared;
  if (!ws.q_ops.empty()) a_shared = std::make_shared<LinearMap>(*problem.a);
  auto built_at = [&](int k) {
    const bool alternating =
        options.variant.kind == VariantConfig::Kind::Alternating &&
        !ws.c_ops.empty() && !ws.q_ops.empty();
    int inner = alternating ? k / 2 : k;
    std::optional<CutterOp> uk;
    if (!ws.c_ops.empty()) {
      uk = build_Uk(ws.c_ops, options.control_c, options.uk_mode, inner).op;
    }
    std::optional<LandweberOp> vk;
    if (!ws.q_ops.empty()) {
      BuiltOp v = build_Uk(ws.q_ops, options.control_q, options.uk_mode, inner);
      vk = make_landweber(std::move(v.op), a_shared, options.variant.sigma,
                          &diag);
    }
    struct Built {
      std::optional<CutterOp> uk;
      std::optional<LandweberOp> vk;
      CutterOp tk;
    };
    return Built{uk, vk, build_Tk(options.variant, uk, vk, k)};
  };

  std::vector<SuiteResult> results;

  {  // Cutter inequality for every per-set operator and the built T_k.
    SuiteResult r;
    r.name = "cutter";
    r.tol = 1e-9;
    for (const auto& op : ws.c_ops) {
      r.worst = std::max(r.worst, worst_cutter(op, witness_points(op, rng, 8), ws.xs));
    }
    for (const auto& op : ws.q_ops) {
      r.worst = std::max(r.worst, worst_cutter(op, witness_points(op, rng, 8), ws.ys));
    }
    if (!ws.feasible.empty()) {
      for (int k = 0; k < kBuiltKs; ++k) {
        r.worst = std::max(r.worst, worst_cutter(built_at(k).tk, ws.feasible, ws.xs));
      }
    } else {
      r.note = "built T_k skipped: no certified points of S";
    }
    r.pass = r.worst <= r.tol;
    results.push_back(std::move(r));
  }

  {  // SQNE inequality at each operator's computed modulus.
    SuiteResult r;
    r.name = "sqne";
    r.tol = 1e-8;
    auto run = [&](const CutterOp& op, const std::vector<Vector>& zs,
                   const std::vector<Vector>& xs) {
      if (zs.empty()) return;
      r.worst = std::max(r.worst, sqne_check(op, zs, xs).max_violation);
    };
    for (const auto& op : ws.c_ops) run(op, witness_points(op, rng, 8), ws.xs);
    for (const auto& op : ws.q_ops) run(op, witness_points(op, rng, 8), ws.ys);
    if (!ws.feasible.empty()) {
      for (int k = 0; k < kBuiltKs; ++k) {
        auto built = built_at(k);
        if (built.uk && !problem.c_sets.empty()) {
          run(*built.uk, ws.feasible, ws.xs);
        }
        if (built.vk && !ws.q_pullback_feasible.empty()) {
          run(as_cutter(*built.vk), ws.q_pullback_feasible, ws.xs);
        }
        run(built.tk, ws.feasible, ws.xs);
      }
    } else {
      r.note = "built operators skipped: no certified points of S";
    }
    r.pass = r.worst <= r.tol;
    results.push_back(std::move(r));
  }

  {  // tau >= 1 on random residuals and on residuals the iteration produces.
    SuiteResult r;
    r.name = "tau_ge_1";
    r.tol = 1e-12;
    if (!problem.split()) {
      r.skipped = true;
      r.note = "no split part";
    } else {
      for (const Vector& y : ws.ys) {
        r.worst = std::max(r.worst, 1.0 - tau(*problem.a, y));
      }
      for (const Vector& x : ws.xs) {
        auto built = built_at(0);
        Vector ax = apply(*problem.a, x);
        Vector residual = built.vk->inner(ax) - ax;
        r.worst = std::max(r.worst, 1.0 - tau(*problem.a, residual));
      }
      r.pass = r.worst <= r.tol;
    }
    results.push_back(std::move(r));
  }

  {  // S is contained in every constructed half-space H_k.
    SuiteResult r;
    r.name = "halfspace_containment";
    r.tol = 1e-9;
    if (ws.feasible.empty()) {
      r.skipped = true;
      r.note = "no certified points of S";
    } else {
      int count = std::min<int>(static_cast<int>(ws.xs.size()), 200);
      for (int i = 0; i < count; ++i) {
        const Vector& u = ws.xs[static_cast<size_t>(i)];
        CutterOp tk = built_at(i % (2 * kBuiltKs)).tk;
        Vector t = tk(u);
        if ((t - u).norm() <= 1e-14) continue;  // whole space: contains S
        for (const Vector& z : ws.feasible) {
          r.worst = std::max(r.worst, (u - t).dot(z - t));
        }
      }
      r.pass = r.worst <= r.tol;
    }
    results.push_back(std::move(r));
  }

  {  // fix L{V_k} = A^{-1}(fix V_k) on diagonal-A problems.
    SuiteResult r;
    r.name = "landweber_fix";
    r.tol = 1e-8;
    if (!problem.split() || ws.q_pullback_feasible.empty()) {
      r.skipped = true;
      r.note = problem.split() ? "A is not diagonal or Q not pullbackable"
                               : "no split part";
    } else {
      for (int k = 0; k < kBuiltKs; ++k) {
        auto built = built_at(k);
        if (!built.vk) continue;
        for (const Vector& z : ws.q_pullback_feasible) {
          r.worst =
              std::max(r.worst, (landweber_apply(*built.vk, z) - z).norm());
        }
      }
      r.pass = r.worst <= r.tol;
    }
    results.push_back(std::move(r));
  }

  {  // relax(W, (1+rho)/2) of every built rho-SQNE operator is a cutter.
    SuiteResult r;
    r.name = "half_relaxation_cutter";
    r.tol = 1e-9;
    if (ws.feasible.empty()) {
      r.skipped = true;
      r.note = "no certified points of S";
    } else {
      for (int k = 0; k < kBuiltKs; ++k) {
        auto built = built_at(k);
        if (built.uk && !problem.c_sets.empty()) {
          CutterOp half = relax(*built.uk, (1.0 + built.uk->rho) / 2.0);
          r.worst = std::max(r.worst, worst_cutter(half, ws.feasible, ws.xs));
        }
        if (built.vk && !ws.q_pullback_feasible.empty()) {
          CutterOp lw = as_cutter(*built.vk);
          CutterOp half = relax(lw, (1.0 + lw.rho) / 2.0);
          r.worst = std::max(r.worst,
                             worst_cutter(half, ws.q_pullback_feasible, ws.xs));
        }
      }
      r.pass = r.worst <= r.tol;
    }
    results.push_back(std::move(r));
  }

  return results;
}

bool all_pass(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.skipped || r.pass; });
}

}  // namespace oam
