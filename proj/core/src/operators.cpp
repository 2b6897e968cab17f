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

#include "oam/operators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace oam {

CutterOp relax(CutterOp op, double alpha) {
  if (!(alpha > 0)) throw std::domain_error("relax: alpha must be > 0");
  CutterOp out;
  out.rho = std::max(0.0, (1.0 + op.rho) / alpha - 1.0);
  out.fix_witness = op.fix_witness;
  out.eval = [inner = std::move(op.eval), alpha](const Vector& x) -> Vector {
    if (alpha == 1.0) return inner(x);
    return x + alpha * (inner(x) - x);
  };
  return out;
}

CutterOp metric_projection(ConvexSet set) {
  CutterOp op;
  op.rho = 1.0;
  op.eval = [set](const Vector& x) { return project(set, x); };
  op.fix_witness = [set](std::mt19937& rng) { return sample_point(set, rng); };
  return op;
}

CutterOp subgradient_projection(SubgradFn f) {
  CutterOp op;
  op.rho = 1.0;
  op.eval = [f = std::move(f)](const Vector& x) -> Vector {
    double fx = f.value(x);
    if (fx <= 0) return x;
    Vector g = f.subgrad(x);
    double g2 = g.squaredNorm();
    if (g2 == 0) {
      throw InfeasibleError(
          "subgradient_projection: zero subgradient at a point with f > 0; "
          "the sublevel set {f <= 0} is empty");
    }
    return x - (fx / g2) * g;
  };
  return op;
}

SubgradFn affine_sublevel_fn(const AffineSublevel& s) {
  SubgradFn f;
  f.value = [a = s.a, b = s.beta](const Vector& x) { return a.dot(x) - b; };
  f.subgrad = [a = s.a](const Vector&) { return a; };
  return f;
}

SubgradFn quad_sublevel_fn(const QuadSublevel& s) {
  SubgradFn f;
  f.value = [c = s.center, r = s.rsq](const Vector& x) {
    return (x - c).squaredNorm() - r;
  };
  f.subgrad = [c = s.center](const Vector& x) -> Vector {
    return 2.0 * (x - c);
  };
  return f;
}

CutterOp cutter_for(const ConvexSet& set) {
  if (const auto* aff = std::get_if<AffineSublevel>(&set)) {
    CutterOp op = subgradient_projection(affine_sublevel_fn(*aff));
    op.fix_witness = [set](std::mt19937& rng) {
      return sample_point(set, rng);
    };
    return op;
  }
  if (const auto* quad = std::get_if<QuadSublevel>(&set)) {
    CutterOp op = subgradient_projection(quad_sublevel_fn(*quad));
    op.fix_witness = [set](std::mt19937& rng) {
      return sample_point(set, rng);
    };
    return op;
  }
  return metric_projection(set);
}

ProxFn ProxFn::quadratic(Vector c) {
  ProxFn f;
  f.kind = Kind::Quadratic;
  f.d = c.size();
  f.center = std::move(c);
  return f;
}

ProxFn ProxFn::l1(double gamma, Eigen::Index d) {
  if (!(gamma > 0)) throw ConfigError("proximal: l1 gamma must be > 0");
  ProxFn f;
  f.kind = Kind::L1;
  f.gamma = gamma;
  f.d = d;
  return f;
}

ProxFn ProxFn::zero(Eigen::Index d) {
  ProxFn f;
  f.kind = Kind::Zero;
  f.d = d;
  return f;
}

CutterOp proximal(const ProxFn& f) {
  CutterOp op;
  op.rho = 1.0;
  switch (f.kind) {
    case ProxFn::Kind::Quadratic:
      // Stationarity of f(y) + 1/2||y-x||^2: (y - c) + (y - x) = 0.
      op.eval = [c = f.center](const Vector& x) -> Vector {
        return 0.5 * (x + c);
      };
      op.fix_witness = [c = f.center](std::mt19937&) { return c; };
      return op;
    case ProxFn::Kind::L1:
      op.eval = [g = f.gamma](const Vector& x) -> Vector {
        Vector y(x.size());
        for (Eigen::Index i = 0; i < x.size(); ++i) {
          if (x[i] > g) {
            y[i] = x[i] - g;
          } else if (x[i] < -g) {
            y[i] = x[i] + g;
          } else {
            y[i] = 0.0;
          }
        }
        return y;
      };
      op.fix_witness = [d = f.d](std::mt19937&) -> Vector {
        return Vector::Zero(d);
      };
      return op;
    case ProxFn::Kind::Zero:
      op.eval = [](const Vector& x) { return x; };
      op.fix_witness = [d = f.d](std::mt19937& rng) -> Vector {
        std::normal_distribution<double> gauss(0.0, 1.0);
        Vector z(d);
        for (Eigen::Index i = 0; i < d; ++i) z[i] = gauss(rng);
        return z;
      };
      return op;
  }
  throw ConfigError("proximal: unsupported function");
}

double cutter_violation(const CutterOp& op, const Vector& z, const Vector& x) {
  Vector ux = op(x);
  return (z - ux).dot(x - ux);
}

SqneReport sqne_check(const CutterOp& op, const std::vector<Vector>& zs,
                      const std::vector<Vector>& xs, double tol) {
  if (zs.empty()) throw std::invalid_argument("sqne_check: zs must be nonempty");
  SqneReport report;
  for (const Vector& x : xs) {
    Vector ux = op(x);
    double move = (ux - x).squaredNorm();
    for (const Vector& z : zs) {
      double lhs = (ux - z).squaredNorm();
      double rhs = (x - z).squaredNorm() - op.rho * move;
      report.max_violation = std::max(report.max_violation, lhs - rhs);
    }
  }
  report.pass = report.max_violation <= tol;
  return report;
}

}  // namespace oam
