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

#include "oam/landweber.hpp"

#include <cmath>
#include <utility>

namespace oam {

double tau(const LinearMap& a, const Vector& v_residual, bool* near_null) {
  if (near_null) *near_null = false;
  double nr = v_residual.norm();
  if (nr == 0) return 1.0;
  double nar = adjoint_apply(a, v_residual).norm();
  if (nar <= kNearNullEps * a.norm_ub * nr) {
    if (near_null) *near_null = true;
    return 1.0;
  }
  double ratio = a.norm_ub * nr / nar;
  return ratio * ratio;
}

LandweberOp make_landweber(CutterOp inner, std::shared_ptr<const LinearMap> a,
                           ExtrapolationMode mode, LandweberDiagnostics* diag) {
  if (!a || a->is_zero()) {
    throw std::domain_error("Landweber transform requires nonzero A");
  }
  LandweberOp op;
  op.rho = inner.rho;
  op.inner = std::move(inner);
  op.norm_sq = a->norm_ub * a->norm_ub;
  op.a = std::move(a);
  op.mode = mode;
  op.diag = diag;
  return op;
}

LandweberOp make_landweber(CutterOp inner, const LinearMap& a,
                           ExtrapolationMode mode, LandweberDiagnostics* diag) {
  return make_landweber(std::move(inner), std::make_shared<LinearMap>(a), mode,
                        diag);
}

Vector landweber_apply(const LandweberOp& op, const Vector& x) {
  Vector ax = apply(*op.a, x);
  Vector residual = op.inner(ax) - ax;
  if (residual.isZero(0.0)) return x;
  double sigma = 1.0;
  if (op.mode == ExtrapolationMode::Tau) {
    bool near_null = false;
    sigma = tau(*op.a, residual, &near_null);
    if (near_null && op.diag) ++op.diag->near_null_adjoint;
  }
  return x + (sigma / op.norm_sq) * adjoint_apply(*op.a, residual);
}

CutterOp as_cutter(const LandweberOp& op) {
  CutterOp c;
  c.rho = op.rho;
  c.eval = [op](const Vector& x) { return landweber_apply(op, x); };
  return c;
}

namespace {

// The explicit half-space identity holds for the cut through the
// extrapolated image; with sigma = 1 the cut through the shorter step is a
// different (looser) half-space.
void require_tau_mode(const LandweberOp& op, const char* fn) {
  if (op.mode != ExtrapolationMode::Tau) {
    throw std::invalid_argument(std::string(fn) + ": requires Tau mode");
  }
}

}  // namespace

HalfSpaceOrWhole landweber_halfspace(const LandweberOp& op, const Vector& u) {
  require_tau_mode(op, "landweber_halfspace");
  Vector au = apply(*op.a, u);
  Vector image = op.inner(au);
  Vector r = au - image;
  if (r.isZero(0.0)) return WholeSpace{};
  Vector normal = adjoint_apply(*op.a, r);
  if (normal.isZero(0.0)) {
    // Residual orthogonal to the range; cannot happen for a cutter with
    // range(A) intersecting fix(V), flagged when assumptions are violated.
    if (op.diag) ++op.diag->degenerate_normal;
    return WholeSpace{};
  }
  return HalfSpace(std::move(normal), r.dot(image));
}

Vector landweber_halfspace_project(const LandweberOp& op, const Vector& u,
                                   const Vector& x) {
  require_tau_mode(op, "landweber_halfspace_project");
  Vector au = apply(*op.a, u);
  Vector image = op.inner(au);
  Vector r = au - image;
  if (r.isZero(0.0)) return x;
  Vector normal = adjoint_apply(*op.a, r);
  double n2 = normal.squaredNorm();
  if (n2 == 0) {
    if (op.diag) ++op.diag->degenerate_normal;
    return x;
  }
  double excess = r.dot(apply(*op.a, x) - image);
  if (excess <= 0) return x;
  return x - (excess / n2) * normal;
}

HalfSpaceOrWhole subgrad_landweber_halfspace(const SubgradFn& q,
                                             const LinearMap& a,
                                             const Vector& u) {
  Vector au = apply(a, u);
  double qa = q.value(au);
  if (qa <= 0) return WholeSpace{};
  Vector normal = adjoint_apply(a, q.subgrad(au));
  if (normal.isZero(0.0)) {
    throw InfeasibleError(
        "subgrad_landweber_halfspace: A^T h(Au) = 0 with q(Au) > 0; the "
        "linearized half-space is empty");
  }
  double beta = normal.dot(u) - qa;
  return HalfSpace(std::move(normal), beta);
}

Vector subgrad_landweber_halfspace_project(const SubgradFn& q,
                                           const LinearMap& a, const Vector& u,
                                           const Vector& x) {
  Vector au = apply(a, u);
  double qa = q.value(au);
  if (qa <= 0) return x;
  Vector normal = adjoint_apply(a, q.subgrad(au));
  double n2 = normal.squaredNorm();
  if (n2 == 0) {
    throw InfeasibleError(
        "subgrad_landweber_halfspace_project: A^T h(Au) = 0 with q(Au) > 0");
  }
  double excess = qa + normal.dot(x - u);
  if (excess <= 0) return x;
  return x - (excess / n2) * normal;
}

}  // namespace oam
