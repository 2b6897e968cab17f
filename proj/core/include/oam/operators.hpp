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

#ifndef OAM_OPERATORS_HPP
#define OAM_OPERATORS_HPP

#include <functional>
#include <vector>

#include "oam/sets.hpp"

namespace oam {

// First-class quasi-nonexpansive operator calculus. Each operator carries its
// certified SQNE modulus rho; composition code derives moduli from these
// values instead of re-deriving them from scratch.
//
// rho-SQNE: ||U(x) - z||^2 <= ||x - z||^2 - rho ||U(x) - x||^2 for z in fix U.
// Cutter:   <z - U(x), x - U(x)> <= 0 for z in fix U; equivalent to 1-SQNE.

struct CutterOp {
  std::function<Vector(const Vector&)> eval;
  double rho = 1.0;
  /// Samples a point of fix(op). Test-only metadata; the solver never reads it.
  std::function<Vector(std::mt19937&)> fix_witness;

  Vector operator()(const Vector& x) const { return eval(x); }
};

/// Convex function interface for subgradient projections: value plus one
/// chosen element of the subdifferential at each point.
struct SubgradFn {
  std::function<double(const Vector&)> value;
  std::function<Vector(const Vector&)> subgrad;
};

/// x |-> x + alpha (op(x) - x). Fixed points are unchanged; the derived
/// modulus is (1 + rho)/alpha - 1, so the (1+rho)/2-relaxation of a rho-SQNE
/// operator is a cutter. Requires alpha > 0.
CutterOp relax(CutterOp op, double alpha);

/// Metric projection as a cutter (rho = 1) with a fix-witness sampler.
CutterOp metric_projection(ConvexSet set);

/// x |-> x - f(x)/||g(x)||^2 g(x) when f(x) > 0, identity otherwise.
/// A cutter with fix = {f <= 0}; the caller declares that set nonempty.
/// Throws InfeasibleError when f(x) > 0 with a vanishing subgradient.
CutterOp subgradient_projection(SubgradFn f);

SubgradFn affine_sublevel_fn(const AffineSublevel& s);
SubgradFn quad_sublevel_fn(const QuadSublevel& s);

/// The cutter a constraint set induces: metric projection for half-spaces,
/// boxes and balls; subgradient projection for the sublevel variants.
CutterOp cutter_for(const ConvexSet& set);

/// Convex functions with a closed-form proximal map.
struct ProxFn {
  enum class Kind { Quadratic, L1, Zero } kind = Kind::Zero;
  Vector center;     // Quadratic: f(x) = 1/2 ||x - center||^2
  double gamma = 1;  // L1: f(x) = gamma ||x||_1
  Eigen::Index d = 0;

  static ProxFn quadratic(Vector c);
  static ProxFn l1(double gamma, Eigen::Index d);
  static ProxFn zero(Eigen::Index d);
};

/// argmin_y f(y) + 1/2 ||y - x||^2 as a cutter (rho = 1, fix = Argmin f).
/// Soft-threshold ties resolve to 0.
CutterOp proximal(const ProxFn& f);

struct SqneReport {
  double max_violation = 0;
  bool pass = true;
};

/// <z - op(x), x - op(x)>; nonpositive for cutters when z is in fix(op).
double cutter_violation(const CutterOp& op, const Vector& z, const Vector& x);

/// Maximum violation of the SQNE inequality at modulus op.rho over all
/// (z, x) pairs. Every z must be a certified fixed point of op.
SqneReport sqne_check(const CutterOp& op, const std::vector<Vector>& zs,
                      const std::vector<Vector>& xs, double tol = 1e-8);

}  // namespace oam

#endif  // OAM_OPERATORS_HPP
