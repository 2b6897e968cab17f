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

#ifndef OAM_LANDWEBER_HPP
#define OAM_LANDWEBER_HPP

#include <memory>

#include "oam/operators.hpp"

namespace oam {

// Landweber transform: pulls an operator V on the target space back to the
// source space,
//
//   L_sigma{V}(x) = x + sigma(x)/||A||^2 A^T (V(Ax) - Ax),
//
// with fix L_sigma{V} = A^{-1}(fix V) and the SQNE modulus of V inherited.
// sigma is either the constant 1 or the extrapolation functional
//
//   tau(x) = (||A|| ||V(Ax) - Ax|| / ||A^T (V(Ax) - Ax)||)^2 >= 1.
//
// Both use the certified norm bound; in Tau mode the bound cancels, so the
// applied step never exceeds the admissible extrapolation.

enum class ExtrapolationMode { One, Tau };

/// Residuals whose adjoint image nearly vanishes relative to this threshold
/// fall back to sigma = 1 and raise a diagnostic.
inline constexpr double kNearNullEps = 1e-12;

struct LandweberDiagnostics {
  long near_null_adjoint = 0;
  long degenerate_normal = 0;
};

/// Extrapolation factor for the residual v = V(Ax) - Ax. Returns 1 for the
/// zero residual. Sets *near_null when ||A^T v|| <= eps ||A|| ||v|| with
/// v != 0, where the extrapolation is undefined, and returns 1.
double tau(const LinearMap& a, const Vector& v_residual,
           bool* near_null = nullptr);

/// The map is shared, so per-iteration operators do not copy the matrix.
struct LandweberOp {
  CutterOp inner;
  std::shared_ptr<const LinearMap> a;
  ExtrapolationMode mode = ExtrapolationMode::Tau;
  double norm_sq = 0;  // norm_ub^2
  double rho = 1.0;    // inherited from inner
  LandweberDiagnostics* diag = nullptr;
};

/// Throws std::domain_error for the zero map.
LandweberOp make_landweber(CutterOp inner, std::shared_ptr<const LinearMap> a,
                           ExtrapolationMode mode,
                           LandweberDiagnostics* diag = nullptr);

/// Convenience overload; copies the map once.
LandweberOp make_landweber(CutterOp inner, const LinearMap& a,
                           ExtrapolationMode mode,
                           LandweberDiagnostics* diag = nullptr);

Vector landweber_apply(const LandweberOp& op, const Vector& x);

CutterOp as_cutter(const LandweberOp& op);

/// The half-space {z : <Au - V(Au), Az - V(Au)> <= 0}, stored with normal
/// A^T (Au - V(Au)) and offset <Au - V(Au), V(Au)>. Whole space when
/// Au is a fixed point of V. Requires Tau mode.
HalfSpaceOrWhole landweber_halfspace(const LandweberOp& op, const Vector& u);

/// Direct projection onto landweber_halfspace(op, u) without materializing
/// the set; identity when Au = V(Au) or the stored normal degenerates.
Vector landweber_halfspace_project(const LandweberOp& op, const Vector& u,
                                   const Vector& x);

/// Half-space {z : q(Au) + <A^T h(Au), z - u> <= 0} for a sublevel-set
/// description q of the target constraint; whole space when q(Au) <= 0.
/// Throws InfeasibleError when q(Au) > 0 with A^T h(Au) = 0.
HalfSpaceOrWhole subgrad_landweber_halfspace(const SubgradFn& q,
                                             const LinearMap& a,
                                             const Vector& u);

Vector subgrad_landweber_halfspace_project(const SubgradFn& q,
                                           const LinearMap& a, const Vector& u,
                                           const Vector& x);

}  // namespace oam

#endif  // OAM_LANDWEBER_HPP
