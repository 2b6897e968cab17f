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

#ifndef OAM_ORACLE_HPP
#define OAM_ORACLE_HPP

#include "oam/sets.hpp"

namespace oam {

// Independent ground-truth machinery. Used by tests and the `oracle` CLI
// command; the solver iteration never calls into this header except to fill
// trace residuals.

/// Metric projection onto the intersection via Dykstra's algorithm (cyclic
/// projections with correction terms). Plain cyclic projection would converge
/// to a feasible point but not the nearest one. The returned point certifies
/// max_i d(p, sets_i) <= tol; throws OracleError when the cycle budget runs
/// out before the certificate holds.
Vector dykstra_project(const std::vector<ConvexSet>& sets, const Vector& x,
                       double tol = 1e-10, int max_cycles = 200000);

/// Exact preimage A^{-1}(Q) for diagonal A and box/half-space Q. A zero
/// diagonal entry is supported when the resulting set stays representable
/// (the coordinate becomes unconstrained); otherwise throws ConfigError.
ConvexSet pullback(const LinearMap& a, const ConvexSet& q);

struct ResidualPair {
  double max_dist_c = 0;
  double max_dist_q = 0;
};

/// max_i d(u, C_i) and max_j d(Au, Q_j); zero iff u is feasible for C and Au
/// for Q. Pass a == nullptr when there is no split part.
ResidualPair residuals(const std::vector<ConvexSet>& c_sets,
                       const LinearMap* a, const std::vector<ConvexSet>& q_sets,
                       const Vector& u);

}  // namespace oam

#endif  // OAM_ORACLE_HPP
