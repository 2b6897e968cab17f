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

#include "oam/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace oam {

Vector dykstra_project(const std::vector<ConvexSet>& sets, const Vector& x,
                       double tol, int max_cycles) {
  if (!(tol > 0)) throw std::invalid_argument("dykstra_project: tol must be > 0");
  if (sets.empty()) return x;
  for (const auto& set : sets) {
    if (dim(set) != x.size()) {
      throw ShapeError("dykstra_project: set/point dimension mismatch");
    }
  }

  Vector p = x;
  std::vector<Vector> corrections(sets.size(), Vector::Zero(x.size()));
  for (int cycle = 0; cycle < max_cycles; ++cycle) {
    Vector p_before = p;
    for (size_t i = 0; i < sets.size(); ++i) {
      Vector z = p + corrections[i];
      Vector next = project(sets[i], z);
      corrections[i] = z - next;
      p = std::move(next);
    }
    double feasibility = 0;
    for (const auto& set : sets) {
      feasibility = std::max(feasibility, distance(set, p));
    }
    if (feasibility <= tol && (p - p_before).norm() <= tol) {
      return p;
    }
  }
  throw OracleError("dykstra_project: no certificate within " +
                    std::to_string(max_cycles) + " cycles");
}

ConvexSet pullback(const LinearMap& a, const ConvexSet& q) {
  if (!is_diagonal(a)) {
    throw ConfigError("pullback: requires a diagonal map");
  }
  const Vector d = a.data.diagonal();
  if (const auto* hs = std::get_if<HalfSpace>(&q)) {
    if (hs->a.size() != d.size()) {
      throw ShapeError("pullback: half-space dimension mismatch");
    }
    Vector normal = d.cwiseProduct(hs->a);
    if (normal.isZero(0.0)) {
      throw ConfigError(hs->beta >= 0
                            ? "pullback: constraint is vacuous (whole space), "
                              "not representable"
                            : "pullback: preimage is empty");
    }
    return HalfSpace(std::move(normal), hs->beta);
  }
  if (const auto* box = std::get_if<Box>(&q)) {
    if (box->lo.size() != d.size()) {
      throw ShapeError("pullback: box dimension mismatch");
    }
    const double inf = std::numeric_limits<double>::infinity();
    Vector lo(d.size()), hi(d.size());
    for (Eigen::Index i = 0; i < d.size(); ++i) {
      if (d[i] > 0) {
        lo[i] = box->lo[i] / d[i];
        hi[i] = box->hi[i] / d[i];
      } else if (d[i] < 0) {
        lo[i] = box->hi[i] / d[i];
        hi[i] = box->lo[i] / d[i];
      } else {
        if (box->lo[i] > 0 || box->hi[i] < 0) {
          throw ConfigError("pullback: preimage is empty (coordinate " +
                            std::to_string(i) + " maps to 0 outside the box)");
        }
        lo[i] = -inf;
        hi[i] = inf;
      }
    }
    return Box(std::move(lo), std::move(hi));
  }
  throw ConfigError("pullback: only box and half-space targets are supported");
}

ResidualPair residuals(const std::vector<ConvexSet>& c_sets,
                       const LinearMap* a, const std::vector<ConvexSet>& q_sets,
                       const Vector& u) {
  ResidualPair r;
  for (const auto& set : c_sets) {
    r.max_dist_c = std::max(r.max_dist_c, distance(set, u));
  }
  if (!q_sets.empty()) {
    if (a == nullptr) {
      throw ConfigError("residuals: Q sets require the map A");
    }
    Vector au = apply(*a, u);
    for (const auto& set : q_sets) {
      r.max_dist_q = std::max(r.max_dist_q, distance(set, au));
    }
  }
  return r;
}

}  // namespace oam
