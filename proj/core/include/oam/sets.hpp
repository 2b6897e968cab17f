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

#ifndef OAM_SETS_HPP
#define OAM_SETS_HPP

#include <random>
#include <variant>

#include "oam/linalg.hpp"

namespace oam {

// Closed convex set descriptions with exact metric projections. Every variant
// is nonempty by construction; degenerate normals are rejected up front.

/// {x : <a, x> <= beta}, a != 0.
struct HalfSpace {
  Vector a;
  double beta = 0;
  HalfSpace(Vector a_, double beta_);
};

/// {x : lo <= x <= hi} componentwise; bounds may be infinite.
struct Box {
  Vector lo, hi;
  Box(Vector lo_, Vector hi_);
};

/// {x : ||x - center|| <= radius}, radius > 0.
struct Ball {
  Vector center;
  double radius = 1;
  Ball(Vector center_, double radius_);
};

/// Sublevel set {x : <a, x> - beta <= 0}. Same point set as HalfSpace{a, beta}
/// but routed through subgradient-projection machinery by the operator layer.
struct AffineSublevel {
  Vector a;
  double beta = 0;
  AffineSublevel(Vector a_, double beta_);
};

/// Sublevel set {x : ||x - center||^2 - rsq <= 0}, rsq > 0.
struct QuadSublevel {
  Vector center;
  double rsq = 1;
  QuadSublevel(Vector center_, double rsq_);
};

using ConvexSet =
    std::variant<HalfSpace, Box, Ball, AffineSublevel, QuadSublevel>;

Eigen::Index dim(const ConvexSet& set);

/// Nearest point of the set. Idempotent: project(project(x)) == project(x).
Vector project(const ConvexSet& set, const Vector& x);

/// ||x - project(set, x)||; zero iff x is in the set.
double distance(const ConvexSet& set, const Vector& x);

/// distance(set, x) <= tol. Requires tol >= 0.
bool contains(const ConvexSet& set, const Vector& x, double tol);

/// Random member of the set; used by tests and the invariant runner as a
/// source of certified fixed points.
Vector sample_point(const ConvexSet& set, std::mt19937& rng);

/// Degenerate half-space covering the whole space; its projection is the
/// identity. Arises whenever T_k leaves the iterate fixed.
struct WholeSpace {};

using HalfSpaceOrWhole = std::variant<WholeSpace, HalfSpace>;

Vector project(const HalfSpaceOrWhole& h, const Vector& x);
bool is_whole(const HalfSpaceOrWhole& h);

bool operator==(const HalfSpace& a, const HalfSpace& b);
bool operator==(const Box& a, const Box& b);
bool operator==(const Ball& a, const Ball& b);
bool operator==(const AffineSublevel& a, const AffineSublevel& b);
bool operator==(const QuadSublevel& a, const QuadSublevel& b);

}  // namespace oam

#endif  // OAM_SETS_HPP
