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

#include "oam/sets.hpp"

#include <algorithm>
#include <cmath>

namespace oam {

HalfSpace::HalfSpace(Vector a_, double beta_) : a(std::move(a_)), beta(beta_) {
  if (a.norm() == 0) throw ConfigError("halfspace: normal a must be nonzero");
  if (!a.allFinite() || !std::isfinite(beta)) {
    throw ConfigError("halfspace: a and beta must be finite");
  }
}

Box::Box(Vector lo_, Vector hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.size() != hi.size()) throw ShapeError("box: lo and hi dims differ");
  // Infinite bounds are allowed (pullbacks through singular coordinates).
  for (Eigen::Index i = 0; i < lo.size(); ++i) {
    if (std::isnan(lo[i]) || std::isnan(hi[i]) || lo[i] > hi[i]) {
      throw ConfigError("box: requires lo <= hi componentwise");
    }
  }
}

Ball::Ball(Vector center_, double radius_)
    : center(std::move(center_)), radius(radius_) {
  if (!(radius > 0) || !std::isfinite(radius) || !center.allFinite()) {
    throw ConfigError("ball: requires finite center and radius > 0");
  }
}

AffineSublevel::AffineSublevel(Vector a_, double beta_)
    : a(std::move(a_)), beta(beta_) {
  if (a.norm() == 0) throw ConfigError("affine_sublevel: a must be nonzero");
  if (!a.allFinite() || !std::isfinite(beta)) {
    throw ConfigError("affine_sublevel: a and beta must be finite");
  }
}

QuadSublevel::QuadSublevel(Vector center_, double rsq_)
    : center(std::move(center_)), rsq(rsq_) {
  if (!(rsq > 0) || !std::isfinite(rsq) || !center.allFinite()) {
    throw ConfigError("quad_sublevel: requires finite center and rsq > 0");
  }
}

Eigen::Index dim(const ConvexSet& set) {
  return std::visit(
      [](const auto& s) -> Eigen::Index {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalfSpace> ||
                      std::is_same_v<T, AffineSublevel>) {
          return s.a.size();
        } else if constexpr (std::is_same_v<T, Box>) {
          return s.lo.size();
        } else {
          return s.center.size();
        }
      },
      set);
}

namespace {

void check_dim(const ConvexSet& set, const Vector& x) {
  if (x.size() != dim(set)) {
    throw ShapeError("project: x has dim " + std::to_string(x.size()) +
                     ", set has dim " + std::to_string(dim(set)));
  }
}

Vector project_halfspace(const Vector& a, double beta, const Vector& x) {
  double excess = a.dot(x) - beta;
  if (excess <= 0) return x;
  return x - (excess / a.squaredNorm()) * a;
}

Vector project_ball(const Vector& c, double r, const Vector& x) {
  Vector d = x - c;
  double n = d.norm();
  if (n <= r) return x;
  return c + (r / n) * d;
}

}  // namespace

Vector project(const ConvexSet& set, const Vector& x) {
  check_dim(set, x);
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          return project_halfspace(s.a, s.beta, x);
        } else if constexpr (std::is_same_v<T, Box>) {
          return x.cwiseMax(s.lo).cwiseMin(s.hi);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return project_ball(s.center, s.radius, x);
        } else if constexpr (std::is_same_v<T, AffineSublevel>) {
          // Subgradient step of f(x) = <a,x> - beta; coincides with the
          // metric projection because the gradient is constant.
          return project_halfspace(s.a, s.beta, x);
        } else {
          return project_ball(s.center, std::sqrt(s.rsq), x);
        }
      },
      set);
}

double distance(const ConvexSet& set, const Vector& x) {
  return (x - project(set, x)).norm();
}

bool contains(const ConvexSet& set, const Vector& x, double tol) {
  if (tol < 0) throw std::invalid_argument("contains: tol must be >= 0");
  return distance(set, x) <= tol;
}

Vector sample_point(const ConvexSet& set, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const Eigen::Index d = dim(set);
  Vector g(d);
  for (Eigen::Index i = 0; i < d; ++i) g[i] = gauss(rng);
  return std::visit(
      [&](const auto& s) -> Vector {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalfSpace> ||
                      std::is_same_v<T, AffineSublevel>) {
          Vector p = project_halfspace(s.a, s.beta, g);
          return p - std::abs(gauss(rng)) / s.a.norm() * s.a;
        } else if constexpr (std::is_same_v<T, Box>) {
          Vector p(d);
          for (Eigen::Index i = 0; i < d; ++i) {
            if (std::isfinite(s.lo[i]) && std::isfinite(s.hi[i])) {
              p[i] = s.lo[i] + unif(rng) * (s.hi[i] - s.lo[i]);
            } else {
              p[i] = std::clamp(g[i], s.lo[i], s.hi[i]);
            }
          }
          return p;
        } else if constexpr (std::is_same_v<T, Ball>) {
          double n = g.norm();
          if (n == 0) return s.center;
          return s.center + (s.radius * unif(rng) / n) * g;
        } else {
          double n = g.norm();
          if (n == 0) return s.center;
          return s.center + (std::sqrt(s.rsq) * unif(rng) / n) * g;
        }
      },
      set);
}

Vector project(const HalfSpaceOrWhole& h, const Vector& x) {
  if (std::holds_alternative<WholeSpace>(h)) return x;
  const auto& hs = std::get<HalfSpace>(h);
  if (x.size() != hs.a.size()) {
    throw ShapeError("project: x has dim " + std::to_string(x.size()) +
                     ", half-space has dim " + std::to_string(hs.a.size()));
  }
  return project_halfspace(hs.a, hs.beta, x);
}

bool is_whole(const HalfSpaceOrWhole& h) {
  return std::holds_alternative<WholeSpace>(h);
}

namespace {
bool same(const Vector& a, const Vector& b) {
  return a.size() == b.size() && a == b;
}
}  // namespace

bool operator==(const HalfSpace& a, const HalfSpace& b) {
  return same(a.a, b.a) && a.beta == b.beta;
}
bool operator==(const Box& a, const Box& b) {
  return same(a.lo, b.lo) && same(a.hi, b.hi);
}
bool operator==(const Ball& a, const Ball& b) {
  return same(a.center, b.center) && a.radius == b.radius;
}
bool operator==(const AffineSublevel& a, const AffineSublevel& b) {
  return same(a.a, b.a) && a.beta == b.beta;
}
bool operator==(const QuadSublevel& a, const QuadSublevel& b) {
  return same(a.center, b.center) && a.rsq == b.rsq;
}

}  // namespace oam
