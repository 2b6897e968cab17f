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

#include <doctest.h>

#include <random>

#include "oam/landweber.hpp"
#include "oam/oracle.hpp"

using oam::CutterOp;
using oam::ExtrapolationMode;
using oam::HalfSpace;
using oam::LandweberOp;
using oam::LinearMap;
using oam::Matrix;
using oam::Vector;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

Vector random_vec(Eigen::Index d, std::mt19937& rng, double scale = 2.0) {
  std::normal_distribution<double> gauss(0.0, scale);
  Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = gauss(rng);
  return v;
}

Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gauss(rng);
  }
  return m;
}

// Singleton {0} as a box with equal bounds.
oam::ConvexSet origin_singleton() {
  return oam::Box(Vector::Zero(2), Vector::Zero(2));
}

// Normalized (normal, offset) representation for comparing half-spaces as
// point sets.
std::pair<Vector, double> normalized(const HalfSpace& h) {
  double n = h.a.norm();
  return {h.a / n, h.beta / n};
}

}  // namespace

TEST_CASE("tau") {
  LinearMap eye(Matrix::Identity(2, 2));
  CHECK(oam::tau(eye, vec2(0.3, -0.7)) == doctest::Approx(1.0).epsilon(1e-7));

  LinearMap diag = oam::diagonal_map(vec2(2, 1));
  CHECK(oam::tau(diag, vec2(0, -1)) == doctest::Approx(4.0).epsilon(1e-6));

  CHECK(oam::tau(diag, Vector::Zero(2)) == 1.0);
}

TEST_CASE("tau falls back to 1 on residuals with vanishing adjoint image") {
  LinearMap a = oam::diagonal_map(vec2(1, 0));
  bool near_null = false;
  CHECK(oam::tau(a, vec2(0, 1), &near_null) == 1.0);
  CHECK(near_null);
}

TEST_CASE("tau >= 1 over random maps and residuals") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<int> dims(1, 6);
  int checked = 0;
  while (checked < 1000) {
    Matrix m = random_matrix(dims(rng), dims(rng), rng);
    if (m.isZero(0.0)) continue;
    LinearMap a(m);
    Vector r = random_vec(a.rows(), rng);
    CHECK(oam::tau(a, r) >= 1.0 - 1e-12);
    ++checked;
  }
}

TEST_CASE("landweber_apply") {
  LinearMap diag = oam::diagonal_map(vec2(2, 1));
  oam::LandweberDiagnostics diag_counts;

  SUBCASE("identity inner operator gives the identity") {
    CutterOp ident;
    ident.rho = 1.0;
    ident.eval = [](const Vector& x) { return x; };
    LandweberOp op = oam::make_landweber(ident, diag, ExtrapolationMode::One);
    Vector x = vec2(0.4, -2);
    CHECK(oam::landweber_apply(op, x) == x);
  }

  SUBCASE("projection onto the origin, sigma = 1") {
    LandweberOp op = oam::make_landweber(
        oam::metric_projection(origin_singleton()), diag,
        ExtrapolationMode::One, &diag_counts);
    Vector out = oam::landweber_apply(op, vec2(0, 1));
    CHECK(out[0] == 0.0);
    CHECK(out[1] == doctest::Approx(0.75).epsilon(1e-7));
  }

  SUBCASE("projection onto the origin, sigma = tau, lands in the fix set") {
    LandweberOp op =
        oam::make_landweber(oam::metric_projection(origin_singleton()), diag,
                            ExtrapolationMode::Tau, &diag_counts);
    Vector out = oam::landweber_apply(op, vec2(0, 1));
    // The norm bound cancels between tau and the step, so the extrapolated
    // step reaches A^{-1}({0}) = {0} up to roundoff.
    CHECK(out.norm() <= 1e-12);
  }

  LinearMap zero;
  CHECK_THROWS_WITH_AS(
      oam::make_landweber(oam::metric_projection(origin_singleton()), zero,
                          ExtrapolationMode::One),
      "Landweber transform requires nonzero A", std::domain_error);
}

TEST_CASE("landweber fixed-point identity on closed-form problems") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    // Diagonal A with entries bounded away from 0 keeps A^{-1}(fix V) exact.
    Vector d(2);
    std::uniform_real_distribution<double> entry(0.5, 2.0);
    d << entry(rng), (trial % 2 ? -entry(rng) : entry(rng));
    LinearMap a = oam::diagonal_map(d);

    oam::ConvexSet q = (trial % 3 == 0)
                           ? oam::ConvexSet(HalfSpace(vec2(1, -1), 0.5))
                           : oam::ConvexSet(oam::Box(vec2(-1, 0), vec2(0, 2)));
    oam::ConvexSet fix_set = oam::pullback(a, q);
    LandweberOp op = oam::make_landweber(oam::metric_projection(q), a,
                                         ExtrapolationMode::Tau);

    for (int i = 0; i < 25; ++i) {
      Vector z = oam::sample_point(fix_set, rng);
      CHECK((oam::landweber_apply(op, z) - z).norm() <= 1e-10);
      Vector x = random_vec(2, rng);
      if ((oam::landweber_apply(op, x) - x).norm() <= 1e-10) {
        CHECK(oam::distance(fix_set, x) <= 1e-8);
      }
    }
  }
}

TEST_CASE("landweber operators inherit the SQNE modulus") {
  std::mt19937 rng(32);
  LinearMap a = oam::diagonal_map(vec2(2, 1));
  oam::ConvexSet q = oam::Box(vec2(-1, -1), vec2(0, 1));
  oam::ConvexSet fix_set = oam::pullback(a, q);
  for (auto mode : {ExtrapolationMode::One, ExtrapolationMode::Tau}) {
    LandweberOp op = oam::make_landweber(oam::metric_projection(q), a, mode);
    CHECK(op.rho == 1.0);
    std::vector<Vector> zs, xs;
    for (int i = 0; i < 30; ++i) zs.push_back(oam::sample_point(fix_set, rng));
    for (int i = 0; i < 300; ++i) xs.push_back(random_vec(2, rng));
    CHECK(oam::sqne_check(oam::as_cutter(op), zs, xs).pass);
  }
}

TEST_CASE("landweber_halfspace") {
  LinearMap diag = oam::diagonal_map(vec2(2, 1));
  LandweberOp op = oam::make_landweber(
      oam::metric_projection(origin_singleton()), diag, ExtrapolationMode::Tau);

  SUBCASE("explicit normal and offset") {
    oam::HalfSpaceOrWhole h = oam::landweber_halfspace(op, vec2(0, 1));
    REQUIRE_FALSE(oam::is_whole(h));
    const HalfSpace& hs = std::get<HalfSpace>(h);
    auto [n, b] = normalized(hs);
    CHECK(n == vec2(0, 1));
    CHECK(b == 0.0);
  }

  SUBCASE("whole space when Au is fixed") {
    LandweberOp box_op = oam::make_landweber(
        oam::metric_projection(oam::ConvexSet(oam::Box(vec2(-2, -2), vec2(2, 2)))),
        diag, ExtrapolationMode::Tau);
    CHECK(oam::is_whole(oam::landweber_halfspace(box_op, vec2(0.5, 0.5))));
  }

  SUBCASE("identity map reduces to the base half-space") {
    LinearMap eye(Matrix::Identity(2, 2));
    LandweberOp id_op = oam::make_landweber(
        oam::metric_projection(oam::ConvexSet(HalfSpace(vec2(1, 0), 0))), eye,
        ExtrapolationMode::Tau);
    oam::HalfSpaceOrWhole h = oam::landweber_halfspace(id_op, vec2(1, 0));
    REQUIRE_FALSE(oam::is_whole(h));
    auto [n, b] = normalized(std::get<HalfSpace>(h));
    CHECK(n == vec2(1, 0));
    CHECK(b == 0.0);
  }
}

TEST_CASE("landweber_halfspace_project") {
  LinearMap diag = oam::diagonal_map(vec2(2, 1));
  LandweberOp op = oam::make_landweber(
      oam::metric_projection(origin_singleton()), diag, ExtrapolationMode::Tau);

  CHECK(oam::landweber_halfspace_project(op, vec2(0, 1), vec2(1, 2)) ==
        vec2(1, 0));
  CHECK(oam::landweber_halfspace_project(op, vec2(0, 1), vec2(1, -3)) ==
        vec2(1, -3));

  // Au fixed: projection is the identity.
  LandweberOp box_op = oam::make_landweber(
      oam::metric_projection(oam::ConvexSet(oam::Box(vec2(-2, -2), vec2(2, 2)))),
      diag, ExtrapolationMode::Tau);
  Vector x = vec2(7, -9);
  CHECK(oam::landweber_halfspace_project(box_op, vec2(0.5, 0.5), x) == x);
}

TEST_CASE("halfspace membership agrees with the extrapolated-operator cut") {
  std::mt19937 rng(33);
  LinearMap a(random_matrix(3, 2, rng));
  oam::ConvexSet q = HalfSpace(Vector(Vector::Ones(3)), -0.5);
  LandweberOp op =
      oam::make_landweber(oam::metric_projection(q), a, ExtrapolationMode::Tau);
  CutterOp lt = oam::as_cutter(op);

  int decisive = 0;
  for (int trial = 0; decisive < 1000; ++trial) {
    REQUIRE(trial < 100000);
    Vector u = random_vec(2, rng);
    oam::HalfSpaceOrWhole h = oam::landweber_halfspace(op, u);
    Vector ltu = lt(u);
    Vector z = random_vec(2, rng, 3.0);
    // H_1(u, L_tau(u)) = {z : <u - L_tau(u), z - L_tau(u)> <= 0}.
    double generic = (u - ltu).dot(z - ltu);
    if (oam::is_whole(h)) {
      CHECK((ltu - u).norm() <= 1e-12);
      continue;
    }
    if (std::abs(generic) <= 1e-9) continue;  // boundary: sign not decisive
    const HalfSpace& hs = std::get<HalfSpace>(h);
    bool in_stored = hs.a.dot(z) - hs.beta <= 0;
    CHECK(in_stored == (generic < 0));
    ++decisive;
  }
}

TEST_CASE("landweber_halfspace_project agrees with the generic projection") {
  std::mt19937 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    LinearMap a(random_matrix(2, 2, rng));
    if (a.is_zero()) continue;
    oam::ConvexSet q = oam::Box(vec2(-0.5, -0.5), vec2(0.5, 0.5));
    LandweberOp op = oam::make_landweber(oam::metric_projection(q), a,
                                         ExtrapolationMode::Tau);
    Vector u = random_vec(2, rng);
    Vector x = random_vec(2, rng);
    oam::HalfSpaceOrWhole h = oam::landweber_halfspace(op, u);
    Vector direct = oam::landweber_halfspace_project(op, u, x);
    Vector generic = oam::project(h, x);
    CHECK((direct - generic).lpNorm<Eigen::Infinity>() <= 1e-12);
  }
}

TEST_CASE("subgrad_landweber_halfspace") {
  LinearMap diag = oam::diagonal_map(vec2(2, 1));
  oam::SubgradFn q;
  q.value = [](const Vector& y) { return y[0]; };
  q.subgrad = [](const Vector&) { return Vector(vec2(1, 0)); };

  SUBCASE("explicit half-space") {
    oam::HalfSpaceOrWhole h = oam::subgrad_landweber_halfspace(q, diag, vec2(1, 1));
    REQUIRE_FALSE(oam::is_whole(h));
    auto [n, b] = normalized(std::get<HalfSpace>(h));
    CHECK(n == vec2(1, 0));
    CHECK(b == 0.0);
  }

  SUBCASE("whole space when q(Au) <= 0") {
    CHECK(oam::is_whole(oam::subgrad_landweber_halfspace(q, diag, vec2(-1, 1))));
  }

  SUBCASE("projection formula") {
    // H = {z1 <= 0}: projection drops the positive first coordinate.
    Vector p = oam::subgrad_landweber_halfspace_project(q, diag, vec2(1, 1),
                                                        vec2(3, -2));
    CHECK(p == vec2(0, -2));
    Vector inside = vec2(-1, 4);
    CHECK(oam::subgrad_landweber_halfspace_project(q, diag, vec2(1, 1),
                                                   inside) == inside);
  }

  SUBCASE("degenerate adjoint subgradient is infeasible") {
    LinearMap a = oam::diagonal_map(vec2(0, 1));
    oam::SubgradFn bad;
    bad.value = [](const Vector& y) { return y[0] + 1.0; };
    bad.subgrad = [](const Vector&) { return Vector(vec2(1, 0)); };
    CHECK_THROWS_AS(oam::subgrad_landweber_halfspace(bad, a, vec2(1, 1)),
                    oam::InfeasibleError);
  }
}

TEST_CASE("subgrad half-space with identity map matches the plain subgradient cut") {
  LinearMap eye(Matrix::Identity(2, 2));
  std::mt19937 rng(35);
  oam::QuadSublevel quad(vec2(0.5, -0.5), 1.0);
  oam::SubgradFn q = oam::quad_sublevel_fn(quad);

  int checked = 0;
  while (checked < 300) {
    Vector u = random_vec(2, rng);
    if (q.value(u) <= 0) continue;
    oam::HalfSpaceOrWhole h = oam::subgrad_landweber_halfspace(q, eye, u);
    REQUIRE_FALSE(oam::is_whole(h));
    // Plain subgradient-projection cut: {z : q(u) + <h(u), z - u> <= 0}.
    Vector g = q.subgrad(u);
    HalfSpace plain(g, g.dot(u) - q.value(u));
    auto [n1, b1] = normalized(std::get<HalfSpace>(h));
    auto [n2, b2] = normalized(plain);
    CHECK((n1 - n2).lpNorm<Eigen::Infinity>() <= 1e-12);
    CHECK(std::abs(b1 - b2) <= 1e-12);
    ++checked;
  }
}
