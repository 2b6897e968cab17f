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

#include <benchmark/benchmark.h>

#include <random>

#include "oam/solver.hpp"

namespace {

oam::Vector random_vec(Eigen::Index d, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  oam::Vector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v[i] = gauss(rng);
  return v;
}

oam::Matrix random_matrix(Eigen::Index d, std::mt19937& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  oam::Matrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = gauss(rng);
  }
  return m;
}

oam::Problem split_problem(int d) {
  std::mt19937 rng(99);
  oam::Problem problem;
  problem.d1 = d;
  problem.d2 = d;
  oam::Vector diag(d);
  std::uniform_real_distribution<double> entry(0.5, 2.0);
  for (int i = 0; i < d; ++i) diag[i] = entry(rng);
  problem.a = oam::diagonal_map(diag);
  problem.c_sets = {
      oam::Box(oam::Vector::Constant(d, -1.0), oam::Vector::Constant(d, 1.0)),
      oam::HalfSpace(oam::Vector::Ones(d), 1.0),
  };
  problem.q_sets = {
      oam::Box(oam::Vector::Constant(d, -2.0), oam::Vector::Constant(d, 2.0)),
      oam::HalfSpace(random_vec(d, rng) + oam::Vector::Constant(d, 0.1), 0.5),
  };
  problem.f = oam::to_point_map(random_vec(d, rng));
  return problem;
}

void BM_NormUpperBound(benchmark::State& state) {
  std::mt19937 rng(1);
  oam::Matrix m = random_matrix(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::norm_upper_bound(m));
  }
}
BENCHMARK(BM_NormUpperBound)->Arg(16)->Arg(64)->Arg(256);

void BM_ProjectHalfspace(benchmark::State& state) {
  std::mt19937 rng(2);
  oam::ConvexSet set =
      oam::HalfSpace(random_vec(state.range(0), rng), 0.25);
  oam::Vector x = random_vec(state.range(0), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::project(set, x));
  }
}
BENCHMARK(BM_ProjectHalfspace)->Arg(16)->Arg(256);

void BM_LandweberApplyTau(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  oam::Problem problem = split_problem(d);
  oam::LandweberOp op =
      oam::make_landweber(oam::cutter_for(problem.q_sets.front()), *problem.a,
                          oam::ExtrapolationMode::Tau);
  std::mt19937 rng(3);
  oam::Vector x = random_vec(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::landweber_apply(op, x));
  }
}
BENCHMARK(BM_LandweberApplyTau)->Arg(20)->Arg(100);

void BM_Dykstra(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  oam::Problem problem = split_problem(d);
  std::vector<oam::ConvexSet> sets = problem.c_sets;
  for (const auto& q : problem.q_sets) {
    sets.push_back(oam::pullback(*problem.a, q));
  }
  std::mt19937 rng(4);
  oam::Vector x = random_vec(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::dykstra_project(sets, x, 1e-8));
  }
}
BENCHMARK(BM_Dykstra)->Arg(20);

void BM_SolveSplit(benchmark::State& state) {
  const int d = 20;
  oam::Problem problem = split_problem(d);
  oam::SolveOptions options;
  options.variant.kind = oam::VariantConfig::Kind::Product;
  options.control_c = oam::make_full_control(problem.c_sets.size());
  options.control_q = oam::make_full_control(problem.q_sets.size());
  options.max_iter = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(oam::solve(problem, options));
  }
}
BENCHMARK(BM_SolveSplit)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
