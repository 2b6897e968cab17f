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

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oam/check.hpp"
#include "oam/config.hpp"

using oam::RunConfig;

namespace {

const char* kCfpConfig = R"({
  "problem": {
    "d1": 2,
    "C": [
      {"type": "halfspace", "a": [1, 0], "beta": 0},
      {"type": "halfspace", "a": [0, 1], "beta": 0}
    ],
    "F": {"type": "to_point", "a": [1, 1]}
  },
  "solver": {"variant": "product", "max_iter": 100}
})";

const char* kSplitConfig = R"({
  "problem": {
    "d1": 2,
    "d2": 2,
    "A": {"data": [[2, 0], [0, 1]]},
    "C": [{"type": "box", "lo": [-1, -1], "hi": [0, 0]}],
    "Q": [{"type": "halfspace", "a": [1, 0], "beta": 0}],
    "F": {"type": "to_point", "a": [1, -0.5]}
  },
  "solver": {
    "variant": "simultaneous",
    "eta": 0.5,
    "sigma": "tau",
    "control": {"mode": "simultaneous"},
    "lambda0": 1.0,
    "p": 1.0,
    "alpha": 1.0,
    "epsilon": 0.1,
    "max_iter": 500,
    "seed": 7,
    "u0": [2, 2]
  },
  "output": {"format": "jsonl", "reference": true}
})";

}  // namespace

TEST_CASE("parse, defaults and lowering") {
  RunConfig cfg = oam::parse_run_config(kCfpConfig);
  CHECK(cfg.d1 == 2);
  CHECK(cfg.variant == "product");
  CHECK(cfg.sigma == "tau");
  CHECK(cfg.lambda0 == 1.0);
  CHECK(cfg.p == 1.0);
  CHECK(cfg.alpha == 1.0);
  CHECK(cfg.epsilon == 0.1);
  CHECK(cfg.max_iter == 100);
  CHECK(cfg.control.mode == "simultaneous");
  CHECK_FALSE(cfg.reference);

  oam::Problem problem = oam::build_problem(cfg);
  CHECK(problem.c_sets.size() == 2);
  CHECK_FALSE(problem.split());
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);
  CHECK(options.max_iter == 100);
  CHECK(options.uk_mode == oam::UkMode::Simultaneous);

  oam::SolveResult result = oam::solve(problem, options);
  CHECK(result.iterations == 100);
}

TEST_CASE("round-trip through canonical serialization") {
  for (const char* text : {kCfpConfig, kSplitConfig}) {
    RunConfig cfg = oam::parse_run_config(text);
    RunConfig again = oam::parse_run_config(oam::canonical_json(cfg));
    CHECK(cfg == again);
    // Canonicalization is a fixed point.
    CHECK(oam::canonical_json(cfg) == oam::canonical_json(again));
  }
}

TEST_CASE("unknown keys are rejected with their path") {
  std::string bad = R"({"problem": {"d1": 2, "F": {"type": "to_point", "a": [0,0]},
                        "extra": 1}, "solver": {"variant": "product"}})";
  CHECK_THROWS_WITH_AS(oam::parse_run_config(bad), "unknown key 'problem.extra'",
                       oam::ConfigError);
  std::string bad2 = R"({"problem": {"d1": 2, "C": [{"type": "halfspace",
                         "a": [1,0], "beta": 0, "radius": 1}],
                         "F": {"type": "to_point", "a": [0,0]}},
                         "solver": {"variant": "product"}})";
  CHECK_THROWS_AS(oam::parse_run_config(bad2), oam::ConfigError);
  std::string bad3 = R"({"problem": {"d1": 2,
                         "F": {"type": "to_point", "a": [0,0]}},
                         "solver": {"variant": "product"}, "outputs": {}})";
  CHECK_THROWS_AS(oam::parse_run_config(bad3), oam::ConfigError);
}

TEST_CASE("schema violations carry the offending key") {
  CHECK_THROWS_AS(oam::parse_run_config("not json"), oam::ConfigError);
  CHECK_THROWS_AS(oam::parse_run_config("{}"), oam::ConfigError);

  std::string bad_variant = R"({"problem": {"d1": 2,
      "F": {"type": "to_point", "a": [0,0]}},
      "solver": {"variant": "parallel"}})";
  CHECK_THROWS_AS(oam::parse_run_config(bad_variant), oam::ConfigError);

  std::string bad_set = R"({"problem": {"d1": 2,
      "C": [{"type": "cone", "a": [1,0]}],
      "F": {"type": "to_point", "a": [0,0]}},
      "solver": {"variant": "product"}})";
  CHECK_THROWS_AS(oam::parse_run_config(bad_set), oam::ConfigError);

  std::string bad_ragged = R"({"problem": {"d1": 2, "d2": 2,
      "A": {"data": [[1, 0], [1]]},
      "Q": [{"type": "halfspace", "a": [1,0], "beta": 0}],
      "F": {"type": "to_point", "a": [0,0]}},
      "solver": {"variant": "product"}})";
  CHECK_THROWS_AS(oam::parse_run_config(bad_ragged), oam::ConfigError);
}

TEST_CASE("semantic validation during lowering") {
  SUBCASE("p outside (0,1]") {
    RunConfig cfg = oam::parse_run_config(kCfpConfig);
    cfg.p = 1.5;
    oam::Problem problem = oam::build_problem(cfg);
    CHECK_THROWS_WITH_AS(oam::build_solve_options(cfg, problem),
                         "p must lie in (0,1]", oam::ConfigError);
  }
  SUBCASE("zero A with nonempty Q") {
    RunConfig cfg = oam::parse_run_config(kSplitConfig);
    cfg.a->data.setZero();
    CHECK_THROWS_WITH_AS(oam::build_problem(cfg),
                         "Landweber requires nonzero A", oam::ConfigError);
  }
  SUBCASE("d2 mismatch") {
    RunConfig cfg = oam::parse_run_config(kSplitConfig);
    cfg.d2 = 3;
    CHECK_THROWS_AS(oam::build_problem(cfg), oam::ConfigError);
  }
  SUBCASE("blocks with sequential mode") {
    RunConfig cfg = oam::parse_run_config(kCfpConfig);
    cfg.control.mode = "sequential";
    cfg.control.blocks_c = {{0}, {1}};
    oam::Problem problem = oam::build_problem(cfg);
    CHECK_THROWS_AS(oam::build_solve_options(cfg, problem), oam::ConfigError);
  }
  SUBCASE("eta") {
    RunConfig cfg = oam::parse_run_config(kSplitConfig);
    cfg.eta = 1.0;
    oam::Problem problem = oam::build_problem(cfg);
    CHECK_THROWS_AS(oam::build_solve_options(cfg, problem), oam::ConfigError);
  }
}

TEST_CASE("block controls parse, validate and lower") {
  std::string text = R"({
    "problem": {
      "d1": 2, "d2": 2,
      "A": {"data": [[2, 0], [0, 1]]},
      "C": [{"type": "halfspace", "a": [1, 0], "beta": 0},
            {"type": "halfspace", "a": [0, 1], "beta": 0}],
      "Q": [{"type": "halfspace", "a": [1, 0], "beta": 0}],
      "F": {"type": "to_point", "a": [1, 1]}
    },
    "solver": {
      "variant": "product",
      "control": {"mode": "product", "blocks": {"C": [[0], [1]], "Q": [[0]]}},
      "max_iter": 200
    }
  })";
  RunConfig cfg = oam::parse_run_config(text);
  REQUIRE(cfg.control.blocks_c.has_value());
  CHECK(cfg.control.blocks_c->size() == 2);
  CHECK(cfg == oam::parse_run_config(oam::canonical_json(cfg)));

  oam::Problem problem = oam::build_problem(cfg);
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);
  CHECK(options.uk_mode == oam::UkMode::Product);
  CHECK(options.control_c.kind == oam::Control::Kind::Intermittent);
  CHECK(options.control_c.span() == 2);
  CHECK_FALSE(oam::solve(problem, options).diverged);

  // A block family that misses an index is rejected at lowering time.
  RunConfig bad = cfg;
  bad.control.blocks_c = {{0}, {0}};
  CHECK_THROWS_AS(oam::build_solve_options(bad, problem), oam::ConfigError);
}

TEST_CASE("matrix from CSV file") {
  std::string path = "oam_cfg_matrix.csv";
  {
    std::ofstream out(path);
    out << "2,0\n0,1\n";
  }
  std::string text = R"({"problem": {"d1": 2,
      "A": {"csv": ")" + path + R"("},
      "Q": [{"type": "halfspace", "a": [1,0], "beta": 0}],
      "F": {"type": "to_point", "a": [0,0]}},
      "solver": {"variant": "product"}})";
  RunConfig cfg = oam::parse_run_config(text);
  oam::Problem problem = oam::build_problem(cfg);
  CHECK(problem.a->data(0, 0) == 2.0);
  CHECK(problem.d2 == 2);
  // The canonical echo keeps the csv reference.
  RunConfig again = oam::parse_run_config(oam::canonical_json(cfg));
  CHECK(cfg == again);
  std::remove(path.c_str());
}

TEST_CASE("trace writers") {
  std::vector<oam::TraceRecord> trace(2);
  trace[0].k = 0;
  trace[0].lambda = 1.0;
  trace[0].step_norm = 0.25;
  trace[0].max_dist_c = 0.5;
  trace[1].k = 1;
  trace[1].lambda = 0.5;
  trace[1].dist_to_ref = 0.125;

  std::ostringstream jsonl;
  oam::write_trace_jsonl(jsonl, trace);
  std::string line0 = jsonl.str().substr(0, jsonl.str().find('\n'));
  CHECK(line0.find("\"k\":0") != std::string::npos);
  CHECK(line0.find("\"lambda\":1.0") != std::string::npos);
  CHECK(line0.find("dist_to_ref") == std::string::npos);
  CHECK(jsonl.str().find("\"dist_to_ref\":0.125") != std::string::npos);

  std::ostringstream csv;
  oam::write_trace_csv(csv, trace);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "k,lambda,step_norm,max_dist_c,max_dist_q,tk_residual,dist_to_ref");
  std::string row0, row1;
  std::getline(lines, row0);
  std::getline(lines, row1);
  CHECK(row0 == "0,1,0.25,0.5,0,0,");
  CHECK(row1.find("0.125") != std::string::npos);
}

TEST_CASE("summary echoes the canonical config") {
  RunConfig cfg = oam::parse_run_config(kCfpConfig);
  oam::Problem problem = oam::build_problem(cfg);
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);
  oam::SolveResult result = oam::solve(problem, options);
  std::string summary = oam::summary_json(cfg, result, std::nullopt, 0.01);
  CHECK(summary.find("\"status\": \"completed\"") != std::string::npos);
  CHECK(summary.find("\"config\"") != std::string::npos);
  CHECK(summary.find("\"iterations\": 100") != std::string::npos);

  // Re-parsing the echoed config yields the identical configuration.
  auto parsed = nlohmann::json::parse(summary);
  RunConfig echoed = oam::parse_run_config(parsed.at("config").dump());
  CHECK(echoed == cfg);
}

TEST_CASE("invariant suites pass on the stock problems") {
  for (const char* text : {kCfpConfig, kSplitConfig}) {
    RunConfig cfg = oam::parse_run_config(text);
    oam::Problem problem = oam::build_problem(cfg);
    oam::SolveOptions options = oam::build_solve_options(cfg, problem);
    auto results = oam::run_invariant_suites(problem, options, 200, cfg.seed);
    CHECK(oam::all_pass(results));
    CHECK(results.size() == 6);
  }
}

TEST_CASE("invariant suites reject nonpositive sample counts") {
  RunConfig cfg = oam::parse_run_config(kCfpConfig);
  oam::Problem problem = oam::build_problem(cfg);
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);
  CHECK_THROWS_WITH_AS(oam::run_invariant_suites(problem, options, 0, 1),
                       "samples must be positive", oam::ConfigError);
}

TEST_CASE("corrupted rho is rejected as configuration, not invariant, failure") {
  RunConfig cfg = oam::parse_run_config(kSplitConfig);
  cfg.rho = 10.0;  // far above every variant bound for unit moduli
  oam::Problem problem = oam::build_problem(cfg);
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);
  CHECK_THROWS_AS(oam::run_invariant_suites(problem, options, 50, 1),
                  oam::ConfigError);
}
