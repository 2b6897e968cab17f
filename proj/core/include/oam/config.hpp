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

#ifndef OAM_CONFIG_HPP
#define OAM_CONFIG_HPP

#include <cstdint>
#include <iosfwd>

#include "oam/solver.hpp"

namespace oam {

// Run configuration: a single JSON document, schema-validated before any
// numerics. Unknown keys are rejected; every error names the offending key.
// canonical_json materializes defaults, so parse(canonical_json(cfg)) == cfg.

struct ASpec {
  enum class Kind { Inline, Csv } kind = Kind::Inline;
  Matrix data;
  std::string csv;
};

struct FSpec {
  enum class Kind { ToPoint, Affine } kind = Kind::ToPoint;
  Vector a;
  Matrix m;
  Vector q;
};

struct ControlSpec {
  std::string mode = "simultaneous";  // sequential | simultaneous | product
  std::optional<int> s;
  std::optional<std::vector<std::vector<int>>> blocks_c;
  std::optional<std::vector<std::vector<int>>> blocks_q;
};

struct RunConfig {
  // problem
  int d1 = 0;
  std::optional<int> d2;
  std::optional<ASpec> a;
  std::vector<ConvexSet> c_sets;
  std::vector<ConvexSet> q_sets;
  FSpec f;
  // solver
  std::string variant;  // product | simultaneous | alternating
  double eta = 0.5;
  std::string sigma = "tau";  // one | tau
  ControlSpec control;
  std::optional<double> rho;
  double lambda0 = 1.0;
  double p = 1.0;
  double alpha = 1.0;
  double epsilon = 0.1;
  int max_iter = 10000;
  double tol_step = 0;
  double tol_residual = 0;
  std::uint64_t seed = 0;
  std::optional<Vector> u0;
  // output
  std::optional<std::string> trace_path;
  std::string format = "jsonl";  // jsonl | csv
  bool reference = false;
};

bool operator==(const RunConfig& lhs, const RunConfig& rhs);

RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);
std::string canonical_json(const RunConfig& cfg);

/// Loads CSV matrices, derives operator constants, and validates dimensions.
Problem build_problem(const RunConfig& cfg);
SolveOptions build_solve_options(const RunConfig& cfg, const Problem& problem);

/// The oracle reference P_S(a) when output.reference is requested; throws
/// ConfigError for shapes the oracle does not support.
std::optional<Vector> maybe_reference(const RunConfig& cfg,
                                      const Problem& problem);

void write_trace_jsonl(std::ostream& out,
                       const std::vector<TraceRecord>& trace);
/// Fixed header: k,lambda,step_norm,max_dist_c,max_dist_q,tk_residual,dist_to_ref
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);

std::string summary_json(const RunConfig& cfg, const SolveResult& result,
                         const std::optional<Vector>& reference,
                         double wall_seconds);

}  // namespace oam

#endif  // OAM_CONFIG_HPP
