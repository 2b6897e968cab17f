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

#include "oam/config.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace oam {

namespace {

using Json = nlohmann::ordered_json;

void expect_object(const Json& j, const std::string& ctx) {
  if (!j.is_object()) throw ConfigError(ctx + " must be an object");
}

void reject_unknown(const Json& obj, const std::string& ctx,
                    std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) throw ConfigError("unknown key '" + ctx + "." + item.key() + "'");
  }
}

const Json& require(const Json& obj, const std::string& ctx, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError("missing key '" + ctx + "." + key + "'");
  return *it;
}

double as_number(const Json& j, const std::string& ctx) {
  if (!j.is_number()) throw ConfigError("'" + ctx + "' must be a number");
  return j.get<double>();
}

int as_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ConfigError("'" + ctx + "' must be an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& ctx) {
  if (!j.is_string()) throw ConfigError("'" + ctx + "' must be a string");
  return j.get<std::string>();
}

Vector as_vector(const Json& j, const std::string& ctx) {
  if (!j.is_array()) throw ConfigError("'" + ctx + "' must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& e : j) v[i++] = as_number(e, ctx + "[]");
  return v;
}

Matrix as_matrix(const Json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError("'" + ctx + "' must be a nonempty array of rows");
  }
  const auto cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw ConfigError("'" + ctx + "' rows must be nonempty arrays");
  Matrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  Eigen::Index r = 0;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ConfigError("'" + ctx + "' rows must have equal length");
    }
    Eigen::Index c = 0;
    for (const auto& e : row) m(r, c++) = as_number(e, ctx + "[][]");
    ++r;
  }
  return m;
}

Json vector_json(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

ConvexSet parse_set(const Json& j, const std::string& ctx) {
  expect_object(j, ctx);
  std::string type = as_string(require(j, ctx, "type"), ctx + ".type");
  if (type == "halfspace") {
    reject_unknown(j, ctx, {"type", "a", "beta"});
    return HalfSpace(as_vector(require(j, ctx, "a"), ctx + ".a"),
                     as_number(require(j, ctx, "beta"), ctx + ".beta"));
  }
  if (type == "box") {
    reject_unknown(j, ctx, {"type", "lo", "hi"});
    return Box(as_vector(require(j, ctx, "lo"), ctx + ".lo"),
               as_vector(require(j, ctx, "hi"), ctx + ".hi"));
  }
  if (type == "ball") {
    reject_unknown(j, ctx, {"type", "center", "radius"});
    return Ball(as_vector(require(j, ctx, "center"), ctx + ".center"),
                as_number(require(j, ctx, "radius"), ctx + ".radius"));
  }
  if (type == "affine_sublevel") {
    reject_unknown(j, ctx, {"type", "a", "beta"});
    return AffineSublevel(as_vector(require(j, ctx, "a"), ctx + ".a"),
                          as_number(require(j, ctx, "beta"), ctx + ".beta"));
  }
  if (type == "quad_sublevel") {
    reject_unknown(j, ctx, {"type", "center", "rsq"});
    return QuadSublevel(as_vector(require(j, ctx, "center"), ctx + ".center"),
                        as_number(require(j, ctx, "rsq"), ctx + ".rsq"));
  }
  throw ConfigError("'" + ctx + ".type' must be one of halfspace, box, ball, "
                    "affine_sublevel, quad_sublevel");
}

Json set_json(const ConvexSet& set) {
  Json j;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, HalfSpace>) {
          j["type"] = "halfspace";
          j["a"] = vector_json(s.a);
          j["beta"] = s.beta;
        } else if constexpr (std::is_same_v<T, Box>) {
          j["type"] = "box";
          j["lo"] = vector_json(s.lo);
          j["hi"] = vector_json(s.hi);
        } else if constexpr (std::is_same_v<T, Ball>) {
          j["type"] = "ball";
          j["center"] = vector_json(s.center);
          j["radius"] = s.radius;
        } else if constexpr (std::is_same_v<T, AffineSublevel>) {
          j["type"] = "affine_sublevel";
          j["a"] = vector_json(s.a);
          j["beta"] = s.beta;
        } else {
          j["type"] = "quad_sublevel";
          j["center"] = vector_json(s.center);
          j["rsq"] = s.rsq;
        }
      },
      set);
  return j;
}

std::vector<ConvexSet> parse_sets(const Json& j, const std::string& ctx) {
  if (!j.is_array()) throw ConfigError("'" + ctx + "' must be an array of sets");
  std::vector<ConvexSet> sets;
  size_t i = 0;
  for (const auto& e : j) {
    sets.push_back(parse_set(e, ctx + "[" + std::to_string(i++) + "]"));
  }
  return sets;
}

std::vector<std::vector<int>> parse_blocks(const Json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty()) {
    throw ConfigError("'" + ctx + "' must be a nonempty array of index arrays");
  }
  std::vector<std::vector<int>> blocks;
  for (const auto& block : j) {
    if (!block.is_array()) throw ConfigError("'" + ctx + "' entries must be arrays");
    std::vector<int> b;
    for (const auto& e : block) b.push_back(as_int(e, ctx + "[][]"));
    blocks.push_back(std::move(b));
  }
  return blocks;
}

}  // namespace

RunConfig parse_run_config(const std::string& json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const std::exception& err) {
    throw ConfigError(std::string("config is not valid JSON: ") + err.what());
  }
  expect_object(root, "config");
  reject_unknown(root, "config", {"problem", "solver", "output"});

  RunConfig cfg;

  const Json& problem = require(root, "config", "problem");
  expect_object(problem, "problem");
  reject_unknown(problem, "problem", {"d1", "d2", "A", "C", "Q", "F"});
  cfg.d1 = as_int(require(problem, "problem", "d1"), "problem.d1");
  if (problem.contains("d2")) {
    cfg.d2 = as_int(problem["d2"], "problem.d2");
  }
  if (problem.contains("A")) {
    const Json& a = problem["A"];
    expect_object(a, "problem.A");
    ASpec spec;
    if (a.contains("csv")) {
      reject_unknown(a, "problem.A", {"csv"});
      spec.kind = ASpec::Kind::Csv;
      spec.csv = as_string(a["csv"], "problem.A.csv");
    } else {
      reject_unknown(a, "problem.A", {"data"});
      spec.kind = ASpec::Kind::Inline;
      spec.data = as_matrix(require(a, "problem.A", "data"), "problem.A.data");
    }
    cfg.a = std::move(spec);
  }
  if (problem.contains("C")) cfg.c_sets = parse_sets(problem["C"], "problem.C");
  if (problem.contains("Q")) cfg.q_sets = parse_sets(problem["Q"], "problem.Q");

  const Json& f = require(problem, "problem", "F");
  expect_object(f, "problem.F");
  std::string ftype = as_string(require(f, "problem.F", "type"), "problem.F.type");
  if (ftype == "to_point") {
    reject_unknown(f, "problem.F", {"type", "a"});
    cfg.f.kind = FSpec::Kind::ToPoint;
    cfg.f.a = as_vector(require(f, "problem.F", "a"), "problem.F.a");
  } else if (ftype == "affine") {
    reject_unknown(f, "problem.F", {"type", "M", "q"});
    cfg.f.kind = FSpec::Kind::Affine;
    cfg.f.m = as_matrix(require(f, "problem.F", "M"), "problem.F.M");
    cfg.f.q = as_vector(require(f, "problem.F", "q"), "problem.F.q");
  } else {
    throw ConfigError("'problem.F.type' must be to_point or affine");
  }

  const Json& solver = require(root, "config", "solver");
  expect_object(solver, "solver");
  reject_unknown(solver, "solver",
                 {"variant", "eta", "sigma", "control", "rho", "lambda0", "p",
                  "alpha", "epsilon", "max_iter", "tol_step", "tol_residual",
                  "seed", "u0"});
  cfg.variant = as_string(require(solver, "solver", "variant"), "solver.variant");
  if (cfg.variant != "product" && cfg.variant != "simultaneous" &&
      cfg.variant != "alternating") {
    throw ConfigError("'solver.variant' must be product, simultaneous or alternating");
  }
  if (solver.contains("eta")) cfg.eta = as_number(solver["eta"], "solver.eta");
  if (solver.contains("sigma")) {
    cfg.sigma = as_string(solver["sigma"], "solver.sigma");
    if (cfg.sigma != "one" && cfg.sigma != "tau") {
      throw ConfigError("'solver.sigma' must be one or tau");
    }
  }
  if (solver.contains("control")) {
    const Json& control = solver["control"];
    expect_object(control, "solver.control");
    reject_unknown(control, "solver.control", {"mode", "s", "blocks"});
    if (control.contains("mode")) {
      cfg.control.mode = as_string(control["mode"], "solver.control.mode");
      if (cfg.control.mode != "sequential" && cfg.control.mode != "simultaneous" &&
          cfg.control.mode != "product") {
        throw ConfigError(
            "'solver.control.mode' must be sequential, simultaneous or product");
      }
    }
    if (control.contains("s")) {
      cfg.control.s = as_int(control["s"], "solver.control.s");
    }
    if (control.contains("blocks")) {
      const Json& blocks = control["blocks"];
      expect_object(blocks, "solver.control.blocks");
      reject_unknown(blocks, "solver.control.blocks", {"C", "Q"});
      if (blocks.contains("C")) {
        cfg.control.blocks_c = parse_blocks(blocks["C"], "solver.control.blocks.C");
      }
      if (blocks.contains("Q")) {
        cfg.control.blocks_q = parse_blocks(blocks["Q"], "solver.control.blocks.Q");
      }
    }
  }
  if (solver.contains("rho")) cfg.rho = as_number(solver["rho"], "solver.rho");
  if (solver.contains("lambda0")) cfg.lambda0 = as_number(solver["lambda0"], "solver.lambda0");
  if (solver.contains("p")) cfg.p = as_number(solver["p"], "solver.p");
  if (solver.contains("alpha")) cfg.alpha = as_number(solver["alpha"], "solver.alpha");
  if (solver.contains("epsilon")) cfg.epsilon = as_number(solver["epsilon"], "solver.epsilon");
  if (solver.contains("max_iter")) cfg.max_iter = as_int(solver["max_iter"], "solver.max_iter");
  if (solver.contains("tol_step")) cfg.tol_step = as_number(solver["tol_step"], "solver.tol_step");
  if (solver.contains("tol_residual")) {
    cfg.tol_residual = as_number(solver["tol_residual"], "solver.tol_residual");
  }
  if (solver.contains("seed")) {
    if (!solver["seed"].is_number_unsigned() && !solver["seed"].is_number_integer()) {
      throw ConfigError("'solver.seed' must be an integer");
    }
    cfg.seed = solver["seed"].get<std::uint64_t>();
  }
  if (solver.contains("u0")) cfg.u0 = as_vector(solver["u0"], "solver.u0");

  if (root.contains("output")) {
    const Json& output = root["output"];
    expect_object(output, "output");
    reject_unknown(output, "output", {"trace_path", "format", "reference"});
    if (output.contains("trace_path")) {
      cfg.trace_path = as_string(output["trace_path"], "output.trace_path");
    }
    if (output.contains("format")) {
      cfg.format = as_string(output["format"], "output.format");
      if (cfg.format != "jsonl" && cfg.format != "csv") {
        throw ConfigError("'output.format' must be jsonl or csv");
      }
    }
    if (output.contains("reference")) {
      if (!output["reference"].is_boolean()) {
        throw ConfigError("'output.reference' must be a boolean");
      }
      cfg.reference = output["reference"].get<bool>();
    }
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_run_config(buffer.str());
}

std::string canonical_json(const RunConfig& cfg) {
  Json root;
  Json problem;
  problem["d1"] = cfg.d1;
  if (cfg.d2) problem["d2"] = *cfg.d2;
  if (cfg.a) {
    Json a;
    if (cfg.a->kind == ASpec::Kind::Csv) {
      a["csv"] = cfg.a->csv;
    } else {
      a["data"] = matrix_json(cfg.a->data);
    }
    problem["A"] = std::move(a);
  }
  Json c = Json::array();
  for (const auto& set : cfg.c_sets) c.push_back(set_json(set));
  problem["C"] = std::move(c);
  Json q = Json::array();
  for (const auto& set : cfg.q_sets) q.push_back(set_json(set));
  problem["Q"] = std::move(q);
  Json f;
  if (cfg.f.kind == FSpec::Kind::ToPoint) {
    f["type"] = "to_point";
    f["a"] = vector_json(cfg.f.a);
  } else {
    f["type"] = "affine";
    f["M"] = matrix_json(cfg.f.m);
    f["q"] = vector_json(cfg.f.q);
  }
  problem["F"] = std::move(f);
  root["problem"] = std::move(problem);

  Json solver;
  solver["variant"] = cfg.variant;
  solver["eta"] = cfg.eta;
  solver["sigma"] = cfg.sigma;
  Json control;
  control["mode"] = cfg.control.mode;
  if (cfg.control.s) control["s"] = *cfg.control.s;
  if (cfg.control.blocks_c || cfg.control.blocks_q) {
    Json blocks;
    if (cfg.control.blocks_c) blocks["C"] = *cfg.control.blocks_c;
    if (cfg.control.blocks_q) blocks["Q"] = *cfg.control.blocks_q;
    control["blocks"] = std::move(blocks);
  }
  solver["control"] = std::move(control);
  if (cfg.rho) solver["rho"] = *cfg.rho;
  solver["lambda0"] = cfg.lambda0;
  solver["p"] = cfg.p;
  solver["alpha"] = cfg.alpha;
  solver["epsilon"] = cfg.epsilon;
  solver["max_iter"] = cfg.max_iter;
  solver["tol_step"] = cfg.tol_step;
  solver["tol_residual"] = cfg.tol_residual;
  solver["seed"] = cfg.seed;
  if (cfg.u0) solver["u0"] = vector_json(*cfg.u0);
  root["solver"] = std::move(solver);

  Json output;
  if (cfg.trace_path) output["trace_path"] = *cfg.trace_path;
  output["format"] = cfg.format;
  output["reference"] = cfg.reference;
  root["output"] = std::move(output);

  return root.dump(2);
}

bool operator==(const RunConfig& lhs, const RunConfig& rhs) {
  auto mat_eq = [](const Matrix& x, const Matrix& y) {
    return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
  };
  auto same = [](const Vector& x, const Vector& y) {
    return x.size() == y.size() && x == y;
  };
  auto aspec_eq = [&](const std::optional<ASpec>& x, const std::optional<ASpec>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    if (x->kind != y->kind) return false;
    if (x->kind == ASpec::Kind::Csv) return x->csv == y->csv;
    return mat_eq(x->data, y->data);
  };
  auto fspec_eq = [&](const FSpec& x, const FSpec& y) {
    if (x.kind != y.kind) return false;
    if (x.kind == FSpec::Kind::ToPoint) return same(x.a, y.a);
    return mat_eq(x.m, y.m) && same(x.q, y.q);
  };
  auto vec_eq = [&](const std::optional<Vector>& x, const std::optional<Vector>& y) {
    if (x.has_value() != y.has_value()) return false;
    return !x || same(*x, *y);
  };
  return lhs.d1 == rhs.d1 && lhs.d2 == rhs.d2 && aspec_eq(lhs.a, rhs.a) &&
         lhs.c_sets == rhs.c_sets && lhs.q_sets == rhs.q_sets &&
         fspec_eq(lhs.f, rhs.f) && lhs.variant == rhs.variant &&
         lhs.eta == rhs.eta && lhs.sigma == rhs.sigma &&
         lhs.control.mode == rhs.control.mode && lhs.control.s == rhs.control.s &&
         lhs.control.blocks_c == rhs.control.blocks_c &&
         lhs.control.blocks_q == rhs.control.blocks_q && lhs.rho == rhs.rho &&
         lhs.lambda0 == rhs.lambda0 && lhs.p == rhs.p && lhs.alpha == rhs.alpha &&
         lhs.epsilon == rhs.epsilon && lhs.max_iter == rhs.max_iter &&
         lhs.tol_step == rhs.tol_step && lhs.tol_residual == rhs.tol_residual &&
         lhs.seed == rhs.seed && vec_eq(lhs.u0, rhs.u0) &&
         lhs.trace_path == rhs.trace_path && lhs.format == rhs.format &&
         lhs.reference == rhs.reference;
}

Problem build_problem(const RunConfig& cfg) {
  Problem problem;
  problem.d1 = cfg.d1;
  problem.c_sets = cfg.c_sets;
  problem.q_sets = cfg.q_sets;
  if (cfg.a) {
    LinearMap a = cfg.a->kind == ASpec::Kind::Csv ? load_matrix_csv(cfg.a->csv)
                                                  : LinearMap(cfg.a->data);
    if (cfg.d2 && *cfg.d2 != a.rows()) {
      throw ConfigError("problem.d2 does not match the rows of problem.A");
    }
    problem.d2 = static_cast<int>(a.rows());
    problem.a = std::move(a);
  } else if (cfg.d2) {
    problem.d2 = *cfg.d2;
  }
  problem.f = cfg.f.kind == FSpec::Kind::ToPoint ? to_point_map(cfg.f.a)
                                                 : affine_map(cfg.f.m, cfg.f.q);
  validate_problem(problem);
  return problem;
}

SolveOptions build_solve_options(const RunConfig& cfg, const Problem& problem) {
  SolveOptions options;

  VariantConfig variant;
  if (cfg.variant == "product") {
    variant.kind = VariantConfig::Kind::Product;
  } else if (cfg.variant == "simultaneous") {
    variant.kind = VariantConfig::Kind::Simultaneous;
  } else {
    variant.kind = VariantConfig::Kind::Alternating;
  }
  if (!(cfg.eta > 0 && cfg.eta < 1)) throw ConfigError("eta must lie in (0, 1)");
  variant.eta = cfg.eta;
  variant.sigma = cfg.sigma == "one" ? ExtrapolationMode::One : ExtrapolationMode::Tau;
  variant.explicit_rho = cfg.rho;
  options.variant = variant;

  const std::string& mode = cfg.control.mode;
  if (mode == "sequential") {
    options.uk_mode = UkMode::Sequential;
    if (cfg.control.blocks_c || cfg.control.blocks_q) {
      throw ConfigError("solver.control.blocks is not valid with sequential mode");
    }
  } else if (mode == "simultaneous") {
    options.uk_mode = UkMode::Simultaneous;
  } else {
    options.uk_mode = UkMode::Product;
  }

  auto make_side = [&](int m, const std::optional<std::vector<std::vector<int>>>& blocks,
                       const char* side) -> Control {
    if (m == 0) return make_full_control(1);  // placeholder, never selected
    if (mode == "sequential") return make_cyclic_control(m, cfg.control.s);
    if (blocks) return make_block_control(m, *blocks, cfg.control.s);
    if (cfg.control.s && *cfg.control.s < 1) {
      throw ConfigError(std::string("solver.control.s invalid for ") + side);
    }
    return make_full_control(m);
  };
  options.control_c = make_side(static_cast<int>(problem.c_sets.size()),
                                cfg.control.blocks_c, "C");
  options.control_q = make_side(static_cast<int>(problem.q_sets.size()),
                                cfg.control.blocks_q, "Q");

  options.schedule = make_schedule(cfg.lambda0, cfg.p);
  options.alpha = cfg.alpha;
  options.epsilon = cfg.epsilon;
  if (cfg.max_iter < 0) throw ConfigError("max_iter must be >= 0");
  options.max_iter = cfg.max_iter;
  if (cfg.tol_step < 0) throw ConfigError("tol_step must be >= 0");
  options.tol_step = cfg.tol_step;
  if (cfg.tol_residual < 0) throw ConfigError("tol_residual must be >= 0");
  options.tol_residual = cfg.tol_residual;
  if (cfg.u0) options.u0 = *cfg.u0;
  return options;
}

std::optional<Vector> maybe_reference(const RunConfig& cfg,
                                      const Problem& problem) {
  if (!cfg.reference) return std::nullopt;
  return vi_solution_oracle_identity(problem);
}

namespace {

Json record_json(const TraceRecord& r) {
  Json j;
  j["k"] = r.k;
  j["lambda"] = r.lambda;
  j["step_norm"] = r.step_norm;
  j["max_dist_c"] = r.max_dist_c;
  j["max_dist_q"] = r.max_dist_q;
  j["tk_residual"] = r.tk_residual;
  if (r.dist_to_ref) j["dist_to_ref"] = *r.dist_to_ref;
  return j;
}

}  // namespace

void write_trace_jsonl(std::ostream& out, const std::vector<TraceRecord>& trace) {
  for (const auto& r : trace) out << record_json(r).dump() << '\n';
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
  out << "k,lambda,step_norm,max_dist_c,max_dist_q,tk_residual,dist_to_ref\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& r : trace) {
    line.str("");
    line << r.k << ',' << r.lambda << ',' << r.step_norm << ',' << r.max_dist_c
         << ',' << r.max_dist_q << ',' << r.tk_residual << ',';
    if (r.dist_to_ref) line << *r.dist_to_ref;
    out << line.str() << '\n';
  }
}

std::string summary_json(const RunConfig& cfg, const SolveResult& result,
                         const std::optional<Vector>& reference,
                         double wall_seconds) {
  Json summary;
  summary["config"] = Json::parse(canonical_json(cfg));
  summary["status"] = result.diverged ? "diverged" : "completed";
  if (!result.message.empty()) summary["message"] = result.message;
  summary["iterations"] = result.iterations;
  Json final_state;
  final_state["u"] = vector_json(result.u);
  if (!result.trace.empty()) {
    const TraceRecord& last = result.trace.back();
    final_state["step_norm"] = last.step_norm;
    final_state["max_dist_c"] = last.max_dist_c;
    final_state["max_dist_q"] = last.max_dist_q;
    final_state["tk_residual"] = last.tk_residual;
    if (last.dist_to_ref) final_state["dist_to_ref"] = *last.dist_to_ref;
  }
  summary["final"] = std::move(final_state);
  if (reference) summary["reference"] = vector_json(*reference);
  Json diag;
  diag["tau_near_null_fallbacks"] = result.diagnostics.near_null_adjoint;
  diag["degenerate_normals"] = result.diagnostics.degenerate_normal;
  summary["diagnostics"] = std::move(diag);
  summary["wall_time_s"] = wall_seconds;
  return summary.dump(2);
}

}  // namespace oam
