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

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "oam/check.hpp"
#include "oam/config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;
constexpr int kExitInvariant = 4;

bool verbose() {
  const char* v = std::getenv("OAM_VERBOSE");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

void log_line(const std::string& msg) {
  if (verbose()) std::cerr << "[oam] " << msg << '\n';
}

int run_solve(const std::string& config_path) {
  oam::RunConfig cfg = oam::load_run_config(config_path);
  oam::Problem problem = oam::build_problem(cfg);
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);
  std::optional<oam::Vector> reference = oam::maybe_reference(cfg, problem);
  options.reference = reference;

  log_line("solving " + config_path + " (" + cfg.variant + " variant, " +
           std::to_string(options.max_iter) + " iterations max)");
  auto t0 = std::chrono::steady_clock::now();
  oam::SolveResult result = oam::solve(problem, options);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (cfg.trace_path) {
    std::ofstream trace(*cfg.trace_path);
    if (!trace) {
      std::cerr << "error: cannot open trace file '" << *cfg.trace_path << "'\n";
      return kExitConfig;
    }
    if (cfg.format == "csv") {
      oam::write_trace_csv(trace, result.trace);
    } else {
      oam::write_trace_jsonl(trace, result.trace);
    }
  }
  std::cout << oam::summary_json(cfg, result, reference, wall) << '\n';
  if (result.diverged) {
    std::cerr << "error: " << result.message << '\n';
    return kExitDivergence;
  }
  return kExitOk;
}

int run_check(const std::string& config_path, int samples) {
  if (samples <= 0) {
    std::cerr << "error: samples must be positive\n";
    return kExitConfig;
  }
  oam::RunConfig cfg = oam::load_run_config(config_path);
  oam::Problem problem = oam::build_problem(cfg);
  oam::SolveOptions options = oam::build_solve_options(cfg, problem);

  std::vector<oam::SuiteResult> results =
      oam::run_invariant_suites(problem, options, samples, cfg.seed);
  for (const auto& r : results) {
    std::cout << "suite " << r.name << ": ";
    if (r.skipped) {
      std::cout << "SKIP (" << r.note << ")\n";
      continue;
    }
    std::cout << "worst violation " << r.worst << " (tol " << r.tol << ") "
              << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) std::cout << "  [" << r.note << "]";
    std::cout << '\n';
  }
  return oam::all_pass(results) ? kExitOk : kExitInvariant;
}

int run_oracle(const std::string& config_path) {
  oam::RunConfig cfg = oam::load_run_config(config_path);
  oam::Problem problem = oam::build_problem(cfg);
  oam::Vector x = oam::vi_solution_oracle_identity(problem, 1e-10);
  std::cout << "{\"x_ref\": [";
  std::cout.precision(17);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (i) std::cout << ", ";
    std::cout << x[i];
  }
  std::cout << "]}\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"outer approximation solver for variational inequalities over "
               "split feasibility constraints"};
  app.require_subcommand(1);

  std::string config_path;
  int samples = 1000;

  CLI::App* solve_cmd = app.add_subcommand("solve", "run the solver");
  solve_cmd->add_option("config", config_path, "JSON config file")->required();

  CLI::App* check_cmd =
      app.add_subcommand("check", "run the sampled invariant suites");
  check_cmd->add_option("config", config_path, "JSON config file")->required();
  check_cmd->add_option("--samples", samples, "samples per suite");

  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "print the reference solution P_S(a)");
  oracle_cmd->add_option("config", config_path, "JSON config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(config_path);
    if (check_cmd->parsed()) return run_check(config_path, samples);
    return run_oracle(config_path);
  } catch (const oam::ConfigError& err) {
    std::cerr << "configuration error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& err) {
    std::cerr << "configuration error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& err) {
    std::cerr << "configuration error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const oam::DivergenceError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitDivergence;
  } catch (const oam::OracleError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitDivergence;
  } catch (const oam::InfeasibleError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return 1;
  }
}
