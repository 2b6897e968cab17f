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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

std::string slurp(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Runs the installed CLI binary and captures stdout.
RunResult run_cli(const std::string& args, const fs::path& dir) {
  fs::path out = dir / "stdout.txt";
  std::string cmd = std::string(OAM_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2> " + (dir / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.stdout_text = slurp(out);
  return r;
}

fs::path temp_dir() {
  fs::path dir = fs::temp_directory_path() / "oam_cli_tests";
  fs::create_directories(dir);
  return dir;
}

fs::path write_config(const fs::path& dir, const std::string& name,
                      const std::string& text) {
  fs::path path = dir / name;
  std::ofstream out(path);
  out << text;
  return path;
}

std::string cfp_config(const std::string& trace_path, int max_iter,
                       const std::string& extra_solver = "") {
  return R"({
    "problem": {
      "d1": 2,
      "C": [
        {"type": "halfspace", "a": [1, 0], "beta": 0},
        {"type": "halfspace", "a": [0, 1], "beta": 0}
      ],
      "F": {"type": "to_point", "a": [1, 1]}
    },
    "solver": {"variant": "product", "max_iter": )" +
         std::to_string(max_iter) + extra_solver + R"(},
    "output": {"trace_path": ")" +
         trace_path + R"(", "format": "jsonl"}
  })";
}

}  // namespace

TEST_CASE("solve writes a trace and a summary and exits 0") {
  fs::path dir = temp_dir();
  fs::path trace = dir / "trace.jsonl";
  fs::path cfg = write_config(dir, "cfp.json", cfp_config(trace.string(), 50));

  RunResult r = run_cli("solve " + cfg.string(), dir);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"status\": \"completed\"") != std::string::npos);

  std::string trace_text = slurp(trace);
  int lines = 0;
  for (char c : trace_text) lines += c == '\n';
  CHECK(lines == 50);
  CHECK(trace_text.find("\"max_dist_c\"") != std::string::npos);
}

TEST_CASE("two solve runs produce bitwise-identical traces") {
  fs::path dir = temp_dir();
  fs::path trace1 = dir / "trace1.jsonl";
  fs::path trace2 = dir / "trace2.jsonl";
  fs::path cfg1 = write_config(dir, "det1.json", cfp_config(trace1.string(), 200));
  fs::path cfg2 = write_config(dir, "det2.json", cfp_config(trace2.string(), 200));
  // Identical solver config, differing only in output path.
  CHECK(run_cli("solve " + cfg1.string(), dir).exit_code == 0);
  CHECK(run_cli("solve " + cfg2.string(), dir).exit_code == 0);
  CHECK(slurp(trace1) == slurp(trace2));
}

TEST_CASE("csv trace carries the fixed header") {
  fs::path dir = temp_dir();
  fs::path trace = dir / "trace.csv";
  std::string text = cfp_config(trace.string(), 5);
  text.replace(text.find("jsonl"), 5, "csv");
  fs::path cfg = write_config(dir, "csv.json", text);
  CHECK(run_cli("solve " + cfg.string(), dir).exit_code == 0);
  std::string first_line = slurp(trace);
  first_line = first_line.substr(0, first_line.find('\n'));
  CHECK(first_line ==
        "k,lambda,step_norm,max_dist_c,max_dist_q,tk_residual,dist_to_ref");
}

TEST_CASE("configuration errors exit 2") {
  fs::path dir = temp_dir();

  SUBCASE("p outside (0,1]") {
    fs::path cfg = write_config(dir, "bad_p.json",
                                cfp_config((dir / "t.jsonl").string(), 10,
                                           ", \"p\": 1.5"));
    CHECK(run_cli("solve " + cfg.string(), dir).exit_code == 2);
  }

  SUBCASE("zero A with nonempty Q") {
    fs::path cfg = write_config(dir, "zero_a.json", R"({
      "problem": {
        "d1": 2, "d2": 2,
        "A": {"data": [[0, 0], [0, 0]]},
        "Q": [{"type": "halfspace", "a": [1, 0], "beta": 0}],
        "F": {"type": "to_point", "a": [1, 1]}
      },
      "solver": {"variant": "product", "max_iter": 10}
    })");
    CHECK(run_cli("solve " + cfg.string(), dir).exit_code == 2);
  }

  SUBCASE("unknown key") {
    fs::path cfg = write_config(dir, "unknown.json", R"({
      "problem": {"d1": 2, "F": {"type": "to_point", "a": [1, 1]},
                  "C": [{"type": "halfspace", "a": [1, 0], "beta": 0}]},
      "solver": {"variant": "product", "turbo": true}
    })");
    CHECK(run_cli("solve " + cfg.string(), dir).exit_code == 2);
  }

  SUBCASE("missing file") {
    CHECK(run_cli("solve " + (dir / "missing.json").string(), dir).exit_code == 2);
  }
}

TEST_CASE("divergence exits 3 after dumping the trace") {
  fs::path dir = temp_dir();
  fs::path trace = dir / "div.jsonl";
  fs::path cfg = write_config(dir, "div.json", R"({
    "problem": {
      "d1": 2,
      "C": [{"type": "halfspace", "a": [1, 0], "beta": 0}],
      "F": {"type": "affine", "M": [[1, 0], [0, 1]], "q": [0, 0]}
    },
    "solver": {"variant": "product", "max_iter": 50, "lambda0": 1e300,
               "u0": [3, 3]},
    "output": {"trace_path": ")" + trace.string() + R"("}
  })");
  RunResult r = run_cli("solve " + cfg.string(), dir);
  CHECK(r.exit_code == 3);
  CHECK(r.stdout_text.find("\"status\": \"diverged\"") != std::string::npos);
  CHECK(fs::exists(trace));
}

TEST_CASE("check command") {
  fs::path dir = temp_dir();
  fs::path cfg = write_config(dir, "check.json",
                              cfp_config((dir / "t.jsonl").string(), 10));

  SUBCASE("passing problem exits 0 and prints one line per suite") {
    RunResult r = run_cli("check " + cfg.string() + " --samples 200", dir);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("suite cutter:") != std::string::npos);
    CHECK(r.stdout_text.find("suite sqne:") != std::string::npos);
    CHECK(r.stdout_text.find("suite tau_ge_1:") != std::string::npos);
    CHECK(r.stdout_text.find("suite halfspace_containment:") != std::string::npos);
    CHECK(r.stdout_text.find("suite landweber_fix:") != std::string::npos);
    CHECK(r.stdout_text.find("suite half_relaxation_cutter:") != std::string::npos);
  }

  SUBCASE("samples must be positive") {
    CHECK(run_cli("check " + cfg.string() + " --samples 0", dir).exit_code == 2);
  }

  SUBCASE("rho above the admissible bound exits 2") {
    fs::path bad = write_config(dir, "bad_rho.json",
                                cfp_config((dir / "t lab.jsonl").string(), 10,
                                           ", \"rho\": 10.0"));
    CHECK(run_cli("check " + bad.string() + " --samples 50", dir).exit_code == 2);
  }
}

TEST_CASE("solve with a requested reference records dist_to_ref") {
  fs::path dir = temp_dir();
  fs::path trace = dir / "ref.jsonl";
  fs::path cfg = write_config(dir, "ref.json", R"({
    "problem": {
      "d1": 2, "d2": 2,
      "A": {"data": [[2, 0], [0, 1]]},
      "C": [{"type": "box", "lo": [-1, -1], "hi": [0, 0]}],
      "Q": [{"type": "halfspace", "a": [1, 0], "beta": 0}],
      "F": {"type": "to_point", "a": [1, -0.5]}
    },
    "solver": {"variant": "alternating", "max_iter": 40, "u0": [2, 2]},
    "output": {"trace_path": ")" + trace.string() + R"(",
               "reference": true}
  })");
  RunResult r = run_cli("solve " + cfg.string(), dir);
  CHECK(r.exit_code == 0);
  CHECK(r.stdout_text.find("\"reference\"") != std::string::npos);
  CHECK(slurp(trace).find("\"dist_to_ref\"") != std::string::npos);
}

TEST_CASE("oracle command") {
  fs::path dir = temp_dir();

  SUBCASE("CFP two-half-space example prints the origin") {
    fs::path cfg = write_config(dir, "oracle.json",
                                cfp_config((dir / "t.jsonl").string(), 10));
    RunResult r = run_cli("oracle " + cfg.string(), dir);
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("\"x_ref\"") != std::string::npos);
    // Both coordinates vanish.
    CHECK(r.stdout_text.find("[0, 0]") != std::string::npos);
  }

  SUBCASE("affine F is unsupported") {
    fs::path cfg = write_config(dir, "oracle_affine.json", R"({
      "problem": {
        "d1": 2,
        "C": [{"type": "halfspace", "a": [1, 0], "beta": 0}],
        "F": {"type": "affine", "M": [[2, 0], [0, 2]], "q": [1, 1]}
      },
      "solver": {"variant": "product"}
    })");
    CHECK(run_cli("oracle " + cfg.string(), dir).exit_code == 2);
  }
}
