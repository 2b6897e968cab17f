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

#ifndef OAM_CHECK_HPP
#define OAM_CHECK_HPP

#include "oam/solver.hpp"

namespace oam {

// Sampled invariant suites run against a configured problem: the cutter and
// SQNE inequalities, tau >= 1, half-space containment of certified feasible
// points, the Landweber fix-set identity, and the half-relaxation cutter
// equivalence. Suites that need certified points of S are skipped (with a
// note) when the problem has no diagonal-A oracle representation.

struct SuiteResult {
  std::string name;
  double worst = 0;  // worst violation observed (0 when skipped)
  double tol = 0;
  bool pass = true;
  bool skipped = false;
  std::string note;
};

std::vector<SuiteResult> run_invariant_suites(const Problem& problem,
                                              const SolveOptions& options,
                                              int samples, std::uint64_t seed);

bool all_pass(const std::vector<SuiteResult>& results);

}  // namespace oam

#endif  // OAM_CHECK_HPP
