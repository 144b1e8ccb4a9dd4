// Copyright 2026 The Mutascope Authors
//
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

// Shared test fixtures and independent oracles.

#ifndef MUTASCOPE_TESTS_SUPPORT_FIXTURES_H_
#define MUTASCOPE_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mutascope/history_miner.h"
#include "mutascope/outcome_matrix.h"
#include "mutascope/runner_protocol.h"
#include "mutascope/scoring.h"

namespace mutascope::testing {

std::filesystem::path FixtureDir();
std::filesystem::path FixtureRunnerScript();
std::filesystem::path CliBinary();
RunnerClient FixtureRunner();

// Test ids of the sum/triangle corpus, in collection order.
std::vector<std::string> SumTriangleTestIds();

// The 4 x 9 matrix of the sum/triangle example. Mutants 1-2 live in `sum`
// and are covered only by the three sum tests; mutants 3-4 live in
// `triangle` and are covered only by the six triangle tests.
OutcomeMatrix SumTriangleMatrix();

// Enumeration oracles. A cell is nullopt when the test does not cover the
// mutant.
using Cell = std::optional<Outcome>;

struct OracleMethodScore {
  std::int64_t killed = 0;
  std::int64_t survived = 0;
  std::int64_t timeouts = 0;
  // Score as an unreduced fraction; den == 0 means undefined.
  std::int64_t num = 0;
  std::int64_t den = 0;
};

OracleMethodScore OracleScoreColumn(const std::vector<Cell>& column);
MutantStatus OracleClassifyRow(const std::vector<Cell>& row);

// Two-sided exact p-value of the rank-sum statistic of `a`, computed by
// enumerating every split of the pooled sample.
double PermutationPValue(const std::vector<double>& a, const std::vector<double>& b);

// Builds a matrix from a dense grid of cells (rows are mutants 1..n,
// columns are tests "t0".."tm").
OutcomeMatrix MatrixFromGrid(const std::vector<std::vector<Cell>>& grid);

// Runs `git` in `dir` with a fixed identity and clock; aborts the test on
// failure.
std::string Git(const std::filesystem::path& dir, const std::vector<std::string>& args,
                const std::string& email = "dev@example.com");

// Ground truth for the repository built by BuildScriptedRepo, keyed by
// method name in test_a.py.
struct ScriptedHistory {
  std::int64_t total_commits = 0;
  std::map<std::string, EvolutionMetrics> methods;
};

// Creates a git repository in `root` with ten first-parent-reachable commits
// by five authors, including a merged side branch.
ScriptedHistory BuildScriptedRepo(const std::filesystem::path& root);

// Smell labels of the corpus: each "# expect: A B" comment applies to the
// next `def`. Keyed by method name.
std::map<std::string, std::set<std::string>> ReadSmellLabels(const std::string& text);

}  // namespace mutascope::testing

#endif  // MUTASCOPE_TESTS_SUPPORT_FIXTURES_H_
