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

#include "support/fixtures.h"

#include <algorithm>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "mutascope/subprocess.h"
#include "mutascope/workspace.h"

namespace mutascope::testing {

namespace fs = std::filesystem;

fs::path FixtureDir() { return MUTASCOPE_FIXTURE_DIR; }

fs::path FixtureRunnerScript() { return FixtureDir() / "fixture_runner.py"; }

fs::path CliBinary() { return MUTASCOPE_CLI_PATH; }

RunnerClient FixtureRunner() {
  return RunnerClient({"python3", FixtureRunnerScript().string()});
}

std::vector<std::string> SumTriangleTestIds() {
  std::vector<std::string> ids;
  for (const char* name : {"testSum1", "testSum2", "testSum3", "testTriangle1",
                           "testTriangle2", "testTriangle3", "testTriangle4",
                           "testTriangle5", "testTriangle6"}) {
    ids.push_back(std::string("test_sut.py::TestSut::") + name);
  }
  return ids;
}

OutcomeMatrix SumTriangleMatrix() {
  std::vector<Mutant> mutants = {
      {1, "AOR", "sut.py", {33, 34}, 2, "+", "-"},
      {2, "AOR", "sut.py", {37, 38}, 2, "+", "-"},
      {3, "ROR-negate", "sut.py", {116, 118}, 9, "==", "!="},
      {4, "ROR-negate", "sut.py", {127, 129}, 9, "==", "!="},
  };
  const auto ids = SumTriangleTestIds();
  std::vector<MatrixTest> tests;
  for (const auto& id : ids) tests.push_back({id, 1});
  OutcomeMatrix m(mutants, tests);

  constexpr Outcome P = Outcome::kPass, F = Outcome::kFail, E = Outcome::kError;
  const Outcome sum_rows[2][3] = {{F, F, F}, {F, F, P}};
  const Outcome tri_rows[2][6] = {{E, F, E, P, P, P}, {E, F, E, F, P, P}};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 3; ++c) m.Set(r + 1, ids[c], {sum_rows[r][c], 1, ""});
    for (int c = 0; c < 6; ++c) m.Set(r + 3, ids[3 + c], {tri_rows[r][c], 1, ""});
  }
  return m;
}

OracleMethodScore OracleScoreColumn(const std::vector<Cell>& column) {
  OracleMethodScore s;
  for (const auto& cell : column) {
    if (!cell) continue;
    switch (*cell) {
      case Outcome::kFail:
      case Outcome::kError:
        ++s.killed;
        break;
      case Outcome::kPass:
        ++s.survived;
        break;
      case Outcome::kTimeout:
        ++s.timeouts;
        break;
    }
  }
  s.num = s.killed;
  s.den = s.killed + s.survived;
  return s;
}

MutantStatus OracleClassifyRow(const std::vector<Cell>& row) {
  auto has = [&](Outcome o) {
    return std::any_of(row.begin(), row.end(),
                       [&](const Cell& c) { return c && *c == o; });
  };
  if (has(Outcome::kFail)) return MutantStatus::kKilledFailure;
  if (has(Outcome::kError)) return MutantStatus::kKilledError;
  if (has(Outcome::kTimeout)) return MutantStatus::kKilledTimeout;
  if (has(Outcome::kPass)) return MutantStatus::kSurvived;
  return MutantStatus::kUncovered;
}

namespace {

double RankSumStatistic(const std::vector<double>& pooled,
                        const std::vector<bool>& in_a) {
  // Counts pairs (x in a, y in b) with x > y, ties as one half.
  double u = 0;
  for (std::size_t i = 0; i < pooled.size(); ++i) {
    if (!in_a[i]) continue;
    for (std::size_t j = 0; j < pooled.size(); ++j) {
      if (in_a[j]) continue;
      if (pooled[i] > pooled[j]) u += 1;
      if (pooled[i] == pooled[j]) u += 0.5;
    }
  }
  return u;
}

}  // namespace

double PermutationPValue(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  std::vector<bool> observed(pooled.size(), false);
  std::fill(observed.begin(), observed.begin() + a.size(), true);
  const double u_obs = RankSumStatistic(pooled, observed);

  std::int64_t total = 0, at_most = 0, at_least = 0;
  const std::size_t n = pooled.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != a.size()) continue;
    std::vector<bool> in_a(n);
    for (std::size_t i = 0; i < n; ++i) in_a[i] = (mask >> i) & 1u;
    const double u = RankSumStatistic(pooled, in_a);
    ++total;
    if (u <= u_obs) ++at_most;
    if (u >= u_obs) ++at_least;
  }
  const double p = 2.0 * static_cast<double>(std::min(at_most, at_least)) /
                   static_cast<double>(total);
  return std::min(1.0, p);
}

OutcomeMatrix MatrixFromGrid(const std::vector<std::vector<Cell>>& grid) {
  const std::size_t rows = grid.size();
  const std::size_t cols = grid.empty() ? 0 : grid[0].size();
  // Shapes repeat across millions of grids, so the axes are built once.
  thread_local std::map<std::pair<std::size_t, std::size_t>,
                        std::pair<std::vector<Mutant>, std::vector<MatrixTest>>>
      axes;
  auto& [mutants, tests] = axes[{rows, cols}];
  if (tests.size() != cols || mutants.size() != rows) {
    for (std::size_t c = 0; c < cols; ++c) tests.push_back({"t" + std::to_string(c), 1});
    for (std::size_t r = 0; r < rows; ++r) {
      Mutant mu;
      mu.id = static_cast<MutantId>(r + 1);
      mu.operator_id = "AOR";
      mu.file = "f.py";
      mu.original = "+";
      mu.replacement = "-";
      mutants.push_back(mu);
    }
  }
  OutcomeMatrix m(mutants, tests);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (grid[r][c]) m.Set(static_cast<MutantId>(r + 1), tests[c].id, {*grid[r][c], 1, ""});
    }
  }
  return m;
}

std::string Git(const fs::path& dir, const std::vector<std::string>& args,
                const std::string& email) {
  std::vector<std::string> argv = {"git",
                                   "-c", "user.name=Dev",
                                   "-c", "user.email=" + email,
                                   "-c", "commit.gpgsign=false",
                                   "-c", "init.defaultBranch=main"};
  argv.insert(argv.end(), args.begin(), args.end());
  const auto res = RunProcess(argv, dir, std::nullopt);
  if (res.exit_code != 0) {
    throw std::runtime_error("git failed: " + res.err);
  }
  return res.out;
}

ScriptedHistory BuildScriptedRepo(const fs::path& root) {
  auto write = [&](const std::string& text) { WriteFileBytes(root / "test_a.py", text); };
  auto commit = [&](const std::string& email, const std::string& message) {
    Git(root, {"add", "-A"}, email);
    Git(root, {"commit", "-q", "-m", message}, email);
  };
  Git(root, {"init", "-q"});
  std::string head = "import unittest\n\n\nclass TestA(unittest.TestCase):\n";
  const std::string three = "    def test_three(self):\n        self.assertFalse(False)\n";
  // c1 alice: creates all three tests.
  write(head + "    def test_one(self):\n        self.assertEqual(1, 1)\n\n" +
        "    def test_two(self):\n        self.assertTrue(True)\n\n" + three);
  commit("alice@example.com", "c1");
  // c2 bob: edits test_one.
  std::string one = "    def test_one(self):\n        self.assertEqual(2 - 1, 1)\n\n";
  write(head + one + "    def test_two(self):\n        self.assertTrue(True)\n\n" + three);
  commit("bob@example.com", "c2");
  // c3 alice under a differently cased address: edits test_two.
  const std::string two = "    def test_two(self):\n        self.assertTrue(not False)\n\n";
  write(head + one + two + three);
  commit("Alice@Example.COM", "c3");
  // c4 carol: touches another file only.
  WriteFileBytes(root / "other.py", "x = 1\n");
  commit("carol@example.com", "c4");
  // c5 bob: shifts every method down a line without touching any.
  head = "# header\n" + head;
  write(head + one + two + three);
  commit("bob@example.com", "c5");
  // c6 carol: appends a line to test_one.
  one = "    def test_one(self):\n        self.assertEqual(2 - 1, 1)\n"
        "        self.assertIsNotNone(self)\n\n";
  write(head + one + two + three);
  commit("carol@example.com", "c6");
  // c7 dave: grows test_two to three body lines.
  const std::string two_long =
      "    def test_two(self):\n        self.assertTrue(not False)\n"
      "        x = 1\n        self.assertEqual(x, 1)\n\n";
  write(head + one + two_long + three);
  commit("dave@example.com", "c7");
  // frank edits test_three on a side branch that erin merges; only the
  // merge is on the first-parent chain.
  const std::string three_new = "    def test_three(self):\n        self.assertFalse(not True)\n";
  Git(root, {"checkout", "-q", "-b", "side"});
  write(head + one + two_long + three_new);
  commit("frank@example.com", "side");
  Git(root, {"checkout", "-q", "main"});
  Git(root, {"merge", "-q", "--no-ff", "-m", "merge", "side"}, "erin@example.com");
  // c8 erin: deletes the middle body line of test_two.
  write(head + one +
        "    def test_two(self):\n        self.assertTrue(not False)\n"
        "        self.assertEqual(x, 1)\n\n" +
        three_new);
  commit("erin@example.com", "c8");

  // Project commits: alice 2, bob 2, carol 2, dave 1, frank 1, erin 2.
  ScriptedHistory truth;
  truth.total_commits = 10;
  truth.methods["test_one"] = {3, 3, Rational(2 + 2 + 2, 3 * 10)};  // alice bob carol
  truth.methods["test_two"] = {4, 3, Rational(2 + 1 + 2, 3 * 10)};  // alice x2 dave erin
  truth.methods["test_three"] = {2, 2, Rational(2 + 2, 2 * 10)};    // alice, merge by erin
  return truth;
}

std::map<std::string, std::set<std::string>> ReadSmellLabels(const std::string& text) {
  std::map<std::string, std::set<std::string>> labels;
  std::istringstream in(text);
  std::string line;
  std::optional<std::set<std::string>> pending;
  const std::regex expect(R"(^\s*# expect:(.*)$)");
  const std::regex def(R"(^\s*def (\w+)\()");
  std::smatch match;
  while (std::getline(in, line)) {
    if (std::regex_match(line, match, expect)) {
      std::istringstream names(match[1].str());
      pending.emplace();
      for (std::string n; names >> n;) pending->insert(n);
    } else if (pending && std::regex_search(line, match, def)) {
      labels[match[1].str()] = *pending;
      pending.reset();
    }
  }
  return labels;
}

}  // namespace mutascope::testing
