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

#include "mutascope/runner_protocol.h"

#include <chrono>

#include "gtest/gtest.h"
#include "mutascope/error.h"
#include "mutascope/subprocess.h"
#include "mutascope/workspace.h"
#include "support/fixtures.h"

namespace mutascope {
namespace {

using std::chrono::milliseconds;

TEST(RunnerProtocol, FormatsMessages) {
  EXPECT_EQ(FormatTestMessage("a.py::T::t"), R"({"type":"test","id":"a.py::T::t"})");
  RunnerResult r{"a.py::t", Outcome::kFail, 12, CoverageMap{{"s.py", {3, 1}}}};
  EXPECT_EQ(FormatResultMessage(r),
            R"({"type":"result","id":"a.py::t","outcome":"FAIL","duration_ms":12,)"
            R"("covered":{"s.py":[1,3]}})");
  r.covered.reset();
  EXPECT_EQ(FormatResultMessage(r),
            R"({"type":"result","id":"a.py::t","outcome":"FAIL","duration_ms":12})");
}

TEST(RunnerProtocol, ParsesCollect) {
  const auto ids = ParseCollectOutput(
      "{\"type\":\"test\",\"id\":\"a\"}\n\n{\"type\":\"test\",\"id\":\"b\"}\n");
  EXPECT_EQ(ids, (std::vector<std::string>{"a", "b"}));
  EXPECT_TRUE(ParseCollectOutput("").empty());
  EXPECT_THROW(ParseCollectOutput("{\"type\":\"test\",\"id\":\"a\"}\n"
                                  "{\"type\":\"test\",\"id\":\"a\"}\n"),
               RunnerProtocolError);
  EXPECT_THROW(ParseCollectOutput("not json\n"), RunnerProtocolError);
  EXPECT_THROW(ParseCollectOutput("{\"type\":\"result\",\"id\":\"a\"}\n"),
               RunnerProtocolError);
}

TEST(RunnerProtocol, ParsesResults) {
  const auto r = ParseResultOutput(
      R"({"type":"result","id":"t","outcome":"PASS","duration_ms":5,"covered":{"s.py":[2,9]}})",
      "t", true);
  EXPECT_EQ(r.outcome, Outcome::kPass);
  EXPECT_EQ(r.duration_ms, 5);
  ASSERT_TRUE(r.covered);
  EXPECT_EQ(r.covered->at("s.py"), (std::set<int>{2, 9}));

  const std::string ok = R"({"type":"result","id":"t","outcome":"ERROR","duration_ms":0})";
  EXPECT_EQ(ParseResultOutput(ok, "t", false).outcome, Outcome::kError);
  EXPECT_THROW(ParseResultOutput(ok, "t", true), RunnerProtocolError);
  EXPECT_THROW(ParseResultOutput(ok, "other", false), RunnerProtocolError);
  EXPECT_THROW(ParseResultOutput(ok + "\n" + ok, "t", false), RunnerProtocolError);
  EXPECT_THROW(ParseResultOutput(
                   R"({"type":"result","id":"t","outcome":"TIMEOUT","duration_ms":0})",
                   "t", false),
               RunnerProtocolError);
  EXPECT_THROW(ParseResultOutput(
                   R"({"type":"result","id":"t","outcome":"PASS","duration_ms":-1})",
                   "t", false),
               RunnerProtocolError);
}

TEST(RunnerProtocol, SplitsCommandLine) {
  const auto c = RunnerClient::FromCommandLine("  python3   run.py --fast ");
  EXPECT_EQ(c.command(), (std::vector<std::string>{"python3", "run.py", "--fast"}));
  EXPECT_THROW(RunnerClient::FromCommandLine("   "), ConfigError);
}

TEST(RunnerProtocol, FixtureRunnerSpeaksProtocol) {
  const auto ws = testing::FixtureDir() / "sum_triangle";
  const auto runner = testing::FixtureRunner();
  EXPECT_EQ(runner.Collect(ws, milliseconds(30000)), testing::SumTriangleTestIds());
  const auto b = runner.Baseline(ws, "test_sut.py::TestSut::testSum1", milliseconds(30000));
  ASSERT_TRUE(b);
  EXPECT_EQ(b->outcome, Outcome::kPass);
  ASSERT_TRUE(b->covered);
  EXPECT_TRUE(b->covered->at("sut.py").count(2));
  EXPECT_EQ(runner.Run(ws, "test_sut.py::TestSut::testSum1", milliseconds(30000)).outcome,
            Outcome::kPass);
}

TEST(RunnerProtocol, MisbehavingRunnerBecomesError) {
  TempDir dir;
  const RunnerClient garbage({"sh", "-c", "echo hello", "sh"});
  auto r = garbage.Run(dir.path(), "t", milliseconds(10000));
  EXPECT_EQ(r.outcome, Outcome::kError);
  EXPECT_FALSE(r.diagnostic.empty());

  const RunnerClient crashing({"sh", "-c", "echo boom >&2; exit 4", "sh"});
  r = crashing.Run(dir.path(), "t", milliseconds(10000));
  EXPECT_EQ(r.outcome, Outcome::kError);
  EXPECT_NE(r.diagnostic.find("boom"), std::string::npos);
}

TEST(RunnerProtocol, HangingRunnerTimesOut) {
  TempDir dir;
  const RunnerClient hanging({"sh", "-c", "sleep 30", "sh"});
  const auto start = std::chrono::steady_clock::now();
  const auto r = hanging.Run(dir.path(), "t", milliseconds(200));
  const auto elapsed = std::chrono::steady_clock::now() - start;
  EXPECT_EQ(r.outcome, Outcome::kTimeout);
  EXPECT_GE(r.duration_ms, 200);
  EXPECT_LT(elapsed, std::chrono::seconds(10));
  EXPECT_FALSE(hanging.Baseline(dir.path(), "t", milliseconds(200)));
}

TEST(Subprocess, CapturesOutputAndStatus) {
  TempDir dir;
  const auto res = RunProcess({"sh", "-c", "pwd; echo err >&2; exit 3"}, dir.path(),
                              std::nullopt);
  EXPECT_EQ(res.exit_code, 3);
  EXPECT_FALSE(res.timed_out);
  EXPECT_EQ(res.err, "err\n");
  EXPECT_NE(res.out.find(dir.path().filename().string()), std::string::npos);
  EXPECT_THROW(RunProcess({"/nonexistent/binary"}, dir.path(), std::nullopt),
               WorkspaceError);
}

TEST(Subprocess, KillsTheWholeProcessGroup) {
  TempDir dir;
  // The grandchild holds stdout open; a kill of only the child would hang.
  const auto res = RunProcess({"sh", "-c", "sleep 30 & sleep 30"}, dir.path(),
                              milliseconds(200));
  EXPECT_TRUE(res.timed_out);
  EXPECT_LT(res.elapsed_ms, 10000);
}

}  // namespace
}  // namespace mutascope
