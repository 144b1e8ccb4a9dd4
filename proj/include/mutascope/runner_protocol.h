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

#ifndef MUTASCOPE_RUNNER_PROTOCOL_H_
#define MUTASCOPE_RUNNER_PROTOCOL_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/outcome_matrix.h"

namespace mutascope {

// file (workspace-relative) -> executed 1-based lines
using CoverageMap = std::map<std::string, std::set<int>>;

// One `{"type":"result",...}` line.
struct RunnerResult {
  std::string id;
  Outcome outcome = Outcome::kPass;  // never kTimeout on the wire
  std::int64_t duration_ms = 0;
  std::optional<CoverageMap> covered;
};

// Wire encoding. Each function returns one line without the trailing newline.
std::string FormatTestMessage(std::string_view id);
std::string FormatResultMessage(const RunnerResult& result);

// Parsers throw RunnerProtocolError on anything off-contract.
std::vector<std::string> ParseCollectOutput(std::string_view out);
RunnerResult ParseResultOutput(std::string_view out, std::string_view expected_id,
                               bool expect_coverage);

// Invokes a protocol runner. The command is argv-style, e.g.
// {"python3", "/path/runner.py"}; the subcommand is appended.
class RunnerClient {
 public:
  explicit RunnerClient(std::vector<std::string> command);

  // Splits on whitespace; no quoting.
  static RunnerClient FromCommandLine(std::string_view command_line);

  const std::vector<std::string>& command() const { return command_; }

  std::vector<std::string> Collect(const std::filesystem::path& workspace,
                                   std::chrono::milliseconds timeout) const;

  // nullopt when the process was killed at `timeout`.
  std::optional<RunnerResult> Baseline(const std::filesystem::path& workspace,
                                       const std::string& test_id,
                                       std::chrono::milliseconds timeout) const;

  // Runs one test on a (possibly mutated) workspace. Timeouts become
  // TIMEOUT; protocol failures become ERROR with a diagnostic.
  TestOutcome Run(const std::filesystem::path& workspace,
                  const std::string& test_id,
                  std::chrono::milliseconds timeout) const;

 private:
  std::vector<std::string> command_;
};

}  // namespace mutascope

#endif  // MUTASCOPE_RUNNER_PROTOCOL_H_
