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

#ifndef MUTASCOPE_ORCHESTRATOR_H_
#define MUTASCOPE_ORCHESTRATOR_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mutascope/mutant.h"
#include "mutascope/outcome_matrix.h"
#include "mutascope/rational.h"
#include "mutascope/runner_protocol.h"

namespace mutascope {

struct BaselineRecord {
  std::string test_id;
  TestOutcome outcome;
  CoverageMap covered;
};

struct BaselineOptions {
  std::chrono::milliseconds per_test_timeout{120000};
};

// Collects every test and runs each once with coverage, in collect order.
// Throws RedSuiteError when any test does not PASS (including timeouts) and
// RunnerProtocolError on malformed runner output.
std::vector<BaselineRecord> RunBaseline(const std::filesystem::path& workspace,
                                        const RunnerClient& runner,
                                        const BaselineOptions& options = {});

// Tests whose baseline coverage includes (m.file, m.line), in baseline order.
std::vector<std::string> CoveringTests(const Mutant& m,
                                       const std::vector<BaselineRecord>& baseline);

// ceil(factor * baseline_duration_ms) + constant_ms.
std::int64_t TimeoutThreshold(std::int64_t baseline_duration_ms,
                              const Rational& factor, std::int64_t constant_ms);

struct ExecutionOptions {
  int jobs = 1;
  Rational timeout_factor = Rational(5, 4);
  std::int64_t timeout_constant_ms = 3000;
  // Append-only record of finished runs. With `resume`, entries already in
  // the journal are reused instead of re-executed.
  std::optional<std::filesystem::path> journal;
  bool resume = false;
};

// Runs every mutant against exactly its covering tests. Each worker owns a
// private copy of `workspace`; each (mutant, test) run is a fresh runner
// process. The result does not depend on `jobs`.
//
// Throws WorkspaceError if a workspace copy cannot be prepared or patched.
OutcomeMatrix ExecuteMatrix(const std::filesystem::path& workspace,
                            const std::vector<Mutant>& mutants,
                            const std::vector<BaselineRecord>& baseline,
                            const RunnerClient& runner,
                            const ExecutionOptions& options = {});

// Identifies a (mutants, tests) plan so a journal can be matched to it.
std::string PlanFingerprint(const std::vector<Mutant>& mutants,
                            const std::vector<BaselineRecord>& baseline);

}  // namespace mutascope

#endif  // MUTASCOPE_ORCHESTRATOR_H_
