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

#ifndef MUTASCOPE_OUTCOME_MATRIX_H_
#define MUTASCOPE_OUTCOME_MATRIX_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mutascope/mutant.h"

namespace mutascope {

enum class Outcome { kPass, kFail, kError, kTimeout };

std::string_view OutcomeName(Outcome o);
std::optional<Outcome> ParseOutcome(std::string_view name);

struct TestOutcome {
  Outcome outcome = Outcome::kPass;
  std::int64_t duration_ms = 0;
  std::string diagnostic;  // set for protocol failures recorded as ERROR

  friend bool operator==(const TestOutcome&, const TestOutcome&) = default;
};

struct MatrixTest {
  std::string id;
  std::int64_t baseline_ms = 0;
  friend bool operator==(const MatrixTest&, const MatrixTest&) = default;
};

// Sparse (mutant, test) -> outcome grid. An entry exists only where the test
// covers the mutant's line.
class OutcomeMatrix {
 public:
  using Key = std::pair<MutantId, std::string>;

  OutcomeMatrix() = default;
  OutcomeMatrix(std::vector<Mutant> mutants, std::vector<MatrixTest> tests);

  const std::vector<Mutant>& mutants() const { return mutants_; }
  const std::vector<MatrixTest>& tests() const { return tests_; }
  const std::map<Key, TestOutcome>& entries() const { return entries_; }

  // Workspace the matrix was produced from; empty when unknown.
  const std::string& source_root() const { return source_root_; }
  void set_source_root(std::string root) { source_root_ = std::move(root); }

  // Throws std::invalid_argument for unknown mutant or test ids.
  void Set(MutantId mutant, const std::string& test, TestOutcome outcome);
  const TestOutcome* Find(MutantId mutant, const std::string& test) const;

  // Outcomes for one mutant, in test order.
  std::vector<Outcome> Row(MutantId mutant) const;
  // Outcomes for one test, in mutant order.
  std::vector<Outcome> Column(const std::string& test) const;

  friend bool operator==(const OutcomeMatrix&, const OutcomeMatrix&) = default;

 private:
  std::vector<Mutant> mutants_;
  std::vector<MatrixTest> tests_;
  std::map<Key, TestOutcome> entries_;
  std::string source_root_;
};

struct MatrixSerializeOptions {
  // Wall-clock durations differ between otherwise identical runs; leave them
  // out to get a canonical, scheduling-independent encoding.
  bool include_timings = true;
};

// JSON encoding used for the persisted `matrix.json`.
std::string SerializeMatrix(const OutcomeMatrix& matrix,
                            const MatrixSerializeOptions& options = {});
// Throws std::invalid_argument on a malformed document.
OutcomeMatrix ParseMatrix(std::string_view json_text);

}  // namespace mutascope

#endif  // MUTASCOPE_OUTCOME_MATRIX_H_
