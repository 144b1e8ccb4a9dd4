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

#include "mutascope/scoring.h"

#include "mutascope/error.h"

namespace mutascope {

std::string_view MutantStatusName(MutantStatus s) {
  switch (s) {
    case MutantStatus::kKilledFailure: return "KILLED_FAILURE";
    case MutantStatus::kKilledError: return "KILLED_ERROR";
    case MutantStatus::kKilledTimeout: return "KILLED_TIMEOUT";
    case MutantStatus::kSurvived: return "SURVIVED";
    case MutantStatus::kUncovered: return "UNCOVERED";
  }
  return "?";
}

bool IsKilled(MutantStatus s) {
  return s == MutantStatus::kKilledFailure || s == MutantStatus::kKilledError ||
         s == MutantStatus::kKilledTimeout;
}

MutantStatus ClassifyMutant(std::span<const Outcome> row) {
  if (row.empty()) return MutantStatus::kUncovered;
  bool fail = false, error = false, timeout = false;
  for (const auto o : row) {
    fail |= o == Outcome::kFail;
    error |= o == Outcome::kError;
    timeout |= o == Outcome::kTimeout;
  }
  if (fail) return MutantStatus::kKilledFailure;
  if (error) return MutantStatus::kKilledError;
  if (timeout) return MutantStatus::kKilledTimeout;
  return MutantStatus::kSurvived;
}

SuiteScore ComputeSuiteScore(std::span<const MutantStatus> statuses) {
  if (statuses.empty()) {
    throw EmptyInputError("suite score is undefined without mutants");
  }
  SuiteScore s;
  s.generated = static_cast<std::int64_t>(statuses.size());
  for (const auto st : statuses) s.killed += IsKilled(st) ? 1 : 0;
  s.score = Rational(s.killed, s.generated);
  return s;
}

MethodScore ComputeMethodScore(std::string test_id, std::span<const Outcome> column) {
  MethodScore ms;
  ms.test_id = std::move(test_id);
  for (const auto o : column) {
    switch (o) {
      case Outcome::kFail:
      case Outcome::kError:
        ++ms.killed;
        break;
      case Outcome::kPass:
        ++ms.survived;
        break;
      case Outcome::kTimeout:
        ++ms.timeouts_excluded;
        break;
    }
  }
  ms.covered = ms.killed + ms.survived + ms.timeouts_excluded;
  if (ms.killed + ms.survived > 0) {
    ms.score = Rational(ms.killed, ms.killed + ms.survived);
  }
  return ms;
}

std::vector<MutantStatus> ClassifyAll(const OutcomeMatrix& matrix) {
  std::vector<MutantStatus> out;
  out.reserve(matrix.mutants().size());
  for (const auto& m : matrix.mutants()) out.push_back(ClassifyMutant(matrix.Row(m.id)));
  return out;
}

std::vector<MethodScore> ScoreAllMethods(const OutcomeMatrix& matrix) {
  std::vector<MethodScore> out;
  out.reserve(matrix.tests().size());
  for (const auto& t : matrix.tests()) {
    out.push_back(ComputeMethodScore(t.id, matrix.Column(t.id)));
  }
  return out;
}

}  // namespace mutascope
