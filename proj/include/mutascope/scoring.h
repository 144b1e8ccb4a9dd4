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

#ifndef MUTASCOPE_SCORING_H_
#define MUTASCOPE_SCORING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/outcome_matrix.h"
#include "mutascope/rational.h"

namespace mutascope {

enum class MutantStatus {
  kKilledFailure,
  kKilledError,
  kKilledTimeout,
  kSurvived,
  kUncovered,
};

std::string_view MutantStatusName(MutantStatus s);
bool IsKilled(MutantStatus s);

// Status of one mutant from its matrix row. An empty row is UNCOVERED; when
// several kill kinds appear, FAIL beats ERROR beats TIMEOUT.
MutantStatus ClassifyMutant(std::span<const Outcome> row);

// Suite-level score: killed / generated, where generated counts killed,
// survived and uncovered mutants. Time-outs count as kills here.
struct SuiteScore {
  std::int64_t killed = 0;
  std::int64_t generated = 0;
  Rational score;
};

// Throws EmptyInputError for zero mutants.
SuiteScore ComputeSuiteScore(std::span<const MutantStatus> statuses);

// Method-level score: killed / (killed + survived). Time-outs are counted
// separately and never enter the ratio; with no non-timeout entries the
// score is undefined (nullopt).
struct MethodScore {
  std::string test_id;
  std::int64_t killed = 0;
  std::int64_t survived = 0;
  std::int64_t timeouts_excluded = 0;
  std::int64_t covered = 0;
  std::optional<Rational> score;
};

MethodScore ComputeMethodScore(std::string test_id, std::span<const Outcome> column);

// Whole-matrix conveniences.
std::vector<MutantStatus> ClassifyAll(const OutcomeMatrix& matrix);
std::vector<MethodScore> ScoreAllMethods(const OutcomeMatrix& matrix);

}  // namespace mutascope

#endif  // MUTASCOPE_SCORING_H_
