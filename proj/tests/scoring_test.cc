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

#include <random>

#include "gtest/gtest.h"
#include "mutascope/error.h"
#include "mutascope/outcome_matrix.h"
#include "support/fixtures.h"

namespace mutascope {
namespace {

using O = Outcome;
using S = MutantStatus;

std::map<std::string, std::optional<Rational>> ScoresById(const OutcomeMatrix& m) {
  std::map<std::string, std::optional<Rational>> out;
  for (const auto& s : ScoreAllMethods(m)) out[s.test_id] = s.score;
  return out;
}

TEST(Scoring, ClassifyExamples) {
  EXPECT_EQ(ClassifyMutant(std::vector<O>{}), S::kUncovered);
  EXPECT_EQ(ClassifyMutant(std::vector<O>{O::kPass, O::kPass}), S::kSurvived);
  EXPECT_EQ(ClassifyMutant(std::vector<O>{O::kTimeout, O::kError, O::kPass}), S::kKilledError);
  EXPECT_EQ(ClassifyMutant(std::vector<O>{O::kTimeout, O::kError, O::kFail}), S::kKilledFailure);
  EXPECT_EQ(ClassifyMutant(std::vector<O>{O::kPass, O::kTimeout}), S::kKilledTimeout);
}

TEST(Scoring, SuiteScoreExamples) {
  auto s = ComputeSuiteScore(std::vector<S>{S::kKilledFailure, S::kSurvived});
  EXPECT_EQ(s.score, Rational(1, 2));
  s = ComputeSuiteScore(std::vector<S>{S::kUncovered, S::kUncovered});
  EXPECT_EQ(s.score, Rational(0));
  EXPECT_EQ(s.generated, 2);
  s = ComputeSuiteScore(std::vector<S>{S::kKilledTimeout, S::kKilledError});
  EXPECT_EQ(s.score, Rational(1));
  EXPECT_THROW(ComputeSuiteScore(std::vector<S>{}), EmptyInputError);
}

TEST(Scoring, MethodScoreExcludesTimeouts) {
  auto m = ComputeMethodScore("t", std::vector<O>{O::kFail, O::kPass, O::kTimeout});
  EXPECT_EQ(m.killed, 1);
  EXPECT_EQ(m.survived, 1);
  EXPECT_EQ(m.timeouts_excluded, 1);
  EXPECT_EQ(m.covered, 3);
  EXPECT_EQ(m.score, Rational(1, 2));
  m = ComputeMethodScore("t", std::vector<O>{O::kTimeout});
  EXPECT_FALSE(m.score.has_value());
  m = ComputeMethodScore("t", std::vector<O>{});
  EXPECT_FALSE(m.score.has_value());
  EXPECT_EQ(m.covered, 0);
}

TEST(Scoring, SumTriangleMatrix) {
  const auto m = testing::SumTriangleMatrix();
  const auto statuses = ClassifyAll(m);
  EXPECT_EQ(statuses[0], S::kKilledFailure);
  for (const auto st : statuses) EXPECT_TRUE(IsKilled(st));
  EXPECT_EQ(ComputeSuiteScore(statuses).score, Rational(1));

  const auto scores = ScoresById(m);
  const auto ids = testing::SumTriangleTestIds();
  const Rational want[] = {Rational(1), Rational(1), Rational(1, 2),
                           Rational(1), Rational(1), Rational(1),
                           Rational(1, 2), Rational(0), Rational(0)};
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(scores.at(ids[i]), want[i]) << ids[i];
}

TEST(Scoring, MatchesEnumerationOracleOnRandomGrids) {
  std::mt19937 rng(7);
  const std::vector<testing::Cell> cells = {std::nullopt, O::kPass, O::kFail, O::kError,
                                            O::kTimeout};
  for (int trial = 0; trial < 500; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4), cols = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<testing::Cell>> grid(rows, std::vector<testing::Cell>(cols));
    for (auto& row : grid) {
      for (auto& c : row) c = cells[rng() % cells.size()];
    }
    const auto m = testing::MatrixFromGrid(grid);
    const auto statuses = ClassifyAll(m);
    for (int r = 0; r < rows; ++r) {
      EXPECT_EQ(statuses[r], testing::OracleClassifyRow(grid[r]));
    }
    const auto scores = ScoreAllMethods(m);
    for (int c = 0; c < cols; ++c) {
      std::vector<testing::Cell> column;
      for (int r = 0; r < rows; ++r) column.push_back(grid[r][c]);
      const auto oracle = testing::OracleScoreColumn(column);
      EXPECT_EQ(scores[c].killed, oracle.killed);
      EXPECT_EQ(scores[c].survived, oracle.survived);
      EXPECT_EQ(scores[c].timeouts_excluded, oracle.timeouts);
      if (oracle.den == 0) {
        EXPECT_FALSE(scores[c].score);
      } else {
        EXPECT_EQ(scores[c].score, Rational(oracle.num, oracle.den));
      }
    }
  }
}

TEST(OutcomeMatrix, RejectsUnknownCells) {
  auto m = testing::SumTriangleMatrix();
  EXPECT_THROW(m.Set(99, "test_sut.py::TestSut::testSum1", {}), std::invalid_argument);
  EXPECT_THROW(m.Set(1, "nope", {}), std::invalid_argument);
  EXPECT_EQ(m.Find(1, "test_sut.py::TestSut::testTriangle1"), nullptr);
}

TEST(OutcomeMatrix, SerializationRoundTrips) {
  auto m = testing::SumTriangleMatrix();
  m.Set(1, "test_sut.py::TestSut::testSum3", {O::kError, 5, "runner exited with 1"});
  m.set_source_root("/tmp/ws");
  const auto text = SerializeMatrix(m);
  EXPECT_EQ(ParseMatrix(text), m);
  EXPECT_EQ(SerializeMatrix(ParseMatrix(text)), text);
  EXPECT_THROW(ParseMatrix("{}"), std::invalid_argument);
  EXPECT_THROW(ParseMatrix("garbage"), std::invalid_argument);
}

TEST(OutcomeMatrix, OutcomeNames) {
  for (const auto o : {O::kPass, O::kFail, O::kError, O::kTimeout}) {
    EXPECT_EQ(ParseOutcome(OutcomeName(o)), o);
  }
  EXPECT_FALSE(ParseOutcome("pass"));
}

}  // namespace
}  // namespace mutascope
