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

#ifndef MUTASCOPE_STUDY_H_
#define MUTASCOPE_STUDY_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mutascope/rational.h"
#include "mutascope/scoring.h"
#include "mutascope/statistics.h"
#include "mutascope/test_inspector.h"

namespace mutascope {

struct StudyGroups {
  std::vector<std::string> best;    // highest score first
  std::vector<std::string> random;  // sample order
  std::vector<std::string> worst;   // lowest score first
  std::size_t k = 0;
  std::size_t requested_k = 0;
  std::uint64_t seed = 0;
  bool overlap = false;  // random group drawn from the whole population
  std::vector<std::string> warnings;
};

// Orders methods by (score desc, covered desc, id asc); best is the first K,
// worst the last K (reversed), random a seeded sample without replacement
// from the remainder (or from everyone when `overlap`). Methods with an
// undefined score are skipped. K shrinks to what the population allows,
// with a warning. Throws InsufficientPopulationError below 3 methods.
StudyGroups SelectGroups(const std::vector<MethodScore>& scores, std::size_t k,
                         std::uint64_t seed, bool overlap = false);

// Draws `count` distinct indices from [0, n) with a seeded Mersenne Twister
// and a partial Fisher-Yates shuffle; portable across standard libraries.
std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t count,
                                       std::uint64_t seed);

struct ComparisonResult {
  std::string metric;
  std::optional<double> median_best;
  std::optional<double> median_random;
  std::optional<double> median_worst;
  std::optional<MannWhitneyResult> mann_whitney;
  std::optional<double> cohens_d;
  std::optional<EffectLabel> effect;
  std::string note;  // why a statistic is missing
};

// Compares best against worst for one metric.
ComparisonResult CompareGroups(std::string metric, const std::vector<double>& best,
                               const std::vector<double>& random,
                               const std::vector<double>& worst);

struct SmellShare {
  Smell smell;
  std::int64_t best_count = 0;
  std::int64_t worst_count = 0;
  // Fractions of best+worst occurrences; nullopt when there are none.
  std::optional<Rational> best_share;
  std::optional<Rational> worst_share;
};

std::vector<SmellShare> SmellPrevalence(const StudyGroups& groups,
                                        const std::map<std::string, SmellReport>& smells);

}  // namespace mutascope

#endif  // MUTASCOPE_STUDY_H_
