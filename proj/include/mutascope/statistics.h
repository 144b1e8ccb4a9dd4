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

#ifndef MUTASCOPE_STATISTICS_H_
#define MUTASCOPE_STATISTICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace mutascope {

struct MannWhitneyResult {
  double u = 0;    // min(u_a, u_b)
  double u_a = 0;  // rank-sum statistic of the first sample
  double u_b = 0;
  double p_value = 1;  // two-sided
  bool exact = false;
};

// Two-sided Mann-Whitney U test with midranks for ties.
//
// Tie-free samples with |a| + |b| <= 14 get the exact null distribution:
// p = min(1, 2 * min(P(U <= u_a), P(U >= u_a))). Otherwise the normal
// approximation with tie and continuity corrections is used.
// Throws std::invalid_argument if either sample is empty.
MannWhitneyResult MannWhitneyU(std::span<const double> a, std::span<const double> b);

inline constexpr std::size_t kExactMannWhitneyLimit = 14;

// Cohen's d with the pooled (n-1) standard deviation; positive when mean(a)
// exceeds mean(b). Throws std::invalid_argument for samples smaller than 2
// and ZeroVarianceError when the pooled deviation is zero.
double CohensD(std::span<const double> a, std::span<const double> b);

enum class EffectLabel { kNegligible, kVerySmall, kSmall, kMedium, kLarge, kVeryLarge, kHuge };

// |d| < 0.01 N, < 0.2 VS, < 0.5 S, < 0.8 M, < 1.2 L, < 2.0 VL, else H.
EffectLabel LabelEffect(double d);
std::string_view EffectLabelName(EffectLabel label);

// nullopt for an empty sample.
std::optional<double> Median(std::vector<double> values);

}  // namespace mutascope

#endif  // MUTASCOPE_STATISTICS_H_
