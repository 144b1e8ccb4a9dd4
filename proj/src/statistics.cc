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

#include "mutascope/statistics.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mutascope/error.h"

namespace mutascope {

namespace {

// Number of ways to pick `k` of the ranks 1..n with each possible sum.
// counts[s] for s in [0, max_sum].
std::vector<double> RankSumCounts(std::size_t n, std::size_t k) {
  const std::size_t max_sum = n * (n + 1) / 2;
  // ways[j][s]: subsets of size j with sum s among ranks seen so far.
  std::vector<std::vector<double>> ways(k + 1, std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1;
  for (std::size_t r = 1; r <= n; ++r) {
    for (std::size_t j = std::min(k, r); j >= 1; --j) {
      for (std::size_t s = max_sum; s >= r; --s) ways[j][s] += ways[j - 1][s - r];
    }
  }
  return ways[k];
}

}  // namespace

MannWhitneyResult MannWhitneyU(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("Mann-Whitney U needs two non-empty samples");
  }
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  std::vector<std::pair<double, bool>> pooled;  // (value, from_a)
  pooled.reserve(n);
  for (double v : a) pooled.emplace_back(v, true);
  for (double v : b) pooled.emplace_back(v, false);
  std::sort(pooled.begin(), pooled.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  double rank_sum_a = 0;
  double tie_term = 0;
  bool ties = false;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && pooled[j].first == pooled[i].first) ++j;
    const double t = static_cast<double>(j - i);
    const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
    for (std::size_t k = i; k < j; ++k) {
      if (pooled[k].second) rank_sum_a += midrank;
    }
    if (t > 1) {
      ties = true;
      tie_term += t * t * t - t;
    }
    i = j;
  }

  MannWhitneyResult res;
  const double dna = static_cast<double>(na), dnb = static_cast<double>(nb);
  res.u_a = rank_sum_a - dna * (dna + 1) / 2;
  res.u_b = dna * dnb - res.u_a;
  res.u = std::min(res.u_a, res.u_b);

  if (!ties && n <= kExactMannWhitneyLimit) {
    res.exact = true;
    const auto counts = RankSumCounts(n, na);
    const double total = std::accumulate(counts.begin(), counts.end(), 0.0);
    const double offset = dna * (dna + 1) / 2;
    double le = 0, ge = 0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
      if (counts[s] == 0) continue;
      const double u = static_cast<double>(s) - offset;
      if (u <= res.u_a) le += counts[s];
      if (u >= res.u_a) ge += counts[s];
    }
    res.p_value = std::min(1.0, 2.0 * std::min(le, ge) / total);
    return res;
  }

  const double dn = static_cast<double>(n);
  const double mean = dna * dnb / 2;
  const double var = dna * dnb / 12.0 * ((dn + 1) - tie_term / (dn * (dn - 1)));
  if (var <= 0) {
    res.p_value = 1.0;
    return res;
  }
  const double z = std::max(0.0, std::fabs(res.u_a - mean) - 0.5) / std::sqrt(var);
  res.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return res;
}

double CohensD(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) {
    throw std::invalid_argument("Cohen's d needs at least two values per sample");
  }
  auto mean = [](std::span<const double> x) {
    return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  };
  auto sum_sq = [](std::span<const double> x, double m) {
    double s = 0;
    for (double v : x) s += (v - m) * (v - m);
    return s;
  };
  auto constant = [](std::span<const double> x) {
    return std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); });
  };
  if (constant(a) && constant(b)) {
    throw ZeroVarianceError("Cohen's d is undefined for two constant samples");
  }
  const double ma = mean(a), mb = mean(b);
  const double pooled_var = (sum_sq(a, ma) + sum_sq(b, mb)) /
                            static_cast<double>(a.size() + b.size() - 2);
  const double sd = std::sqrt(pooled_var);
  if (!(sd > 0)) throw ZeroVarianceError("pooled standard deviation is zero");
  return (ma - mb) / sd;
}

EffectLabel LabelEffect(double d) {
  const double m = std::fabs(d);
  if (m < 0.01) return EffectLabel::kNegligible;
  if (m < 0.2) return EffectLabel::kVerySmall;
  if (m < 0.5) return EffectLabel::kSmall;
  if (m < 0.8) return EffectLabel::kMedium;
  if (m < 1.2) return EffectLabel::kLarge;
  if (m < 2.0) return EffectLabel::kVeryLarge;
  return EffectLabel::kHuge;
}

std::string_view EffectLabelName(EffectLabel label) {
  switch (label) {
    case EffectLabel::kNegligible: return "Negligible";
    case EffectLabel::kVerySmall: return "Very Small";
    case EffectLabel::kSmall: return "Small";
    case EffectLabel::kMedium: return "Medium";
    case EffectLabel::kLarge: return "Large";
    case EffectLabel::kVeryLarge: return "Very Large";
    case EffectLabel::kHuge: return "Huge";
  }
  return "?";
}

std::optional<double> Median(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

}  // namespace mutascope
