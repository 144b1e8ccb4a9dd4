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

#include "mutascope/study.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <tuple>

#include "mutascope/error.h"
#include "mutascope/log.h"

namespace mutascope {

std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t count,
                                       std::uint64_t seed) {
  count = std::min(count, n);
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::mt19937_64 rng(seed);
  auto bounded = [&](std::uint64_t bound) {
    // Rejection sampling keeps the draw uniform.
    const std::uint64_t limit = std::mt19937_64::max() -
                                (std::mt19937_64::max() % bound + 1) % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x > limit);
    return x % bound;
  };
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(bounded(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  return idx;
}

StudyGroups SelectGroups(const std::vector<MethodScore>& scores, std::size_t k,
                         std::uint64_t seed, bool overlap) {
  std::vector<const MethodScore*> pop;
  for (const auto& s : scores) {
    if (s.score) pop.push_back(&s);
  }
  if (pop.size() < 3) {
    throw InsufficientPopulationError("need at least 3 scored methods, have " +
                                      std::to_string(pop.size()));
  }
  std::sort(pop.begin(), pop.end(), [](const MethodScore* a, const MethodScore* b) {
    if (*a->score != *b->score) return *a->score > *b->score;
    if (a->covered != b->covered) return a->covered > b->covered;
    return a->test_id < b->test_id;
  });

  StudyGroups g;
  g.requested_k = k;
  g.seed = seed;
  g.overlap = overlap;
  const std::size_t n = pop.size();
  const std::size_t cap = overlap ? n / 2 : n / 3;
  g.k = std::min(k, cap);
  if (g.k < k) {
    g.warnings.push_back("group size reduced from " + std::to_string(k) + " to " +
                         std::to_string(g.k) + " for " + std::to_string(n) +
                         " methods");
    LogWarning(g.warnings.back());
  }
  for (std::size_t i = 0; i < g.k; ++i) {
    g.best.push_back(pop[i]->test_id);
    g.worst.push_back(pop[n - 1 - i]->test_id);
  }
  std::vector<const MethodScore*> pool =
      overlap ? pop
              : std::vector<const MethodScore*>(pop.begin() + static_cast<std::ptrdiff_t>(g.k),
                                                pop.end() - static_cast<std::ptrdiff_t>(g.k));
  for (std::size_t i : SampleIndices(pool.size(), g.k, seed)) {
    g.random.push_back(pool[i]->test_id);
  }
  return g;
}

ComparisonResult CompareGroups(std::string metric, const std::vector<double>& best,
                               const std::vector<double>& random,
                               const std::vector<double>& worst) {
  ComparisonResult r;
  r.metric = std::move(metric);
  r.median_best = Median(best);
  r.median_random = Median(random);
  r.median_worst = Median(worst);
  if (best.empty() || worst.empty()) {
    r.note = "empty group";
    return r;
  }
  r.mann_whitney = MannWhitneyU(best, worst);
  try {
    r.cohens_d = CohensD(best, worst);
    r.effect = LabelEffect(*r.cohens_d);
  } catch (const ZeroVarianceError&) {
    r.note = "zero variance";
  } catch (const std::invalid_argument&) {
    r.note = "group too small for effect size";
  }
  return r;
}

std::vector<SmellShare> SmellPrevalence(const StudyGroups& groups,
                                        const std::map<std::string, SmellReport>& smells) {
  std::vector<SmellShare> out;
  auto count = [&](const std::vector<std::string>& ids, Smell s) {
    std::int64_t c = 0;
    for (const auto& id : ids) {
      const auto it = smells.find(id);
      if (it != smells.end() && it->second.Has(s)) ++c;
    }
    return c;
  };
  for (const Smell s : kAllSmells) {
    SmellShare share;
    share.smell = s;
    share.best_count = count(groups.best, s);
    share.worst_count = count(groups.worst, s);
    const std::int64_t total = share.best_count + share.worst_count;
    if (total > 0) {
      share.best_share = Rational(share.best_count, total);
      share.worst_share = Rational(share.worst_count, total);
    }
    out.push_back(share);
  }
  return out;
}

}  // namespace mutascope
