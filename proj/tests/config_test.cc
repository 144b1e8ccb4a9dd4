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

#include "mutascope/config.h"

#include "gtest/gtest.h"
#include "mutascope/error.h"
#include "mutascope/rational.h"

namespace mutascope {
namespace {

TEST(Rational, ReducesAndCompares) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational(6, 4).ToString(), "3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_THROW(Rational(1, 0), std::invalid_argument);
}

TEST(Rational, ParsesDecimalsExactly) {
  EXPECT_EQ(Rational::FromDecimal("1.25"), Rational(5, 4));
  EXPECT_EQ(Rational::FromDecimal("2"), Rational(2));
  EXPECT_EQ(Rational::FromDecimal("0.1"), Rational(1, 10));
  EXPECT_EQ(Rational::FromDouble(1.25), Rational(5, 4));
  EXPECT_EQ(Rational::FromDouble(0.1), Rational(1, 10));
  EXPECT_THROW(Rational::FromDecimal("1.2.3"), std::invalid_argument);
}

TEST(Rational, CeilMultiply) {
  EXPECT_EQ(CeilMultiply(Rational(5, 4), 1000), 1250);
  EXPECT_EQ(CeilMultiply(Rational(5, 4), 1001), 1252);
  EXPECT_EQ(CeilMultiply(Rational(1, 3), 1), 1);
  EXPECT_EQ(CeilMultiply(Rational(2), 0), 0);
}

TEST(Config, DefaultsWhenEmpty) {
  const auto cfg = ParseConfig("{}");
  EXPECT_EQ(cfg.operators.size(), 8u);
  EXPECT_EQ(cfg.timeout_factor, Rational(5, 4));
  EXPECT_EQ(cfg.timeout_constant_ms, 3000);
  EXPECT_DOUBLE_EQ(cfg.alpha, 0.05);
  EXPECT_EQ(cfg.k, 100u);
}

TEST(Config, ParsesKnownKeys) {
  const auto cfg = ParseConfig(R"({
    "operators": ["AOR"], "timeout_factor": 2.0, "timeout_constant_ms": 0,
    "sleep_names": ["sleep", "wait"], "alpha": 0.01, "k": 7, "seed": 42,
    "random_group_overlap": true, "test_markers": ["Check"]
  })");
  EXPECT_EQ(cfg.operators, std::vector<std::string>{"AOR"});
  EXPECT_EQ(cfg.timeout_factor, Rational(2));
  EXPECT_EQ(cfg.timeout_constant_ms, 0);
  EXPECT_EQ(cfg.vocabulary.sleep_names, (std::set<std::string>{"sleep", "wait"}));
  EXPECT_EQ(cfg.k, 7u);
  EXPECT_EQ(cfg.seed, 42u);
  EXPECT_TRUE(cfg.random_group_overlap);
  EXPECT_EQ(cfg.vocabulary.markers.test, std::set<std::string>{"Check"});
}

TEST(Config, RejectsBadInput) {
  EXPECT_THROW(ParseConfig("{"), ConfigError);
  EXPECT_THROW(ParseConfig("[]"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"bogus": 1})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"operators": ["NOPE"]})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"timeout_factor": 0})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"alpha": 1.5})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"k": 0})"), ConfigError);
  EXPECT_THROW(ParseConfig(R"({"k": "ten"})"), ConfigError);
}

TEST(Config, Globs) {
  const std::vector<std::string> globs = {"test_*", "*/tests/*"};
  EXPECT_TRUE(MatchesAnyGlob("test_a.py", globs));
  EXPECT_TRUE(MatchesAnyGlob("pkg/tests/helper.py", globs));
  EXPECT_FALSE(MatchesAnyGlob("pkg/core.py", globs));
}

}  // namespace
}  // namespace mutascope
