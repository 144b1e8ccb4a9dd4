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

#ifndef MUTASCOPE_CONFIG_H_
#define MUTASCOPE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/method_record.h"
#include "mutascope/rational.h"

namespace mutascope {

// Vocabulary used by the static inspector.
struct InspectorVocabulary {
  // A call is an assertion when its callee's last dotted component starts
  // with one of these prefixes or equals one of `assertion_names`. The bare
  // `assert` statement always counts.
  std::set<std::string> assertion_prefixes = {"assert"};
  std::set<std::string> assertion_names = {"fail"};
  std::set<std::string> sleep_names = {"sleep"};
  std::set<std::string> string_conversion_names = {"str", "repr", "format",
                                                   "toString", "__str__",
                                                   "__repr__"};
  std::set<std::string> setup_names = {"setUp", "setup_method", "setup",
                                       "setUpClass", "setup_class"};
  // Calls that assert an exception is raised (e.g. `pytest.raises`).
  std::set<std::string> expected_exception_calls = {"raises", "assertRaises",
                                                    "assertRaisesRegex"};
  TestMarkers markers;
};

struct RunConfig {
  std::vector<std::string> operators = {"AOR",         "ROR-boundary",
                                        "ROR-negate",  "LOR",
                                        "NOT-removal", "BOOL-flip",
                                        "NUM-perturb", "INCR"};
  // fnmatch patterns over workspace-relative paths; matching files are test
  // code and never mutated.
  std::vector<std::string> test_globs = {"test_*", "*/test_*", "*_test.*",
                                         "tests/*", "test/*", "*/tests/*"};
  std::vector<std::string> exclude_globs = {};
  InspectorVocabulary vocabulary;
  Rational timeout_factor = Rational(5, 4);
  std::int64_t timeout_constant_ms = 3000;
  std::int64_t baseline_timeout_ms = 120000;
  double alpha = 0.05;
  std::size_t k = 100;
  std::uint64_t seed = 0;
  bool random_group_overlap = false;
};

// Parses a JSON configuration; absent keys keep their defaults, unknown keys
// are rejected. Throws ConfigError.
RunConfig ParseConfig(std::string_view json_text);
RunConfig LoadConfig(const std::filesystem::path& path);

bool MatchesAnyGlob(std::string_view path, const std::vector<std::string>& globs);

}  // namespace mutascope

#endif  // MUTASCOPE_CONFIG_H_
