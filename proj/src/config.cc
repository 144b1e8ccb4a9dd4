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

#include <fnmatch.h>

#include <json.hpp>

#include "mutascope/error.h"
#include "mutascope/mutant.h"
#include "mutascope/workspace.h"

namespace mutascope {

using nlohmann::json;

namespace {

std::set<std::string> StringSet(const json& value, std::string_view key) {
  if (!value.is_array()) throw ConfigError(std::string(key) + " must be an array");
  std::set<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw ConfigError(std::string(key) + " must hold strings");
    out.insert(v.get<std::string>());
  }
  return out;
}

std::vector<std::string> StringList(const json& value, std::string_view key) {
  if (!value.is_array()) throw ConfigError(std::string(key) + " must be an array");
  std::vector<std::string> out;
  for (const auto& v : value) {
    if (!v.is_string()) throw ConfigError(std::string(key) + " must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

Rational PositiveRational(const json& value, std::string_view key) {
  if (!value.is_number()) throw ConfigError(std::string(key) + " must be a number");
  // Round-trip through the JSON text keeps decimal factors exact.
  Rational r = Rational::FromDecimal(value.dump());
  if (r <= Rational(0)) throw ConfigError(std::string(key) + " must be > 0");
  return r;
}

std::int64_t NonNegativeInt(const json& value, std::string_view key) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw ConfigError(std::string(key) + " must be a non-negative integer");
  }
  return value.get<std::int64_t>();
}

}  // namespace

RunConfig ParseConfig(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  RunConfig cfg;
  auto& vocab = cfg.vocabulary;
  for (const auto& [key, value] : doc.items()) {
    if (key == "operators") {
      cfg.operators = StringList(value, key);
      SelectOperators(cfg.operators);  // validates ids
    } else if (key == "test_globs") {
      cfg.test_globs = StringList(value, key);
    } else if (key == "exclude_globs") {
      cfg.exclude_globs = StringList(value, key);
    } else if (key == "assertion_prefixes") {
      vocab.assertion_prefixes = StringSet(value, key);
    } else if (key == "assertion_names") {
      vocab.assertion_names = StringSet(value, key);
    } else if (key == "sleep_names") {
      vocab.sleep_names = StringSet(value, key);
    } else if (key == "string_conversion_names") {
      vocab.string_conversion_names = StringSet(value, key);
    } else if (key == "setup_names") {
      vocab.setup_names = StringSet(value, key);
    } else if (key == "expected_exception_calls") {
      vocab.expected_exception_calls = StringSet(value, key);
    } else if (key == "test_markers") {
      vocab.markers.test = StringSet(value, key);
    } else if (key == "skip_markers") {
      vocab.markers.skip = StringSet(value, key);
    } else if (key == "expected_exception_markers") {
      vocab.markers.expected_exception = StringSet(value, key);
    } else if (key == "timeout_factor") {
      cfg.timeout_factor = PositiveRational(value, key);
    } else if (key == "timeout_constant_ms") {
      cfg.timeout_constant_ms = NonNegativeInt(value, key);
    } else if (key == "baseline_timeout_ms") {
      cfg.baseline_timeout_ms = NonNegativeInt(value, key);
    } else if (key == "alpha") {
      if (!value.is_number() || value.get<double>() <= 0 || value.get<double>() >= 1) {
        throw ConfigError("alpha must be in (0, 1)");
      }
      cfg.alpha = value.get<double>();
    } else if (key == "k") {
      cfg.k = static_cast<std::size_t>(NonNegativeInt(value, key));
      if (cfg.k == 0) throw ConfigError("k must be positive");
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "random_group_overlap") {
      if (!value.is_boolean()) throw ConfigError("random_group_overlap must be boolean");
      cfg.random_group_overlap = value.get<bool>();
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
  return cfg;
}

RunConfig LoadConfig(const std::filesystem::path& path) {
  try {
    return ParseConfig(ReadFileBytes(path));
  } catch (const WorkspaceError& e) {
    throw ConfigError(e.what());
  }
}

bool MatchesAnyGlob(std::string_view path, const std::vector<std::string>& globs) {
  const std::string p(path);
  for (const auto& g : globs) {
    if (fnmatch(g.c_str(), p.c_str(), 0) == 0) return true;
  }
  return false;
}

}  // namespace mutascope
