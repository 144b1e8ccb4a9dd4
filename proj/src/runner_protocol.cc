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

#include "mutascope/runner_protocol.h"

#include <sstream>

#include <json.hpp>

#include "mutascope/error.h"
#include "mutascope/subprocess.h"

namespace mutascope {

using ojson = nlohmann::ordered_json;

namespace {

std::vector<std::string_view> NonEmptyLines(std::string_view out) {
  std::vector<std::string_view> lines;
  while (!out.empty()) {
    const auto nl = out.find('\n');
    auto line = out.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      lines.push_back(line);
    }
    if (nl == std::string_view::npos) break;
    out.remove_prefix(nl + 1);
  }
  return lines;
}

ojson ParseObject(std::string_view line) {
  ojson doc;
  try {
    doc = ojson::parse(line);
  } catch (const nlohmann::json::parse_error&) {
    throw RunnerProtocolError("runner emitted non-JSON line: " + std::string(line));
  }
  if (!doc.is_object()) {
    throw RunnerProtocolError("runner line is not an object: " + std::string(line));
  }
  return doc;
}

std::string Truncate(std::string_view s, std::size_t n = 400) {
  return std::string(s.substr(0, n));
}

}  // namespace

std::string FormatTestMessage(std::string_view id) {
  ojson doc;
  doc["type"] = "test";
  doc["id"] = id;
  return doc.dump();
}

std::string FormatResultMessage(const RunnerResult& result) {
  ojson doc;
  doc["type"] = "result";
  doc["id"] = result.id;
  doc["outcome"] = OutcomeName(result.outcome);
  doc["duration_ms"] = result.duration_ms;
  if (result.covered) {
    ojson covered = ojson::object();
    for (const auto& [file, lines] : *result.covered) {
      covered[file] = std::vector<int>(lines.begin(), lines.end());
    }
    doc["covered"] = std::move(covered);
  }
  return doc.dump();
}

std::vector<std::string> ParseCollectOutput(std::string_view out) {
  std::vector<std::string> ids;
  std::set<std::string> seen;
  for (const auto line : NonEmptyLines(out)) {
    const auto doc = ParseObject(line);
    if (doc.value("type", "") != "test" || !doc.contains("id") ||
        !doc["id"].is_string()) {
      throw RunnerProtocolError("bad collect line: " + std::string(line));
    }
    auto id = doc["id"].get<std::string>();
    if (!seen.insert(id).second) {
      throw RunnerProtocolError("duplicate test id from collect: " + id);
    }
    ids.push_back(std::move(id));
  }
  return ids;
}

RunnerResult ParseResultOutput(std::string_view out, std::string_view expected_id,
                               bool expect_coverage) {
  const auto lines = NonEmptyLines(out);
  if (lines.size() != 1) {
    throw RunnerProtocolError("expected exactly one result line, got " +
                              std::to_string(lines.size()));
  }
  const auto doc = ParseObject(lines[0]);
  auto bad = [&](const std::string& why) {
    return RunnerProtocolError(why + ": " + Truncate(lines[0]));
  };
  if (doc.value("type", "") != "result") throw bad("result line has wrong type");
  if (!doc.contains("id") || !doc["id"].is_string() ||
      doc["id"].get<std::string>() != expected_id) {
    throw bad("result id does not match requested test");
  }
  RunnerResult r;
  r.id = doc["id"].get<std::string>();
  const auto outcome = doc.contains("outcome") && doc["outcome"].is_string()
                           ? ParseOutcome(doc["outcome"].get<std::string>())
                           : std::nullopt;
  if (!outcome || *outcome == Outcome::kTimeout) throw bad("bad outcome");
  r.outcome = *outcome;
  if (!doc.contains("duration_ms") || !doc["duration_ms"].is_number_integer() ||
      doc["duration_ms"].get<std::int64_t>() < 0) {
    throw bad("bad duration_ms");
  }
  r.duration_ms = doc["duration_ms"].get<std::int64_t>();
  if (expect_coverage) {
    if (!doc.contains("covered") || !doc["covered"].is_object()) {
      throw bad("baseline result lacks covered map");
    }
    CoverageMap covered;
    for (const auto& [file, lines_json] : doc["covered"].items()) {
      if (!lines_json.is_array()) throw bad("covered lines must be an array");
      auto& set = covered[file];
      for (const auto& l : lines_json) {
        if (!l.is_number_integer() || l.get<int>() < 1) throw bad("bad covered line");
        set.insert(l.get<int>());
      }
    }
    r.covered = std::move(covered);
  }
  return r;
}

RunnerClient::RunnerClient(std::vector<std::string> command)
    : command_(std::move(command)) {
  if (command_.empty()) throw ConfigError("runner command is empty");
}

RunnerClient RunnerClient::FromCommandLine(std::string_view command_line) {
  std::istringstream in{std::string(command_line)};
  std::vector<std::string> argv;
  for (std::string word; in >> word;) argv.push_back(word);
  return RunnerClient(std::move(argv));
}

std::vector<std::string> RunnerClient::Collect(
    const std::filesystem::path& workspace,
    std::chrono::milliseconds timeout) const {
  auto argv = command_;
  argv.push_back("collect");
  const auto res = RunProcess(argv, workspace, timeout);
  if (res.timed_out) throw RunnerProtocolError("runner collect timed out");
  if (res.exit_code != 0) {
    throw RunnerProtocolError("runner collect exited with " +
                              std::to_string(res.exit_code) + ": " +
                              Truncate(res.err));
  }
  return ParseCollectOutput(res.out);
}

std::optional<RunnerResult> RunnerClient::Baseline(
    const std::filesystem::path& workspace, const std::string& test_id,
    std::chrono::milliseconds timeout) const {
  auto argv = command_;
  argv.insert(argv.end(), {"baseline", "--test", test_id});
  const auto res = RunProcess(argv, workspace, timeout);
  if (res.timed_out) return std::nullopt;
  if (res.exit_code != 0) {
    throw RunnerProtocolError("runner baseline for " + test_id + " exited with " +
                              std::to_string(res.exit_code) + ": " +
                              Truncate(res.err));
  }
  return ParseResultOutput(res.out, test_id, /*expect_coverage=*/true);
}

TestOutcome RunnerClient::Run(const std::filesystem::path& workspace,
                              const std::string& test_id,
                              std::chrono::milliseconds timeout) const {
  auto argv = command_;
  argv.insert(argv.end(), {"run", "--test", test_id});
  const auto res = RunProcess(argv, workspace, timeout);
  TestOutcome out;
  if (res.timed_out) {
    out.outcome = Outcome::kTimeout;
    out.duration_ms = std::max<std::int64_t>(res.elapsed_ms, timeout.count());
    return out;
  }
  if (res.exit_code != 0) {
    out.outcome = Outcome::kError;
    out.duration_ms = res.elapsed_ms;
    out.diagnostic = "runner exited with " + std::to_string(res.exit_code) +
                     ": " + Truncate(res.err, 200);
    return out;
  }
  try {
    const auto r = ParseResultOutput(res.out, test_id, /*expect_coverage=*/false);
    out.outcome = r.outcome;
    out.duration_ms = r.duration_ms;
  } catch (const RunnerProtocolError& e) {
    out.outcome = Outcome::kError;
    out.duration_ms = res.elapsed_ms;
    out.diagnostic = e.what();
  }
  return out;
}

}  // namespace mutascope
