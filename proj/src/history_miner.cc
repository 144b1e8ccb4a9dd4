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

#include "mutascope/history_miner.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mutascope/error.h"
#include "mutascope/frontend.h"
#include "mutascope/subprocess.h"
#include "mutascope/tokenizer.h"

namespace mutascope {

namespace fs = std::filesystem;

std::string NormalizeAuthor(std::string_view identity) {
  const auto first = identity.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = identity.find_last_not_of(" \t\r\n");
  std::string out(identity.substr(first, last - first + 1));
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<Hunk> ParseUnifiedDiffHunks(std::string_view diff) {
  std::vector<Hunk> hunks;
  std::istringstream in{std::string(diff)};
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("@@ ", 0) != 0) continue;
    const auto plus = line.find(" +");
    if (plus == std::string::npos) continue;
    Hunk h;
    h.count = 1;
    const char* p = line.c_str() + plus + 2;
    char* end = nullptr;
    h.start = static_cast<int>(std::strtol(p, &end, 10));
    if (end != nullptr && *end == ',') {
      h.count = static_cast<int>(std::strtol(end + 1, &end, 10));
    }
    hunks.push_back(h);
  }
  return hunks;
}

bool HunkTouches(const Hunk& hunk, const LineRange& range) {
  if (hunk.count == 0) {
    return range.first <= hunk.start && hunk.start < range.last;
  }
  const int last = hunk.start + hunk.count - 1;
  return hunk.start <= range.last && range.first <= last;
}

GitRepository::GitRepository(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  if (!fs::is_directory(root_, ec)) {
    throw RepositoryError(root_.string() + " is not a directory");
  }
  Git({"rev-parse", "--verify", "HEAD"});
}

std::string GitRepository::Git(const std::vector<std::string>& args) const {
  std::vector<std::string> argv = {"git", "--no-pager", "-c", "core.quotepath=off"};
  argv.insert(argv.end(), args.begin(), args.end());
  ProcessResult res;
  try {
    res = RunProcess(argv, root_, std::nullopt);
  } catch (const WorkspaceError& e) {
    throw RepositoryError(e.what());
  }
  if (res.exit_code != 0) {
    throw RepositoryError("git " + (args.empty() ? std::string() : args[0]) +
                          " failed in " + root_.string() + ": " + res.err);
  }
  return res.out;
}

std::vector<GitRepository::FileCommit> GitRepository::FileCommits(
    const std::string& file) const {
  const auto out = Git({"log", "--first-parent", "--no-renames",
                        "--format=%H%x09%P%x09%ae", "HEAD", "--", file});
  std::vector<FileCommit> commits;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw RepositoryError("unexpected git log line: " + line);
    }
    FileCommit fc;
    fc.commit = line.substr(0, t1);
    const std::string parents = line.substr(t1 + 1, t2 - t1 - 1);
    fc.first_parent = parents.substr(0, parents.find(' '));
    fc.author = NormalizeAuthor(line.substr(t2 + 1));
    commits.push_back(std::move(fc));
  }
  return commits;
}

std::optional<std::string> GitRepository::FileAt(const std::string& commit,
                                                 const std::string& file) const {
  try {
    return Git({"show", commit + ":./" + file});
  } catch (const RepositoryError&) {
    return std::nullopt;
  }
}

std::vector<Hunk> GitRepository::Changes(const FileCommit& commit,
                                         const std::string& file) const {
  std::string diff;
  if (commit.first_parent.empty()) {
    diff = Git({"show", "-U0", "--no-color", "--no-ext-diff", "--no-renames",
                "--format=", commit.commit, "--", file});
  } else {
    diff = Git({"diff", "-U0", "--no-color", "--no-ext-diff", "--no-renames",
                commit.first_parent, commit.commit, "--", file});
  }
  return ParseUnifiedDiffHunks(diff);
}

std::int64_t GitRepository::TotalCommits() const {
  const auto out = Git({"rev-list", "--count", "HEAD"});
  return std::stoll(out);
}

std::map<std::string, std::int64_t> GitRepository::CommitsPerAuthor() const {
  const auto out = Git({"log", "--format=%ae", "HEAD"});
  std::map<std::string, std::int64_t> counts;
  std::istringstream in(out);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) ++counts[NormalizeAuthor(line)];
  }
  return counts;
}

namespace {

std::optional<LineRange> FindMethodLines(std::string_view bytes, const std::string& file,
                                         const std::string& id) {
  TokenList tokens;
  try {
    tokens = Tokenize(bytes, file);
  } catch (const DecodingError&) {
    return std::nullopt;
  }
  for (const auto& m : ExtractMethods(tokens, file)) {
    if (m.id == id) return m.line_range;
  }
  return std::nullopt;
}

}  // namespace

std::vector<CommitAuthor> MethodHistory(const GitRepository& repo,
                                        const MethodRecord& m) {
  const auto head = repo.FileAt("HEAD", m.file);
  if (!head || !FindMethodLines(*head, m.file, m.id)) {
    throw MethodNotFoundError(m.id + " is not defined at HEAD");
  }
  std::vector<CommitAuthor> history;
  for (const auto& fc : repo.FileCommits(m.file)) {
    const auto bytes = repo.FileAt(fc.commit, m.file);
    if (!bytes) continue;  // file deleted in this commit
    const auto lines = FindMethodLines(*bytes, m.file, m.id);
    if (!lines) continue;
    const auto hunks = repo.Changes(fc, m.file);
    if (std::any_of(hunks.begin(), hunks.end(),
                    [&](const Hunk& h) { return HunkTouches(h, *lines); })) {
      history.push_back({fc.commit, fc.author});
    }
  }
  return history;
}

EvolutionMetrics ComputeEvolutionMetrics(
    const std::vector<CommitAuthor>& history, std::int64_t total_commits,
    const std::map<std::string, std::int64_t>& per_author_commits) {
  if (total_commits < 1) throw std::invalid_argument("total_commits must be >= 1");
  EvolutionMetrics em;
  em.modifications = static_cast<std::int64_t>(history.size());
  std::set<std::string> authors;
  for (const auto& h : history) authors.insert(NormalizeAuthor(h.author));
  em.contributors = static_cast<std::int64_t>(authors.size());
  if (authors.empty()) return em;
  std::map<std::string, std::int64_t> normalized;
  for (const auto& [who, n] : per_author_commits) normalized[NormalizeAuthor(who)] += n;
  std::int64_t authored = 0;
  for (const auto& a : authors) {
    const auto it = normalized.find(a);
    authored += it == normalized.end() ? 0 : it->second;
  }
  em.expertise = Rational(authored, em.contributors * total_commits);
  return em;
}

}  // namespace mutascope
