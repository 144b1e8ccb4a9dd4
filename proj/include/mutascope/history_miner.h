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

#ifndef MUTASCOPE_HISTORY_MINER_H_
#define MUTASCOPE_HISTORY_MINER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/method_record.h"
#include "mutascope/rational.h"

namespace mutascope {

// Lowercased, trimmed e-mail address.
std::string NormalizeAuthor(std::string_view identity);

struct CommitAuthor {
  std::string commit;
  std::string author;  // normalized
  friend bool operator==(const CommitAuthor&, const CommitAuthor&) = default;
};

// New-side line range touched by one diff hunk. `count == 0` marks a pure
// deletion located after line `start`.
struct Hunk {
  int start = 0;
  int count = 0;
};

std::vector<Hunk> ParseUnifiedDiffHunks(std::string_view diff);

// True when a hunk changes lines inside `range`.
bool HunkTouches(const Hunk& hunk, const LineRange& range);

// Read-only view of a git repository through its command-line plumbing.
// Paths are relative to `root`.
class GitRepository {
 public:
  // Throws RepositoryError when `root` is not inside a readable repository.
  explicit GitRepository(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }

  struct FileCommit {
    std::string commit;
    std::string first_parent;  // empty for a root commit
    std::string author;
  };
  // First-parent commits touching `file`, newest first. Renames are not
  // followed.
  std::vector<FileCommit> FileCommits(const std::string& file) const;
  std::optional<std::string> FileAt(const std::string& commit,
                                    const std::string& file) const;
  std::vector<Hunk> Changes(const FileCommit& commit, const std::string& file) const;

  std::int64_t TotalCommits() const;
  std::map<std::string, std::int64_t> CommitsPerAuthor() const;

 private:
  std::string Git(const std::vector<std::string>& args) const;

  std::filesystem::path root_;
};

// Commits whose diff intersects the method's line span in that revision,
// matching the method across revisions by qualified id. Throws
// MethodNotFoundError when the method is absent at HEAD.
std::vector<CommitAuthor> MethodHistory(const GitRepository& repo,
                                        const MethodRecord& m);

struct EvolutionMetrics {
  std::int64_t modifications = 0;
  std::int64_t contributors = 0;
  // Mean over contributors of (their project commits / total commits).
  std::optional<Rational> expertise;
};

inline constexpr std::string_view kExpertiseAggregation = "mean";

// Throws std::invalid_argument when total_commits < 1.
EvolutionMetrics ComputeEvolutionMetrics(
    const std::vector<CommitAuthor>& history, std::int64_t total_commits,
    const std::map<std::string, std::int64_t>& per_author_commits);

}  // namespace mutascope

#endif  // MUTASCOPE_HISTORY_MINER_H_
