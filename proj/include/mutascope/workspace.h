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

#ifndef MUTASCOPE_WORKSPACE_H_
#define MUTASCOPE_WORKSPACE_H_

#include <filesystem>
#include <string>

#include "mutascope/mutant.h"

namespace mutascope {

std::string ReadFileBytes(const std::filesystem::path& path);
void WriteFileBytes(const std::filesystem::path& path, std::string_view bytes);

// A mutant patched into a workspace. Reverting restores the file's original
// bytes; the destructor reverts if Revert() was not called.
class AppliedMutant {
 public:
  AppliedMutant(std::filesystem::path file, std::string original_bytes);
  AppliedMutant(AppliedMutant&& other) noexcept;
  AppliedMutant& operator=(AppliedMutant&&) = delete;
  AppliedMutant(const AppliedMutant&) = delete;
  AppliedMutant& operator=(const AppliedMutant&) = delete;
  ~AppliedMutant();

  void Revert();
  bool active() const { return active_; }

 private:
  std::filesystem::path file_;
  std::string original_;
  bool active_ = true;
};

// Replaces `m.span` in `root / m.file` with `m.replacement`. Throws
// StaleMutantError when the bytes at the span are not `m.original`, and
// WorkspaceError when the file cannot be read or written.
[[nodiscard]] AppliedMutant ApplyMutant(const std::filesystem::path& root,
                                        const Mutant& m);

// Copies a workspace tree, skipping VCS metadata and bytecode caches.
void CopyWorkspace(const std::filesystem::path& from,
                   const std::filesystem::path& to);

// A directory removed (recursively) on destruction.
class TempDir {
 public:
  explicit TempDir(std::string_view prefix = "mutascope");
  TempDir(TempDir&& other) noexcept;
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  ~TempDir();

  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace mutascope

#endif  // MUTASCOPE_WORKSPACE_H_
