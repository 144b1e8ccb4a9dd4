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

#include "mutascope/workspace.h"

#include <stdlib.h>

#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>
#include <vector>

#include "mutascope/error.h"
#include "mutascope/log.h"

namespace mutascope {

namespace fs = std::filesystem;

std::string ReadFileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw WorkspaceError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileBytes(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WorkspaceError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw WorkspaceError("short write to " + path.string());
}

AppliedMutant::AppliedMutant(fs::path file, std::string original_bytes)
    : file_(std::move(file)), original_(std::move(original_bytes)) {}

AppliedMutant::AppliedMutant(AppliedMutant&& other) noexcept
    : file_(std::move(other.file_)),
      original_(std::move(other.original_)),
      active_(std::exchange(other.active_, false)) {}

AppliedMutant::~AppliedMutant() {
  if (!active_) return;
  try {
    Revert();
  } catch (const std::exception& e) {
    LogWarning(std::string("failed to revert mutant: ") + e.what());
  }
}

void AppliedMutant::Revert() {
  if (!active_) return;
  WriteFileBytes(file_, original_);
  active_ = false;
}

AppliedMutant ApplyMutant(const fs::path& root, const Mutant& m) {
  const fs::path file = root / m.file;
  std::string bytes = ReadFileBytes(file);
  if (m.span.end > bytes.size() ||
      bytes.compare(m.span.begin, m.span.size(), m.original) != 0 ||
      m.span.size() != m.original.size()) {
    throw StaleMutantError("mutant " + std::to_string(m.id) + ": " + m.file +
                           " no longer holds '" + m.original + "' at byte " +
                           std::to_string(m.span.begin));
  }
  std::string patched = bytes;
  patched.replace(m.span.begin, m.span.size(), m.replacement);
  AppliedMutant applied(file, std::move(bytes));
  WriteFileBytes(file, patched);
  return applied;
}

void CopyWorkspace(const fs::path& from, const fs::path& to) {
  std::error_code ec;
  fs::create_directories(to, ec);
  if (ec) throw WorkspaceError("cannot create " + to.string() + ": " + ec.message());
  for (auto it = fs::recursive_directory_iterator(from, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    const auto name = it->path().filename().string();
    if (it->is_directory() && (name == ".git" || name == "__pycache__")) {
      it.disable_recursion_pending();
      continue;
    }
    const fs::path target = to / fs::relative(it->path(), from);
    if (it->is_directory()) {
      fs::create_directories(target, ec);
    } else if (it->is_regular_file()) {
      fs::copy_file(it->path(), target, fs::copy_options::overwrite_existing, ec);
    }
    if (ec) break;
  }
  if (ec) {
    throw WorkspaceError("cannot copy " + from.string() + " to " + to.string() +
                         ": " + ec.message());
  }
}

TempDir::TempDir(std::string_view prefix) {
  std::string tmpl =
      (fs::temp_directory_path() / (std::string(prefix) + "-XXXXXX")).string();
  std::vector<char> buf(tmpl.begin(), tmpl.end());
  buf.push_back('\0');
  if (mkdtemp(buf.data()) == nullptr) {
    throw WorkspaceError("mkdtemp failed for " + tmpl);
  }
  path_ = buf.data();
}

TempDir::TempDir(TempDir&& other) noexcept : path_(std::move(other.path_)) {
  other.path_.clear();
}

TempDir::~TempDir() {
  if (path_.empty()) return;
  std::error_code ec;
  fs::remove_all(path_, ec);
}

}  // namespace mutascope
