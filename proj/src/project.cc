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

#include "mutascope/project.h"

#include <algorithm>

#include "mutascope/error.h"
#include "mutascope/log.h"
#include "mutascope/workspace.h"

namespace mutascope {

namespace fs = std::filesystem;

std::vector<MethodRecord> Project::AllMethods() const {
  std::vector<MethodRecord> out;
  for (const auto& f : files) out.insert(out.end(), f.methods.begin(), f.methods.end());
  return out;
}

std::vector<TokenizedFile> Project::ProductionFiles() const {
  std::vector<TokenizedFile> out;
  for (const auto& f : files) {
    if (!f.is_test_file) out.push_back({f.path, f.tokens});
  }
  return out;
}

Project ScanProject(const fs::path& root, const RunConfig& config,
                    const Frontend& frontend) {
  Project project;
  project.root = root;
  std::vector<std::string> paths;
  std::error_code ec;
  for (auto it = fs::recursive_directory_iterator(root, ec);
       !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    const auto name = it->path().filename().string();
    if (it->is_directory()) {
      if ((!name.empty() && name[0] == '.') || name == "__pycache__") {
        it.disable_recursion_pending();
      }
      continue;
    }
    if (!it->is_regular_file()) continue;
    const std::string rel = fs::relative(it->path(), root).generic_string();
    if (!frontend.Handles(rel) || MatchesAnyGlob(rel, config.exclude_globs)) continue;
    paths.push_back(rel);
  }
  if (ec) throw WorkspaceError("cannot scan " + root.string() + ": " + ec.message());
  std::sort(paths.begin(), paths.end());

  for (const auto& rel : paths) {
    SourceFile file;
    file.path = rel;
    try {
      file.tokens = frontend.Tokenize(ReadFileBytes(root / rel), rel);
    } catch (const DecodingError& e) {
      LogWarning(std::string(e.what()) + "; file excluded");
      continue;
    }
    file.methods = frontend.ExtractMethods(file.tokens, rel);
    bool has_tests = false;
    for (auto& m : file.methods) has_tests |= ClassifyTest(m, config.vocabulary.markers);
    file.is_test_file = has_tests || MatchesAnyGlob(rel, config.test_globs);
    project.files.push_back(std::move(file));
  }
  return project;
}

}  // namespace mutascope
