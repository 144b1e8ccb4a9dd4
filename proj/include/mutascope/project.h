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

#ifndef MUTASCOPE_PROJECT_H_
#define MUTASCOPE_PROJECT_H_

#include <filesystem>
#include <string>
#include <vector>

#include "mutascope/config.h"
#include "mutascope/frontend.h"
#include "mutascope/method_record.h"
#include "mutascope/mutant.h"

namespace mutascope {

struct SourceFile {
  std::string path;  // workspace-relative, '/'-separated
  TokenList tokens;
  std::vector<MethodRecord> methods;  // classified
  bool is_test_file = false;
};

struct Project {
  std::filesystem::path root;
  std::vector<SourceFile> files;  // sorted by path

  std::vector<MethodRecord> AllMethods() const;
  // Files eligible for mutation.
  std::vector<TokenizedFile> ProductionFiles() const;
};

// Walks `root` for files the frontend handles (skipping hidden directories,
// bytecode caches and `exclude_globs`), tokenizes and extracts methods. A
// file is test code when it matches `test_globs` or defines a test method.
// Undecodable files are skipped with a warning.
Project ScanProject(const std::filesystem::path& root, const RunConfig& config,
                    const Frontend& frontend);

}  // namespace mutascope

#endif  // MUTASCOPE_PROJECT_H_
