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

#ifndef MUTASCOPE_SUBPROCESS_H_
#define MUTASCOPE_SUBPROCESS_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace mutascope {

struct ProcessResult {
  int exit_code = 0;  // 128 + signal when the child was signalled
  bool timed_out = false;
  std::int64_t elapsed_ms = 0;
  std::string out;
  std::string err;
};

// Runs `argv` in `cwd` and captures both output streams. When `timeout` is
// set and elapses, the child's whole process group is killed and the result
// is marked timed_out. Throws WorkspaceError if the process cannot start.
ProcessResult RunProcess(const std::vector<std::string>& argv,
                         const std::filesystem::path& cwd,
                         std::optional<std::chrono::milliseconds> timeout);

}  // namespace mutascope

#endif  // MUTASCOPE_SUBPROCESS_H_
