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

#ifndef MUTASCOPE_ERROR_H_
#define MUTASCOPE_ERROR_H_

#include <stdexcept>
#include <string>

namespace mutascope {

// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MUTASCOPE_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

MUTASCOPE_DEFINE_ERROR(DecodingError);
MUTASCOPE_DEFINE_ERROR(StaleMutantError);
MUTASCOPE_DEFINE_ERROR(WorkspaceError);
MUTASCOPE_DEFINE_ERROR(RunnerProtocolError);
MUTASCOPE_DEFINE_ERROR(EmptyInputError);
MUTASCOPE_DEFINE_ERROR(ZeroVarianceError);
MUTASCOPE_DEFINE_ERROR(InsufficientPopulationError);
MUTASCOPE_DEFINE_ERROR(RepositoryError);
MUTASCOPE_DEFINE_ERROR(MethodNotFoundError);
MUTASCOPE_DEFINE_ERROR(ConfigError);
MUTASCOPE_DEFINE_ERROR(ReportIOError);

#undef MUTASCOPE_DEFINE_ERROR

// Raised when the baseline suite is not green. Carries the offending test.
class RedSuiteError : public Error {
 public:
  RedSuiteError(std::string test_id, const std::string& what)
      : Error(what), test_id_(std::move(test_id)) {}

  const std::string& test_id() const { return test_id_; }

 private:
  std::string test_id_;
};

}  // namespace mutascope

#endif  // MUTASCOPE_ERROR_H_
