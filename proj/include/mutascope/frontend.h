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

#ifndef MUTASCOPE_FRONTEND_H_
#define MUTASCOPE_FRONTEND_H_

#include <memory>
#include <string_view>
#include <vector>

#include "mutascope/method_record.h"
#include "mutascope/source_token.h"

namespace mutascope {

// Language boundary. Everything downstream consumes only tokens and
// MethodRecords, so adding a target syntax means adding a Frontend.
class Frontend {
 public:
  virtual ~Frontend() = default;

  virtual std::string_view name() const = 0;
  virtual bool Handles(std::string_view path) const = 0;
  virtual TokenList Tokenize(std::string_view bytes,
                             std::string_view path) const = 0;
  virtual std::vector<MethodRecord> ExtractMethods(
      const TokenList& tokens, std::string_view path) const = 0;
};

// Reference frontend: indentation-delimited blocks, `def`/`class`, and
// `@decorator` markers.
class IndentFrontend final : public Frontend {
 public:
  std::string_view name() const override { return "indent"; }
  bool Handles(std::string_view path) const override;
  TokenList Tokenize(std::string_view bytes,
                     std::string_view path) const override;
  std::vector<MethodRecord> ExtractMethods(
      const TokenList& tokens, std::string_view path) const override;
};

// Extracts every function definition from `tokens`, sorted by span. Regions
// that cannot be parsed produce no records.
std::vector<MethodRecord> ExtractMethods(const TokenList& tokens,
                                         std::string_view path);

std::unique_ptr<Frontend> MakeDefaultFrontend();

}  // namespace mutascope

#endif  // MUTASCOPE_FRONTEND_H_
