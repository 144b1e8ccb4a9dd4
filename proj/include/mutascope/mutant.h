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

#ifndef MUTASCOPE_MUTANT_H_
#define MUTASCOPE_MUTANT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/source_token.h"

namespace mutascope {

using MutantId = std::int64_t;

// A first-order mutant: exactly one token's text replaced.
struct Mutant {
  MutantId id = 0;
  std::string operator_id;
  std::string file;
  ByteSpan span;
  int line = 1;
  std::string original;
  std::string replacement;

  friend bool operator==(const Mutant&, const Mutant&) = default;
};

// A token-level rewrite rule.
//
// `kinds` restricts which token kinds are even considered; `rewrite` sees
// the whole stream so it can inspect neighbours (e.g. to tell binary from
// unary operators) and returns the replacement text, or nullopt when the
// token does not match.
struct MutationOperator {
  using Rewrite = std::function<std::optional<std::string>(
      const TokenList& tokens, std::size_t index)>;

  std::string id;
  std::string description;
  std::set<TokenKind> kinds;
  Rewrite rewrite;

  std::optional<std::string> Match(const TokenList& tokens,
                                   std::size_t index) const;
};

// The reference operator set, in a fixed order:
// AOR, ROR-boundary, ROR-negate, LOR, NOT-removal, BOOL-flip, NUM-perturb,
// INCR.
const std::vector<MutationOperator>& BuiltinOperators();

// Looks up operators by id, preserving the requested order. Throws
// ConfigError for unknown or duplicate ids, or an empty list.
std::vector<MutationOperator> SelectOperators(
    const std::vector<std::string>& ids);

struct TokenizedFile {
  std::string path;
  TokenList tokens;
};

// Every (token, operator) match yields one mutant. Ids start at 1 and follow
// (file path, span, operator id) order. Callers pass production files only.
std::vector<Mutant> GenerateMutants(const std::vector<TokenizedFile>& files,
                                    const std::vector<MutationOperator>& ops);

// True when a numeric literal denotes zero (handles 0x0, 0.0, 0e3, 0j, _).
bool IsZeroLiteral(std::string_view literal);

}  // namespace mutascope

#endif  // MUTASCOPE_MUTANT_H_
