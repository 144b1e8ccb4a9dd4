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

#ifndef MUTASCOPE_SOURCE_TOKEN_H_
#define MUTASCOPE_SOURCE_TOKEN_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mutascope {

enum class TokenKind {
  kIdentifier,
  kKeyword,
  kNumberLiteral,
  kStringLiteral,
  kBooleanLiteral,
  kOperator,
  kPunctuation,
  kComment,
  kWhitespace,
};

std::string_view TokenKindName(TokenKind kind);

// Half-open byte range [begin, end) into a file.
struct ByteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool Contains(const ByteSpan& other) const {
    return begin <= other.begin && other.end <= end;
  }
  friend bool operator==(const ByteSpan&, const ByteSpan&) = default;
  friend auto operator<=>(const ByteSpan&, const ByteSpan&) = default;
};

struct SourceToken {
  TokenKind kind = TokenKind::kWhitespace;
  std::string text;
  ByteSpan span;
  int line = 1;

  // True for tokens that carry no program meaning (whitespace, comments).
  bool IsTrivia() const {
    return kind == TokenKind::kWhitespace || kind == TokenKind::kComment;
  }
  bool Is(TokenKind k, std::string_view t) const {
    return kind == k && text == t;
  }

  friend bool operator==(const SourceToken&, const SourceToken&) = default;
};

using TokenList = std::vector<SourceToken>;

// Reassembles the original bytes from a token stream.
std::string JoinTokens(const TokenList& tokens);

}  // namespace mutascope

#endif  // MUTASCOPE_SOURCE_TOKEN_H_
