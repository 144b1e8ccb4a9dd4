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

#include "mutascope/tokenizer.h"

#include <array>
#include <string>

#include "mutascope/error.h"

namespace mutascope {

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdentifier: return "IDENTIFIER";
    case TokenKind::kKeyword: return "KEYWORD";
    case TokenKind::kNumberLiteral: return "NUMBER_LITERAL";
    case TokenKind::kStringLiteral: return "STRING_LITERAL";
    case TokenKind::kBooleanLiteral: return "BOOLEAN_LITERAL";
    case TokenKind::kOperator: return "OPERATOR";
    case TokenKind::kPunctuation: return "PUNCTUATION";
    case TokenKind::kComment: return "COMMENT";
    case TokenKind::kWhitespace: return "WHITESPACE";
  }
  return "?";
}

std::string JoinTokens(const TokenList& tokens) {
  std::string out;
  for (const auto& t : tokens) out += t.text;
  return out;
}

bool IsValidUtf8(std::string_view bytes) {
  std::size_t i = 0;
  const std::size_t n = bytes.size();
  while (i < n) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    if (c < 0x80) {
      ++i;
      continue;
    }
    int extra = 0;
    char32_t cp = 0;
    if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + static_cast<std::size_t>(extra) >= n) return false;
    for (int k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(bytes[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    static constexpr std::array<char32_t, 4> kMin = {0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

namespace {

constexpr std::array<std::string_view, 33> kKeywords = {
    "and",    "as",     "assert", "async",  "await",    "break",  "class",
    "continue", "def",  "del",    "elif",   "else",     "except", "finally",
    "for",    "from",   "global", "if",     "import",   "in",     "is",
    "lambda", "None",   "nonlocal", "not",  "or",       "pass",   "raise",
    "return", "try",    "while",  "with",   "yield"};

// Longest-first so that a linear scan yields maximal munch.
constexpr std::array<std::string_view, 39> kOperators = {
    "**=", "//=", ">>=", "<<=", "->", ":=", "==", "!=", "<=", ">=", "+=",
    "-=",  "*=",  "/=",  "%=",  "&=", "|=", "^=", "@=", "**", "//", "<<",
    ">>",  "&&",  "||",  "+",   "-",  "*",  "/",  "%",  "<",  ">",  "=",
    "!",   "~",   "&",   "|",   "^",  "@"};

bool IsIdentStart(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c >= 0x80;
}

bool IsIdentChar(unsigned char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9');
}

bool IsDigit(unsigned char c) { return c >= '0' && c <= '9'; }

bool IsKeyword(std::string_view word) {
  for (auto k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

bool IsStringPrefix(std::string_view word) {
  if (word.empty() || word.size() > 2) return false;
  for (char c : word) {
    switch (c) {
      case 'r': case 'R': case 'b': case 'B':
      case 'u': case 'U': case 'f': case 'F':
        break;
      default:
        return false;
    }
  }
  return true;
}

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  TokenList Run() {
    while (pos_ < src_.size()) Next();
    return std::move(tokens_);
  }

 private:
  unsigned char At(std::size_t i) const {
    return i < src_.size() ? static_cast<unsigned char>(src_[i]) : 0;
  }

  void Emit(TokenKind kind, std::size_t end) {
    SourceToken tok;
    tok.kind = kind;
    tok.text = std::string(src_.substr(pos_, end - pos_));
    tok.span = {pos_, end};
    tok.line = line_;
    for (char c : tok.text) {
      if (c == '\n') ++line_;
    }
    // A lone '\r' also ends a line.
    for (std::size_t i = 0; i < tok.text.size(); ++i) {
      if (tok.text[i] == '\r' &&
          (i + 1 == tok.text.size() || tok.text[i + 1] != '\n')) {
        ++line_;
      }
    }
    tokens_.push_back(std::move(tok));
    pos_ = end;
  }

  void Next() {
    const unsigned char c = At(pos_);
    if (c == '\n') return Emit(TokenKind::kWhitespace, pos_ + 1);
    if (c == '\r') {
      return Emit(TokenKind::kWhitespace, At(pos_ + 1) == '\n' ? pos_ + 2
                                                                : pos_ + 1);
    }
    if (c == ' ' || c == '\t' || c == '\f' || c == '\v') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (At(end) == ' ' || At(end) == '\t' || At(end) == '\f' ||
              At(end) == '\v')) {
        ++end;
      }
      return Emit(TokenKind::kWhitespace, end);
    }
    if (c == '#') {
      std::size_t end = pos_;
      while (end < src_.size() && At(end) != '\n' && At(end) != '\r') ++end;
      return Emit(TokenKind::kComment, end);
    }
    if (c == '"' || c == '\'') return Emit(TokenKind::kStringLiteral, StringEnd(pos_));
    if (IsDigit(c) || (c == '.' && IsDigit(At(pos_ + 1)))) {
      return Emit(TokenKind::kNumberLiteral, NumberEnd());
    }
    if (IsIdentStart(c)) {
      std::size_t end = pos_;
      while (end < src_.size() && IsIdentChar(At(end))) ++end;
      const std::string_view word = src_.substr(pos_, end - pos_);
      if (IsStringPrefix(word) && (At(end) == '"' || At(end) == '\'')) {
        return Emit(TokenKind::kStringLiteral, StringEnd(end));
      }
      if (word == "True" || word == "False") {
        return Emit(TokenKind::kBooleanLiteral, end);
      }
      return Emit(IsKeyword(word) ? TokenKind::kKeyword : TokenKind::kIdentifier,
                  end);
    }
    if (src_.substr(pos_, 3) == "...") {
      return Emit(TokenKind::kPunctuation, pos_ + 3);
    }
    for (auto op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        return Emit(TokenKind::kOperator, pos_ + op.size());
      }
    }
    Emit(TokenKind::kPunctuation, pos_ + 1);
  }

  // `quote_pos` points at the opening quote character.
  std::size_t StringEnd(std::size_t quote_pos) const {
    const char q = src_[quote_pos];
    const bool triple = At(quote_pos + 1) == static_cast<unsigned char>(q) &&
                        At(quote_pos + 2) == static_cast<unsigned char>(q);
    std::size_t i = quote_pos + (triple ? 3 : 1);
    while (i < src_.size()) {
      const char c = src_[i];
      if (c == '\\') {
        i += 2;
        continue;
      }
      if (triple) {
        if (c == q && At(i + 1) == static_cast<unsigned char>(q) &&
            At(i + 2) == static_cast<unsigned char>(q)) {
          return i + 3;
        }
      } else {
        if (c == q) return i + 1;
        if (c == '\n' || c == '\r') return i;  // unterminated
      }
      ++i;
    }
    return src_.size();
  }

  std::size_t NumberEnd() const {
    std::size_t i = pos_;
    if (At(i) == '0' && (At(i + 1) == 'x' || At(i + 1) == 'X' ||
                         At(i + 1) == 'o' || At(i + 1) == 'O' ||
                         At(i + 1) == 'b' || At(i + 1) == 'B')) {
      i += 2;
      while (IsIdentChar(At(i)) && At(i) < 0x80) ++i;
      return i;
    }
    while (IsDigit(At(i)) || At(i) == '_') ++i;
    if (At(i) == '.' && At(i + 1) != '.') {
      ++i;
      while (IsDigit(At(i)) || At(i) == '_') ++i;
    }
    if ((At(i) == 'e' || At(i) == 'E') &&
        (IsDigit(At(i + 1)) ||
         ((At(i + 1) == '+' || At(i + 1) == '-') && IsDigit(At(i + 2))))) {
      i += 2;
      while (IsDigit(At(i)) || At(i) == '_') ++i;
    }
    if (At(i) == 'j' || At(i) == 'J' || At(i) == 'l' || At(i) == 'L') ++i;
    return i;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  TokenList tokens_;
};

}  // namespace

TokenList Tokenize(std::string_view file_bytes, std::string_view path) {
  if (!IsValidUtf8(file_bytes)) {
    throw DecodingError(std::string(path) + ": not valid UTF-8");
  }
  return Lexer(file_bytes).Run();
}

}  // namespace mutascope
