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

#include "mutascope/frontend.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>

#include "mutascope/log.h"
#include "mutascope/tokenizer.h"

namespace mutascope {

std::string MethodRecord::ClassName() const {
  return in_class && !containers.empty() ? containers.back() : std::string();
}

std::string MakeMethodId(std::string_view path,
                         const std::vector<std::string>& containers,
                         std::string_view name) {
  std::string id(path);
  for (const auto& c : containers) {
    id += "::";
    id += c;
  }
  id += "::";
  id += name;
  return id;
}

std::string_view MarkerLeaf(std::string_view marker) {
  const auto dot = marker.rfind('.');
  return dot == std::string_view::npos ? marker : marker.substr(dot + 1);
}

bool HasMarker(const MethodRecord& m, const std::set<std::string>& leaves) {
  return std::any_of(m.markers.begin(), m.markers.end(), [&](const auto& mk) {
    return leaves.count(std::string(MarkerLeaf(mk))) > 0;
  });
}

bool ClassifyTest(MethodRecord& m, const TestMarkers& markers) {
  bool prefixed = m.name.size() >= 4;
  for (std::size_t i = 0; prefixed && i < 4; ++i) {
    prefixed = std::tolower(static_cast<unsigned char>(m.name[i])) == "test"[i];
  }
  m.is_test = prefixed || HasMarker(m, markers.test);
  m.is_skipped = HasMarker(m, markers.skip);
  return m.is_test;
}

namespace {

// One logical line: a statement possibly spanning several physical lines
// through brackets or backslash continuations.
struct LogicalLine {
  std::size_t first = 0;  // first significant token
  std::size_t last = 0;   // last significant token
  int indent = 0;
};

int IndentWidth(std::string_view ws) {
  int col = 0;
  for (char c : ws) {
    if (c == '\t') {
      col = (col / 8 + 1) * 8;
    } else {
      ++col;
    }
  }
  return col;
}

bool IsNewline(const SourceToken& t) {
  return t.kind == TokenKind::kWhitespace &&
         (t.text == "\n" || t.text == "\r\n" || t.text == "\r");
}

std::vector<LogicalLine> SplitLogicalLines(const TokenList& tokens) {
  std::vector<LogicalLine> lines;
  std::optional<LogicalLine> current;
  int depth = 0;
  bool at_line_start = true;
  int pending_indent = 0;
  const SourceToken* prev_significant = nullptr;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    if (IsNewline(t)) {
      const bool continued =
          depth > 0 ||
          (prev_significant != nullptr && prev_significant->text == "\\" &&
           prev_significant->kind == TokenKind::kPunctuation);
      if (!continued && current) {
        lines.push_back(*current);
        current.reset();
        depth = 0;
      }
      at_line_start = true;
      pending_indent = 0;
      continue;
    }
    if (t.kind == TokenKind::kWhitespace) {
      if (at_line_start) pending_indent = IndentWidth(t.text);
      continue;
    }
    if (t.kind == TokenKind::kComment) {
      at_line_start = false;
      continue;
    }
    if (!current) {
      current = LogicalLine{i, i, at_line_start ? pending_indent : 0};
    }
    current->last = i;
    at_line_start = false;
    prev_significant = &t;
    if (t.kind == TokenKind::kPunctuation) {
      if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
      if ((t.text == ")" || t.text == "]" || t.text == "}") && depth > 0) {
        --depth;
      }
    }
  }
  if (current) lines.push_back(*current);
  return lines;
}

// Index of the next significant token at or after `i` within [i, last].
std::optional<std::size_t> NextSignificant(const TokenList& tokens,
                                           std::size_t i, std::size_t last) {
  for (; i <= last && i < tokens.size(); ++i) {
    if (!tokens[i].IsTrivia()) return i;
  }
  return std::nullopt;
}

int LastLineOf(const SourceToken& t) {
  int line = t.line;
  for (std::size_t i = 0; i < t.text.size(); ++i) {
    if (t.text[i] == '\n' ||
        (t.text[i] == '\r' && (i + 1 == t.text.size() || t.text[i + 1] != '\n'))) {
      ++line;
    }
  }
  // A token ending in a newline does not occupy the following line.
  if (!t.text.empty() && (t.text.back() == '\n' || t.text.back() == '\r')) {
    --line;
  }
  return line;
}

struct Scope {
  bool is_class = false;
  int indent = 0;
  std::string name;
  std::optional<std::size_t> record;  // index into `pending` for defs
};

struct PendingRecord {
  MethodRecord record;
  std::size_t first_token = 0;
  std::size_t body_first = 0;
  std::size_t last_token = 0;
};

}  // namespace

std::vector<MethodRecord> ExtractMethods(const TokenList& tokens,
                                         std::string_view path) {
  const auto lines = SplitLogicalLines(tokens);
  std::vector<PendingRecord> pending;
  std::vector<Scope> stack;
  std::set<std::string> decorators;
  constexpr std::size_t kNoDecorator = static_cast<std::size_t>(-1);
  std::size_t decorator_start = kNoDecorator;

  for (const auto& line : lines) {
    while (!stack.empty() && line.indent <= stack.back().indent) {
      stack.pop_back();
    }
    const auto& head = tokens[line.first];
    std::size_t keyword = line.first;
    if (head.Is(TokenKind::kKeyword, "async")) {
      if (auto next = NextSignificant(tokens, line.first + 1, line.last)) {
        keyword = *next;
      }
    }
    const auto& kw = tokens[keyword];

    if (head.Is(TokenKind::kOperator, "@")) {
      std::string marker;
      for (std::size_t i = line.first + 1; i <= line.last; ++i) {
        const auto& t = tokens[i];
        if (t.kind == TokenKind::kIdentifier || t.kind == TokenKind::kKeyword ||
            t.Is(TokenKind::kPunctuation, ".")) {
          marker += t.text;
        } else if (!t.IsTrivia()) {
          break;
        }
      }
      if (!marker.empty()) decorators.insert(marker);
      if (decorator_start == kNoDecorator) decorator_start = line.first;
    } else if (kw.Is(TokenKind::kKeyword, "def") ||
               kw.Is(TokenKind::kKeyword, "class")) {
      const bool is_def = kw.text == "def";
      const auto name_idx = NextSignificant(tokens, keyword + 1, line.last);
      // The block opener is the first depth-0 colon of the header.
      std::optional<std::size_t> colon;
      int depth = 0;
      for (std::size_t i = keyword + 1; i <= line.last; ++i) {
        const auto& t = tokens[i];
        if (t.kind != TokenKind::kPunctuation) continue;
        if (t.text == "(" || t.text == "[" || t.text == "{") ++depth;
        if (t.text == ")" || t.text == "]" || t.text == "}") --depth;
        if (t.text == ":" && depth == 0) {
          colon = i;
          break;
        }
      }
      if (!name_idx || tokens[*name_idx].kind != TokenKind::kIdentifier ||
          !colon) {
        LogInfo(std::string(path) + ":" + std::to_string(kw.line) +
                ": unparseable definition header skipped");
        decorators.clear();
        decorator_start = kNoDecorator;
        continue;
      }
      Scope scope;
      scope.is_class = !is_def;
      scope.indent = line.indent;
      scope.name = tokens[*name_idx].text;
      if (is_def) {
        PendingRecord p;
        auto& r = p.record;
        r.file = std::string(path);
        r.name = scope.name;
        for (const auto& s : stack) {
          r.containers.push_back(s.name);
          if (!s.is_class) r.is_nested = true;
        }
        r.in_class = !stack.empty() && stack.back().is_class;
        r.id = MakeMethodId(path, r.containers, r.name);
        r.markers = decorators;
        p.first_token = decorator_start == kNoDecorator ? line.first : decorator_start;
        p.body_first = *colon + 1;
        scope.record = pending.size();
        pending.push_back(std::move(p));
      }
      stack.push_back(std::move(scope));
      decorators.clear();
      decorator_start = kNoDecorator;
    } else {
      decorators.clear();
      decorator_start = kNoDecorator;
    }

    for (const auto& s : stack) {
      if (s.record) pending[*s.record].last_token = line.last;
    }
  }

  std::vector<MethodRecord> out;
  out.reserve(pending.size());
  for (auto& p : pending) {
    auto& r = p.record;
    const auto& first = tokens[p.first_token];
    const auto& last = tokens[p.last_token];
    r.span = {first.span.begin, last.span.end};
    r.line_range = {first.line, LastLineOf(last)};
    if (p.body_first <= p.last_token) {
      r.body_tokens.assign(tokens.begin() + static_cast<std::ptrdiff_t>(p.body_first),
                           tokens.begin() + static_cast<std::ptrdiff_t>(p.last_token) + 1);
    }
    out.push_back(std::move(r));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.span.begin < b.span.begin;
  });
  return out;
}

bool IndentFrontend::Handles(std::string_view path) const {
  return path.size() >= 3 && path.substr(path.size() - 3) == ".py";
}

TokenList IndentFrontend::Tokenize(std::string_view bytes,
                                   std::string_view path) const {
  return mutascope::Tokenize(bytes, path);
}

std::vector<MethodRecord> IndentFrontend::ExtractMethods(
    const TokenList& tokens, std::string_view path) const {
  return mutascope::ExtractMethods(tokens, path);
}

std::unique_ptr<Frontend> MakeDefaultFrontend() {
  return std::make_unique<IndentFrontend>();
}

}  // namespace mutascope
