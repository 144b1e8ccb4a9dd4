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

#include "mutascope/mutant.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>

#include "mutascope/error.h"

namespace mutascope {

std::optional<std::string> MutationOperator::Match(const TokenList& tokens,
                                                   std::size_t index) const {
  const auto& tok = tokens[index];
  switch (tok.kind) {
    case TokenKind::kOperator:
    case TokenKind::kNumberLiteral:
    case TokenKind::kBooleanLiteral:
    case TokenKind::kKeyword:
      break;
    default:
      return std::nullopt;
  }
  if (kinds.count(tok.kind) == 0) return std::nullopt;
  auto out = rewrite(tokens, index);
  if (out && *out == tok.text) return std::nullopt;
  return out;
}

bool IsZeroLiteral(std::string_view literal) {
  std::string s;
  for (char c : literal) {
    if (c != '_') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  while (!s.empty() && (s.back() == 'j' || s.back() == 'l')) s.pop_back();
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'o' || s[1] == 'b')) {
    return std::all_of(s.begin() + 2, s.end(), [](char c) { return c == '0'; });
  }
  const auto e = s.find('e');
  const std::string mantissa = s.substr(0, e);
  bool digit = false;
  for (char c : mantissa) {
    if (c == '0') {
      digit = true;
    } else if (c != '.') {
      return false;
    }
  }
  return digit;
}

namespace {

const SourceToken* PrevSignificant(const TokenList& tokens, std::size_t index) {
  while (index > 0) {
    --index;
    if (!tokens[index].IsTrivia()) return &tokens[index];
  }
  return nullptr;
}

// Binary operators follow an operand; unary ones follow an operator, an
// opening bracket, a comma, a keyword, or nothing.
bool FollowsOperand(const TokenList& tokens, std::size_t index) {
  const SourceToken* prev = PrevSignificant(tokens, index);
  if (prev == nullptr) return false;
  switch (prev->kind) {
    case TokenKind::kIdentifier:
    case TokenKind::kNumberLiteral:
    case TokenKind::kStringLiteral:
    case TokenKind::kBooleanLiteral:
      return true;
    case TokenKind::kKeyword:
      return prev->text == "None";
    case TokenKind::kPunctuation:
      return prev->text == ")" || prev->text == "]" || prev->text == "}";
    default:
      return false;
  }
}

MutationOperator::Rewrite TableRewrite(
    std::map<std::string, std::string> table, bool binary_only) {
  return [table = std::move(table), binary_only](
             const TokenList& tokens,
             std::size_t index) -> std::optional<std::string> {
    const auto it = table.find(tokens[index].text);
    if (it == table.end()) return std::nullopt;
    if (binary_only && !FollowsOperand(tokens, index)) return std::nullopt;
    return it->second;
  };
}

std::vector<MutationOperator> MakeBuiltins() {
  std::vector<MutationOperator> ops;
  ops.push_back({"AOR", "arithmetic operator replacement",
                 {TokenKind::kOperator},
                 TableRewrite({{"+", "-"}, {"-", "+"}, {"*", "/"},
                               {"/", "*"}, {"%", "*"}},
                              /*binary_only=*/true)});
  ops.push_back({"ROR-boundary", "relational boundary shift",
                 {TokenKind::kOperator},
                 TableRewrite({{"<", "<="}, {"<=", "<"}, {">", ">="},
                               {">=", ">"}},
                              false)});
  ops.push_back({"ROR-negate", "relational negation",
                 {TokenKind::kOperator},
                 TableRewrite({{"==", "!="}, {"!=", "=="}, {"<", ">="},
                               {">", "<="}},
                              false)});
  ops.push_back({"LOR", "logical operator replacement",
                 {TokenKind::kKeyword, TokenKind::kOperator},
                 TableRewrite({{"and", "or"}, {"or", "and"}, {"&&", "||"},
                               {"||", "&&"}},
                              false)});
  ops.push_back(
      {"NOT-removal", "unary negation removal",
       {TokenKind::kKeyword, TokenKind::kOperator},
       [](const TokenList& tokens,
          std::size_t index) -> std::optional<std::string> {
         const auto& t = tokens[index];
         if (t.Is(TokenKind::kKeyword, "not") ||
             (t.Is(TokenKind::kOperator, "!") && !FollowsOperand(tokens, index))) {
           return std::string();
         }
         return std::nullopt;
       }});
  ops.push_back({"BOOL-flip", "boolean literal flip",
                 {TokenKind::kBooleanLiteral},
                 TableRewrite({{"True", "False"}, {"False", "True"},
                               {"true", "false"}, {"false", "true"}},
                              false)});
  ops.push_back({"NUM-perturb", "numeric literal perturbation",
                 {TokenKind::kNumberLiteral},
                 [](const TokenList& tokens,
                    std::size_t index) -> std::optional<std::string> {
                   return IsZeroLiteral(tokens[index].text) ? "1" : "0";
                 }});
  ops.push_back({"INCR", "compound increment flip",
                 {TokenKind::kOperator},
                 TableRewrite({{"+=", "-="}, {"-=", "+="}}, false)});
  return ops;
}

}  // namespace

const std::vector<MutationOperator>& BuiltinOperators() {
  static const auto* ops = new std::vector<MutationOperator>(MakeBuiltins());
  return *ops;
}

std::vector<MutationOperator> SelectOperators(
    const std::vector<std::string>& ids) {
  if (ids.empty()) throw ConfigError("operator list is empty");
  std::vector<MutationOperator> out;
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) throw ConfigError("duplicate operator: " + id);
    const auto& all = BuiltinOperators();
    const auto it = std::find_if(all.begin(), all.end(),
                                 [&](const auto& op) { return op.id == id; });
    if (it == all.end()) throw ConfigError("unknown operator: " + id);
    out.push_back(*it);
  }
  return out;
}

std::vector<Mutant> GenerateMutants(const std::vector<TokenizedFile>& files,
                                    const std::vector<MutationOperator>& ops) {
  std::vector<Mutant> out;
  for (const auto& file : files) {
    for (std::size_t i = 0; i < file.tokens.size(); ++i) {
      const auto& tok = file.tokens[i];
      for (const auto& op : ops) {
        auto replacement = op.Match(file.tokens, i);
        if (!replacement) continue;
        Mutant m;
        m.operator_id = op.id;
        m.file = file.path;
        m.span = tok.span;
        m.line = tok.line;
        m.original = tok.text;
        m.replacement = std::move(*replacement);
        out.push_back(std::move(m));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Mutant& a, const Mutant& b) {
    return std::tie(a.file, a.span, a.operator_id) <
           std::tie(b.file, b.span, b.operator_id);
  });
  MutantId next = 1;
  for (auto& m : out) m.id = next++;
  return out;
}

}  // namespace mutascope
