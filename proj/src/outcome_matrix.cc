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

#include "mutascope/outcome_matrix.h"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace mutascope {

using ojson = nlohmann::ordered_json;

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "PASS";
    case Outcome::kFail: return "FAIL";
    case Outcome::kError: return "ERROR";
    case Outcome::kTimeout: return "TIMEOUT";
  }
  return "?";
}

std::optional<Outcome> ParseOutcome(std::string_view name) {
  for (auto o : {Outcome::kPass, Outcome::kFail, Outcome::kError, Outcome::kTimeout}) {
    if (OutcomeName(o) == name) return o;
  }
  return std::nullopt;
}

OutcomeMatrix::OutcomeMatrix(std::vector<Mutant> mutants,
                             std::vector<MatrixTest> tests)
    : mutants_(std::move(mutants)), tests_(std::move(tests)) {}

void OutcomeMatrix::Set(MutantId mutant, const std::string& test,
                        TestOutcome outcome) {
  const bool known_mutant =
      std::any_of(mutants_.begin(), mutants_.end(),
                  [&](const Mutant& m) { return m.id == mutant; });
  const bool known_test =
      std::any_of(tests_.begin(), tests_.end(),
                  [&](const MatrixTest& t) { return t.id == test; });
  if (!known_mutant || !known_test) {
    throw std::invalid_argument("matrix entry (" + std::to_string(mutant) +
                                ", " + test + ") names an unknown mutant or test");
  }
  entries_[{mutant, test}] = std::move(outcome);
}

const TestOutcome* OutcomeMatrix::Find(MutantId mutant,
                                       const std::string& test) const {
  const auto it = entries_.find({mutant, test});
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Outcome> OutcomeMatrix::Row(MutantId mutant) const {
  std::vector<Outcome> row;
  for (const auto& t : tests_) {
    if (const auto* e = Find(mutant, t.id)) row.push_back(e->outcome);
  }
  return row;
}

std::vector<Outcome> OutcomeMatrix::Column(const std::string& test) const {
  std::vector<Outcome> column;
  for (const auto& m : mutants_) {
    if (const auto* e = Find(m.id, test)) column.push_back(e->outcome);
  }
  return column;
}

std::string SerializeMatrix(const OutcomeMatrix& matrix,
                            const MatrixSerializeOptions& options) {
  ojson doc;
  doc["format"] = "mutascope-matrix/1";
  if (!matrix.source_root().empty()) doc["workspace"] = matrix.source_root();
  ojson tests = ojson::array();
  for (const auto& t : matrix.tests()) {
    ojson jt;
    jt["id"] = t.id;
    if (options.include_timings) jt["baseline_ms"] = t.baseline_ms;
    tests.push_back(std::move(jt));
  }
  doc["tests"] = std::move(tests);
  ojson mutants = ojson::array();
  for (const auto& m : matrix.mutants()) {
    mutants.push_back({{"id", m.id},
                       {"operator", m.operator_id},
                       {"file", m.file},
                       {"begin", m.span.begin},
                       {"end", m.span.end},
                       {"line", m.line},
                       {"original", m.original},
                       {"replacement", m.replacement}});
  }
  doc["mutants"] = std::move(mutants);
  ojson entries = ojson::array();
  for (const auto& m : matrix.mutants()) {
    for (const auto& t : matrix.tests()) {
      const auto* e = matrix.Find(m.id, t.id);
      if (e == nullptr) continue;
      ojson je;
      je["mutant"] = m.id;
      je["test"] = t.id;
      je["outcome"] = OutcomeName(e->outcome);
      if (options.include_timings) je["duration_ms"] = e->duration_ms;
      if (!e->diagnostic.empty()) je["diagnostic"] = e->diagnostic;
      entries.push_back(std::move(je));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump(1) + "\n";
}

OutcomeMatrix ParseMatrix(std::string_view json_text) {
  try {
    const auto doc = ojson::parse(json_text);
    if (doc.value("format", "") != "mutascope-matrix/1") {
      throw std::invalid_argument("unsupported matrix format");
    }
    std::vector<MatrixTest> tests;
    for (const auto& jt : doc.at("tests")) {
      tests.push_back({jt.at("id").get<std::string>(),
                       jt.value("baseline_ms", std::int64_t{0})});
    }
    std::vector<Mutant> mutants;
    for (const auto& jm : doc.at("mutants")) {
      Mutant m;
      m.id = jm.at("id").get<MutantId>();
      m.operator_id = jm.at("operator").get<std::string>();
      m.file = jm.at("file").get<std::string>();
      m.span = {jm.at("begin").get<std::size_t>(), jm.at("end").get<std::size_t>()};
      m.line = jm.at("line").get<int>();
      m.original = jm.at("original").get<std::string>();
      m.replacement = jm.at("replacement").get<std::string>();
      mutants.push_back(std::move(m));
    }
    OutcomeMatrix matrix(std::move(mutants), std::move(tests));
    matrix.set_source_root(doc.value("workspace", std::string()));
    for (const auto& je : doc.at("entries")) {
      const auto outcome = ParseOutcome(je.at("outcome").get<std::string>());
      if (!outcome) throw std::invalid_argument("bad outcome in matrix entry");
      TestOutcome to;
      to.outcome = *outcome;
      to.duration_ms = je.value("duration_ms", std::int64_t{0});
      to.diagnostic = je.value("diagnostic", std::string());
      matrix.Set(je.at("mutant").get<MutantId>(), je.at("test").get<std::string>(),
                 std::move(to));
    }
    return matrix;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed matrix: ") + e.what());
  }
}

}  // namespace mutascope
