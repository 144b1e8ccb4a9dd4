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

#ifndef MUTASCOPE_REPORT_H_
#define MUTASCOPE_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mutascope/config.h"
#include "mutascope/history_miner.h"
#include "mutascope/outcome_matrix.h"
#include "mutascope/project.h"
#include "mutascope/scoring.h"
#include "mutascope/study.h"
#include "mutascope/test_inspector.h"

namespace mutascope {

struct MethodRow {
  MethodScore score;
  MethodRecord record;
  StaticMetrics metrics;
  SmellReport smells;
  std::optional<EvolutionMetrics> evolution;
};

struct MutantRow {
  Mutant mutant;
  MutantStatus status = MutantStatus::kUncovered;
  std::vector<std::string> killing_tests;
};

// Everything the report files are rendered from.
struct StudyReport {
  std::vector<MutantRow> mutants;
  std::optional<SuiteScore> suite;
  std::size_t test_count = 0;
  std::size_t runs = 0;

  std::vector<MethodRow> methods;  // selected methods, matrix test order
  std::vector<std::string> undefined_score_tests;
  std::vector<std::string> unresolved_tests;  // no static definition
  std::vector<std::string> skipped_tests;
  std::vector<std::string> nested_tests;      // selected but locally defined

  std::optional<StudyGroups> groups;
  std::string groups_error;
  std::vector<ComparisonResult> comparisons;
  std::vector<SmellShare> prevalence;

  double alpha = 0.05;
  bool history_available = false;
  std::string history_note;
};

struct AnalysisOptions {
  std::size_t k = 100;
  std::uint64_t seed = 0;
  bool overlap = false;
  double alpha = 0.05;
  bool mine_history = true;
};

// Scores the matrix, selects test methods, measures them and runs the
// group comparison. History is mined when the project root is a git
// repository.
StudyReport Analyze(const OutcomeMatrix& matrix, const Project& project,
                    const RunConfig& config, const AnalysisOptions& options);

// Metrics compared between groups, in report order.
const std::vector<std::string>& ComparedMetrics();

std::string RenderMethodsCsv(const StudyReport& report);
std::string RenderMutantsCsv(const StudyReport& report);
std::string RenderStudyJson(const StudyReport& report);
std::string RenderSummary(const StudyReport& report, std::string_view project_name);

// Writes methods.csv, mutants.csv, study.json and summary.txt into `dir`.
// Throws ReportIOError.
void EmitReports(const StudyReport& report, const std::filesystem::path& dir,
                 std::string_view project_name);

// Structural check of a study.json document; returns the problems found.
std::vector<std::string> ValidateStudyJson(std::string_view json_text);

// RFC 4180 field quoting.
std::string CsvField(std::string_view value);

}  // namespace mutascope

#endif  // MUTASCOPE_REPORT_H_
