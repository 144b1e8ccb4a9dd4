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

#include "mutascope/report.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

#include "mutascope/error.h"
#include "mutascope/log.h"

namespace mutascope {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

std::string FormatDouble(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::optional<double> MetricValue(const MethodRow& row, std::string_view metric) {
  if (metric == "sloc") return static_cast<double>(row.metrics.sloc);
  if (metric == "bad_asserts") return static_cast<double>(row.metrics.bad_asserts);
  if (metric == "exceptions") return static_cast<double>(row.metrics.exceptions);
  if (metric == "magic_numbers") return static_cast<double>(row.metrics.magic_numbers);
  if (!row.evolution) return std::nullopt;
  if (metric == "modifications") return static_cast<double>(row.evolution->modifications);
  if (metric == "contributors") return static_cast<double>(row.evolution->contributors);
  if (metric == "expertise" && row.evolution->expertise) {
    return row.evolution->expertise->ToDouble();
  }
  return std::nullopt;
}

ojson Nullable(const std::optional<double>& v) {
  return v ? ojson(*v) : ojson(nullptr);
}

ojson Strings(const std::vector<std::string>& v) {
  ojson a = ojson::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

}  // namespace

const std::vector<std::string>& ComparedMetrics() {
  static const auto* metrics = new std::vector<std::string>{
      "sloc",          "bad_asserts",  "exceptions", "magic_numbers",
      "modifications", "contributors", "expertise"};
  return *metrics;
}

StudyReport Analyze(const OutcomeMatrix& matrix, const Project& project,
                    const RunConfig& config, const AnalysisOptions& options) {
  StudyReport report;
  report.alpha = options.alpha;
  report.test_count = matrix.tests().size();
  report.runs = matrix.entries().size();

  const auto statuses = ClassifyAll(matrix);
  for (std::size_t i = 0; i < matrix.mutants().size(); ++i) {
    MutantRow row;
    row.mutant = matrix.mutants()[i];
    row.status = statuses[i];
    for (const auto& t : matrix.tests()) {
      const auto* e = matrix.Find(row.mutant.id, t.id);
      if (e != nullptr && e->outcome != Outcome::kPass) row.killing_tests.push_back(t.id);
    }
    report.mutants.push_back(std::move(row));
  }
  if (!statuses.empty()) report.suite = ComputeSuiteScore(statuses);

  const auto scores = ScoreAllMethods(matrix);
  const auto methods = project.AllMethods();
  std::map<std::string, const MethodRecord*> by_id;
  for (const auto& m : methods) by_id.emplace(m.id, &m);
  for (const auto& s : scores) {
    const auto it = by_id.find(s.test_id);
    if (it == by_id.end()) {
      report.unresolved_tests.push_back(s.test_id);
    } else if (it->second->is_skipped) {
      report.skipped_tests.push_back(s.test_id);
    } else if (s.covered > 0 && !s.score) {
      report.undefined_score_tests.push_back(s.test_id);
    }
  }
  const auto selected = SelectTestMethods(methods, scores);
  const std::set<std::string> selected_set(selected.begin(), selected.end());

  std::optional<GitRepository> repo;
  std::int64_t total_commits = 0;
  std::map<std::string, std::int64_t> per_author;
  if (options.mine_history) {
    try {
      repo.emplace(project.root);
      total_commits = repo->TotalCommits();
      per_author = repo->CommitsPerAuthor();
      report.history_available = true;
    } catch (const RepositoryError& e) {
      report.history_note = "history unavailable: not a readable git repository";
      LogInfo(e.what());
    }
  } else {
    report.history_note = "history mining disabled";
  }

  std::map<std::string, std::vector<MethodRecord>> by_file;
  for (const auto& m : methods) by_file[m.file].push_back(m);

  std::map<std::string, MethodRow*> rows_by_id;
  report.methods.reserve(selected.size());
  for (const auto& s : scores) {
    if (selected_set.count(s.test_id) == 0) continue;
    const MethodRecord& rec = *by_id.at(s.test_id);
    MethodRow row;
    row.score = s;
    row.record = rec;
    row.metrics = ComputeStaticMetrics(rec, config.vocabulary);
    row.smells = DetectSmells(rec, BuildClassContext(rec, by_file[rec.file], config.vocabulary),
                              config.vocabulary);
    if (repo) {
      try {
        row.evolution = ComputeEvolutionMetrics(MethodHistory(*repo, rec), total_commits,
                                                per_author);
      } catch (const MethodNotFoundError& e) {
        LogWarning(e.what());
      }
    }
    if (rec.is_nested) report.nested_tests.push_back(rec.id);
    report.methods.push_back(std::move(row));
  }
  for (auto& row : report.methods) rows_by_id[row.score.test_id] = &row;

  std::vector<MethodScore> selected_scores;
  for (const auto& row : report.methods) selected_scores.push_back(row.score);
  try {
    report.groups =
        SelectGroups(selected_scores, options.k, options.seed, options.overlap);
  } catch (const InsufficientPopulationError& e) {
    report.groups_error = e.what();
    return report;
  }

  auto values = [&](const std::vector<std::string>& ids, const std::string& metric) {
    std::vector<double> out;
    for (const auto& id : ids) {
      if (auto v = MetricValue(*rows_by_id.at(id), metric)) out.push_back(*v);
    }
    return out;
  };
  for (const auto& metric : ComparedMetrics()) {
    report.comparisons.push_back(CompareGroups(metric, values(report.groups->best, metric),
                                               values(report.groups->random, metric),
                                               values(report.groups->worst, metric)));
  }
  std::map<std::string, SmellReport> smells;
  for (const auto& row : report.methods) smells[row.score.test_id] = row.smells;
  report.prevalence = SmellPrevalence(*report.groups, smells);
  return report;
}

std::string CsvField(std::string_view value) {
  if (value.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

void CsvRow(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += CsvField(fields[i]);
  }
  out += "\r\n";
}

}  // namespace

std::string RenderMethodsCsv(const StudyReport& report) {
  std::string out;
  std::vector<std::string> header = {
      "id",         "file",          "line",        "score",        "killed",
      "survived",   "timeouts_excluded", "covered", "sloc",         "bad_asserts",
      "exceptions", "magic_numbers", "modifications", "contributors", "expertise"};
  for (const Smell s : kAllSmells) header.emplace_back(SmellName(s));
  CsvRow(out, header);
  for (const auto& row : report.methods) {
    const auto& s = row.score;
    std::vector<std::string> f = {
        s.test_id,
        row.record.file,
        std::to_string(row.record.line_range.first),
        s.score ? FormatDouble(s.score->ToDouble()) : "",
        std::to_string(s.killed),
        std::to_string(s.survived),
        std::to_string(s.timeouts_excluded),
        std::to_string(s.covered),
        std::to_string(row.metrics.sloc),
        std::to_string(row.metrics.bad_asserts),
        std::to_string(row.metrics.exceptions),
        std::to_string(row.metrics.magic_numbers),
        row.evolution ? std::to_string(row.evolution->modifications) : "",
        row.evolution ? std::to_string(row.evolution->contributors) : "",
        row.evolution && row.evolution->expertise
            ? FormatDouble(row.evolution->expertise->ToDouble())
            : ""};
    for (const Smell smell : kAllSmells) f.emplace_back(row.smells.Has(smell) ? "true" : "false");
    CsvRow(out, f);
  }
  return out;
}

std::string RenderMutantsCsv(const StudyReport& report) {
  std::string out;
  CsvRow(out, {"id", "operator", "file", "line", "status", "killing_tests"});
  for (const auto& row : report.mutants) {
    std::string killers;
    for (const auto& t : row.killing_tests) {
      if (!killers.empty()) killers += ';';
      killers += t;
    }
    CsvRow(out, {std::to_string(row.mutant.id), row.mutant.operator_id, row.mutant.file,
                 std::to_string(row.mutant.line), std::string(MutantStatusName(row.status)),
                 killers});
  }
  return out;
}

std::string RenderStudyJson(const StudyReport& report) {
  ojson doc;
  doc["format"] = "mutascope-study/1";
  ojson suite;
  if (report.suite) {
    suite["killed"] = report.suite->killed;
    suite["generated"] = report.suite->generated;
    suite["score"] = report.suite->score.ToDouble();
    suite["score_exact"] = report.suite->score.ToString();
  } else {
    suite["killed"] = 0;
    suite["generated"] = 0;
    suite["score"] = nullptr;
    suite["score_exact"] = nullptr;
  }
  std::map<std::string, std::int64_t> status_counts;
  for (auto s : {MutantStatus::kKilledFailure, MutantStatus::kKilledError,
                 MutantStatus::kKilledTimeout, MutantStatus::kSurvived,
                 MutantStatus::kUncovered}) {
    status_counts[std::string(MutantStatusName(s))] = 0;
  }
  for (const auto& m : report.mutants) ++status_counts[std::string(MutantStatusName(m.status))];
  suite["statuses"] = status_counts;
  doc["suite"] = std::move(suite);
  doc["legend"] = {
      {"suite_kill", "a mutant is killed by a failure, an error or a time-out"},
      {"method_kill",
       "a test kills a mutant by failure or error; time-outs are excluded from the "
       "method score numerator and denominator"},
      {"effect_size",
       "|d| < 0.01 Negligible, < 0.2 Very Small, < 0.5 Small, < 0.8 Medium, < 1.2 "
       "Large, < 2.0 Very Large, otherwise Huge"}};

  ojson selection;
  selection["tests"] = report.test_count;
  selection["selected"] = report.methods.size();
  selection["undefined_score_excluded"] = Strings(report.undefined_score_tests);
  selection["unresolved_excluded"] = Strings(report.unresolved_tests);
  selection["skipped_excluded"] = Strings(report.skipped_tests);
  selection["nested_included"] = Strings(report.nested_tests);
  doc["selection"] = std::move(selection);

  ojson groups;
  if (report.groups) {
    const auto& g = *report.groups;
    groups["k"] = g.k;
    groups["requested_k"] = g.requested_k;
    groups["seed"] = g.seed;
    groups["random_policy"] = g.overlap ? "overlap" : "disjoint";
    groups["best"] = Strings(g.best);
    groups["random"] = Strings(g.random);
    groups["worst"] = Strings(g.worst);
    groups["warnings"] = Strings(g.warnings);
  } else {
    groups = nullptr;
  }
  doc["groups"] = std::move(groups);
  doc["groups_error"] = report.groups_error.empty() ? ojson(nullptr) : ojson(report.groups_error);

  doc["alpha"] = report.alpha;
  ojson comps = ojson::array();
  for (const auto& c : report.comparisons) {
    ojson jc;
    jc["metric"] = c.metric;
    jc["medians"] = {{"best", Nullable(c.median_best)},
                     {"random", Nullable(c.median_random)},
                     {"worst", Nullable(c.median_worst)}};
    if (c.mann_whitney) {
      jc["mann_whitney_u"] = c.mann_whitney->u;
      jc["u_best"] = c.mann_whitney->u_a;
      jc["u_worst"] = c.mann_whitney->u_b;
      jc["p_value"] = c.mann_whitney->p_value;
      jc["exact"] = c.mann_whitney->exact;
      jc["significant"] = c.mann_whitney->p_value < report.alpha;
    } else {
      jc["mann_whitney_u"] = nullptr;
      jc["u_best"] = nullptr;
      jc["u_worst"] = nullptr;
      jc["p_value"] = nullptr;
      jc["exact"] = nullptr;
      jc["significant"] = nullptr;
    }
    jc["cohens_d"] = Nullable(c.cohens_d);
    jc["effect_label"] = c.effect ? ojson(EffectLabelName(*c.effect)) : ojson(nullptr);
    jc["note"] = c.note.empty() ? ojson(nullptr) : ojson(c.note);
    comps.push_back(std::move(jc));
  }
  doc["comparisons"] = std::move(comps);

  ojson prev = ojson::array();
  for (const auto& p : report.prevalence) {
    ojson jp;
    jp["smell"] = SmellName(p.smell);
    jp["best_count"] = p.best_count;
    jp["worst_count"] = p.worst_count;
    jp["best_percent"] = p.best_share ? ojson(p.best_share->ToDouble() * 100) : ojson(nullptr);
    jp["worst_percent"] = p.worst_share ? ojson(p.worst_share->ToDouble() * 100) : ojson(nullptr);
    jp["no_occurrences"] = !p.best_share.has_value();
    prev.push_back(std::move(jp));
  }
  doc["smell_prevalence"] = std::move(prev);
  doc["history"] = {{"available", report.history_available},
                    {"expertise_aggregation", kExpertiseAggregation},
                    {"first_parent_only", true},
                    {"follows_renames", false},
                    {"note", report.history_note.empty() ? ojson(nullptr)
                                                         : ojson(report.history_note)}};
  return doc.dump(2) + "\n";
}

std::string RenderSummary(const StudyReport& report, std::string_view project_name) {
  std::ostringstream out;
  std::string score = "n/a";
  if (report.suite) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(0) << report.suite->score.ToDouble() * 100 << "% ("
      << report.suite->killed << "/" << report.suite->generated << ")";
    score = s.str();
  }
  out << std::left << std::setw(24) << "Project" << std::setw(8) << "Tests" << std::setw(10)
      << "Mutants" << std::setw(10) << "TM Runs" << "Score\n";
  out << std::left << std::setw(24) << project_name << std::setw(8) << report.test_count
      << std::setw(10) << report.mutants.size() << std::setw(10) << report.runs << score
      << "\n\n";
  std::map<MutantStatus, int> counts;
  for (const auto& m : report.mutants) ++counts[m.status];
  out << "Mutant status:\n";
  for (auto s : {MutantStatus::kKilledFailure, MutantStatus::kKilledError,
                 MutantStatus::kKilledTimeout, MutantStatus::kSurvived,
                 MutantStatus::kUncovered}) {
    out << "  " << std::setw(16) << MutantStatusName(s) << counts[s] << "\n";
  }
  out << "\nSelected test methods: " << report.methods.size() << " of " << report.test_count
      << "\n";
  if (report.groups) {
    out << "Group size: " << report.groups->k << " (best/random/worst)\n";
  } else if (!report.groups_error.empty()) {
    out << "Groups: " << report.groups_error << "\n";
  }
  out << "\nSuite kills count failures, errors and time-outs; method scores exclude "
         "time-outs.\n";
  return out.str();
}

void EmitReports(const StudyReport& report, const fs::path& dir,
                 std::string_view project_name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ReportIOError("cannot create " + dir.string() + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << body;
    if (!out) throw ReportIOError("cannot write " + (dir / name).string());
  };
  write("methods.csv", RenderMethodsCsv(report));
  write("mutants.csv", RenderMutantsCsv(report));
  write("study.json", RenderStudyJson(report));
  write("summary.txt", RenderSummary(report, project_name));
}

std::vector<std::string> ValidateStudyJson(std::string_view json_text) {
  std::vector<std::string> problems;
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    return {std::string("not JSON: ") + e.what()};
  }
  auto require = [&](const ojson& obj, const std::string& where, const std::string& key,
                     const std::function<bool(const ojson&)>& ok, const char* what) {
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back(where + "." + key + " missing");
    } else if (!ok(obj.at(key))) {
      problems.push_back(where + "." + key + " must be " + what);
    }
  };
  const auto is_num = [](const ojson& v) { return v.is_number(); };
  const auto is_num_or_null = [](const ojson& v) { return v.is_number() || v.is_null(); };
  const auto is_int = [](const ojson& v) { return v.is_number_integer(); };
  const auto is_str = [](const ojson& v) { return v.is_string(); };
  const auto is_str_or_null = [](const ojson& v) { return v.is_string() || v.is_null(); };
  const auto is_arr = [](const ojson& v) { return v.is_array(); };
  const auto is_obj = [](const ojson& v) { return v.is_object(); };
  const auto is_bool = [](const ojson& v) { return v.is_boolean(); };
  const auto is_str_arr = [](const ojson& v) {
    return v.is_array() && std::all_of(v.begin(), v.end(), [](const ojson& e) { return e.is_string(); });
  };

  if (!doc.is_object()) return {"document must be an object"};
  if (doc.value("format", "") != "mutascope-study/1") problems.push_back("format mismatch");
  require(doc, "$", "suite", is_obj, "an object");
  if (doc.contains("suite")) {
    const auto& s = doc["suite"];
    require(s, "suite", "killed", is_int, "an integer");
    require(s, "suite", "generated", is_int, "an integer");
    require(s, "suite", "score", is_num_or_null, "a number or null");
    require(s, "suite", "statuses", is_obj, "an object");
    if (s.is_object() && s.contains("score") && s["score"].is_number() &&
        (s["score"].get<double>() < 0 || s["score"].get<double>() > 1)) {
      problems.push_back("suite.score out of [0,1]");
    }
  }
  require(doc, "$", "legend", is_obj, "an object");
  require(doc, "$", "selection", is_obj, "an object");
  if (doc.contains("selection")) {
    const auto& s = doc["selection"];
    require(s, "selection", "tests", is_int, "an integer");
    require(s, "selection", "selected", is_int, "an integer");
    for (const char* k : {"undefined_score_excluded", "unresolved_excluded",
                          "skipped_excluded", "nested_included"}) {
      require(s, "selection", k, is_str_arr, "an array of strings");
    }
  }
  if (!doc.contains("groups")) {
    problems.push_back("$.groups missing");
  } else if (!doc["groups"].is_null()) {
    const auto& g = doc["groups"];
    require(g, "groups", "k", is_int, "an integer");
    require(g, "groups", "seed", is_int, "an integer");
    require(g, "groups", "random_policy", is_str, "a string");
    for (const char* k : {"best", "random", "worst", "warnings"}) {
      require(g, "groups", k, is_str_arr, "an array of strings");
    }
  }
  require(doc, "$", "alpha", is_num, "a number");
  require(doc, "$", "comparisons", is_arr, "an array");
  if (doc.contains("comparisons") && doc["comparisons"].is_array()) {
    for (const auto& c : doc["comparisons"]) {
      require(c, "comparison", "metric", is_str, "a string");
      require(c, "comparison", "medians", is_obj, "an object");
      require(c, "comparison", "p_value", is_num_or_null, "a number or null");
      require(c, "comparison", "cohens_d", is_num_or_null, "a number or null");
      require(c, "comparison", "effect_label", is_str_or_null, "a string or null");
      if (c.is_object() && c.contains("p_value") && c["p_value"].is_number()) {
        const double p = c["p_value"].get<double>();
        if (p < 0 || p > 1) problems.push_back("comparison.p_value out of [0,1]");
      }
    }
  }
  require(doc, "$", "smell_prevalence", is_arr, "an array");
  if (doc.contains("smell_prevalence") && doc["smell_prevalence"].is_array()) {
    for (const auto& p : doc["smell_prevalence"]) {
      require(p, "smell_prevalence", "smell", is_str, "a string");
      require(p, "smell_prevalence", "best_count", is_int, "an integer");
      require(p, "smell_prevalence", "worst_count", is_int, "an integer");
      require(p, "smell_prevalence", "best_percent", is_num_or_null, "a number or null");
      require(p, "smell_prevalence", "worst_percent", is_num_or_null, "a number or null");
      require(p, "smell_prevalence", "no_occurrences", is_bool, "a boolean");
    }
  }
  require(doc, "$", "history", is_obj, "an object");
  return problems;
}

}  // namespace mutascope
