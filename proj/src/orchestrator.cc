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

#include "mutascope/orchestrator.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "mutascope/error.h"
#include "mutascope/log.h"
#include "mutascope/workspace.h"

namespace mutascope {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::vector<BaselineRecord> RunBaseline(const fs::path& workspace,
                                        const RunnerClient& runner,
                                        const BaselineOptions& options) {
  TempDir scratch("mutascope-baseline");
  const fs::path copy = scratch.path() / "ws";
  CopyWorkspace(workspace, copy);

  const auto ids = runner.Collect(copy, options.per_test_timeout);
  std::vector<BaselineRecord> records;
  records.reserve(ids.size());
  for (const auto& id : ids) {
    const auto result = runner.Baseline(copy, id, options.per_test_timeout);
    if (!result) {
      throw RedSuiteError(id, "baseline test timed out: " + id);
    }
    if (result->outcome != Outcome::kPass) {
      throw RedSuiteError(id, "baseline test " + id + " did not pass (" +
                                  std::string(OutcomeName(result->outcome)) + ")");
    }
    BaselineRecord rec;
    rec.test_id = id;
    rec.outcome = {result->outcome, result->duration_ms, {}};
    rec.covered = result->covered.value_or(CoverageMap{});
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<std::string> CoveringTests(const Mutant& m,
                                       const std::vector<BaselineRecord>& baseline) {
  std::vector<std::string> out;
  for (const auto& rec : baseline) {
    const auto it = rec.covered.find(m.file);
    if (it != rec.covered.end() && it->second.count(m.line) > 0) {
      out.push_back(rec.test_id);
    }
  }
  return out;
}

std::int64_t TimeoutThreshold(std::int64_t baseline_duration_ms,
                              const Rational& factor, std::int64_t constant_ms) {
  return CeilMultiply(factor, baseline_duration_ms) + constant_ms;
}

std::string PlanFingerprint(const std::vector<Mutant>& mutants,
                            const std::vector<BaselineRecord>& baseline) {
  // FNV-1a over a canonical text form of the plan.
  std::ostringstream canon;
  for (const auto& m : mutants) {
    canon << m.id << '\x1f' << m.operator_id << '\x1f' << m.file << '\x1f'
          << m.span.begin << '\x1f' << m.span.end << '\x1f' << m.replacement
          << '\x1e';
  }
  for (const auto& b : baseline) canon << b.test_id << '\x1e';
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon.str()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

struct Job {
  const Mutant* mutant;
  std::vector<std::string> tests;  // still to run
};

// Serializes all matrix writes and journal appends.
class Collector {
 public:
  Collector(OutcomeMatrix& matrix, std::ofstream* journal)
      : matrix_(matrix), journal_(journal) {}

  void Record(MutantId mutant, const std::string& test, const TestOutcome& outcome) {
    std::lock_guard<std::mutex> lock(mu_);
    matrix_.Set(mutant, test, outcome);
    if (journal_ != nullptr) {
      ojson line;
      line["type"] = "entry";
      line["mutant"] = mutant;
      line["test"] = test;
      line["outcome"] = OutcomeName(outcome.outcome);
      line["duration_ms"] = outcome.duration_ms;
      if (!outcome.diagnostic.empty()) line["diagnostic"] = outcome.diagnostic;
      *journal_ << line.dump() << '\n' << std::flush;
    }
  }

 private:
  std::mutex mu_;
  OutcomeMatrix& matrix_;
  std::ofstream* journal_;
};

std::map<OutcomeMatrix::Key, TestOutcome> LoadJournal(const fs::path& path,
                                                      const std::string& fingerprint) {
  std::map<OutcomeMatrix::Key, TestOutcome> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  bool header_ok = false;
  while (std::getline(in, line)) {
    ojson doc;
    try {
      doc = ojson::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      continue;  // torn final line from an interrupted run
    }
    if (doc.value("type", "") == "header") {
      header_ok = doc.value("fingerprint", "") == fingerprint;
      if (!header_ok) {
        throw WorkspaceError("journal " + path.string() +
                             " belongs to a different mutant/test plan");
      }
      continue;
    }
    if (!header_ok || doc.value("type", "") != "entry") continue;
    const auto outcome = ParseOutcome(doc.value("outcome", ""));
    if (!outcome) continue;
    TestOutcome to{*outcome, doc.value("duration_ms", std::int64_t{0}),
                   doc.value("diagnostic", std::string())};
    done[{doc.value("mutant", MutantId{0}), doc.value("test", std::string())}] =
        std::move(to);
  }
  return done;
}

}  // namespace

OutcomeMatrix ExecuteMatrix(const fs::path& workspace,
                            const std::vector<Mutant>& mutants,
                            const std::vector<BaselineRecord>& baseline,
                            const RunnerClient& runner,
                            const ExecutionOptions& options) {
  if (options.jobs < 1) throw ConfigError("jobs must be a positive integer");
  std::vector<MatrixTest> tests;
  std::map<std::string, std::int64_t> baseline_ms;
  for (const auto& b : baseline) {
    tests.push_back({b.test_id, b.outcome.duration_ms});
    baseline_ms[b.test_id] = b.outcome.duration_ms;
  }
  OutcomeMatrix matrix(mutants, tests);

  const std::string fingerprint = PlanFingerprint(mutants, baseline);
  std::map<OutcomeMatrix::Key, TestOutcome> done;
  if (options.journal && options.resume) {
    done = LoadJournal(*options.journal, fingerprint);
  }

  std::vector<Job> jobs;
  for (const auto& m : mutants) {
    Job job{&m, {}};
    for (auto& t : CoveringTests(m, baseline)) {
      const auto it = done.find({m.id, t});
      if (it != done.end()) {
        matrix.Set(m.id, t, it->second);
      } else {
        job.tests.push_back(std::move(t));
      }
    }
    if (!job.tests.empty()) jobs.push_back(std::move(job));
  }
  if (!done.empty()) {
    LogInfo("resumed " + std::to_string(matrix.entries().size()) +
            " entries from journal");
  }

  std::ofstream journal;
  if (options.journal) {
    const bool append = options.resume && !done.empty();
    journal.open(*options.journal, append ? std::ios::app : std::ios::trunc);
    if (!journal) {
      throw WorkspaceError("cannot open journal " + options.journal->string());
    }
    if (!append) {
      ojson header{{"type", "header"}, {"fingerprint", fingerprint}};
      journal << header.dump() << '\n' << std::flush;
    }
  }
  if (jobs.empty()) return matrix;

  Collector collector(matrix, options.journal ? &journal : nullptr);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&](int index) {
    try {
      TempDir scratch("mutascope-worker");
      const fs::path copy = scratch.path() / ("ws" + std::to_string(index));
      CopyWorkspace(workspace, copy);
      while (!stop.load()) {
        const std::size_t i = next.fetch_add(1);
        if (i >= jobs.size()) break;
        const Job& job = jobs[i];
        AppliedMutant applied = [&] {
          try {
            return ApplyMutant(copy, *job.mutant);
          } catch (const StaleMutantError& e) {
            throw WorkspaceError(e.what());
          }
        }();
        for (const auto& test : job.tests) {
          if (stop.load()) break;
          const std::int64_t threshold =
              TimeoutThreshold(baseline_ms.at(test), options.timeout_factor,
                               options.timeout_constant_ms);
          collector.Record(job.mutant->id, test,
                           runner.Run(copy, test, std::chrono::milliseconds(threshold)));
        }
        applied.Revert();
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mu);
      if (!failure) failure = std::current_exception();
      stop.store(true);
    }
  };

  const int workers = std::max(1, std::min<int>(options.jobs,
                                                static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker, w);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return matrix;
}

}  // namespace mutascope
