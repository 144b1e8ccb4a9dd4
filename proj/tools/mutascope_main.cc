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

// Command-line entry point: `mutascope run` and `mutascope score`.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "mutascope/config.h"
#include "mutascope/error.h"
#include "mutascope/frontend.h"
#include "mutascope/log.h"
#include "mutascope/mutant.h"
#include "mutascope/orchestrator.h"
#include "mutascope/outcome_matrix.h"
#include "mutascope/project.h"
#include "mutascope/report.h"
#include "mutascope/workspace.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitError = 1;
constexpr int kExitRedSuite = 3;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> k;
  std::string report_dir = "mutascope-report";
};

mutascope::RunConfig LoadOrDefault(const CommonOptions& opts) {
  auto cfg = opts.config_path.empty() ? mutascope::RunConfig{}
                                      : mutascope::LoadConfig(opts.config_path);
  if (opts.seed) cfg.seed = *opts.seed;
  if (opts.k) cfg.k = *opts.k;
  return cfg;
}

mutascope::AnalysisOptions ToAnalysis(const mutascope::RunConfig& cfg) {
  mutascope::AnalysisOptions a;
  a.k = cfg.k;
  a.seed = cfg.seed;
  a.overlap = cfg.random_group_overlap;
  a.alpha = cfg.alpha;
  return a;
}

// Relative runner scripts must survive the change into a workspace copy.
mutascope::RunnerClient MakeRunner(const std::string& command_line) {
  auto argv = mutascope::RunnerClient::FromCommandLine(command_line).command();
  for (auto& word : argv) {
    std::error_code ec;
    if (word.find('/') != std::string::npos && fs::exists(word, ec)) {
      word = fs::absolute(word).lexically_normal().string();
    }
  }
  return mutascope::RunnerClient(std::move(argv));
}

void Report(const mutascope::OutcomeMatrix& matrix, const mutascope::Project& project,
            const mutascope::RunConfig& cfg, const fs::path& report_dir,
            const fs::path& workspace) {
  const auto report = mutascope::Analyze(matrix, project, cfg, ToAnalysis(cfg));
  mutascope::EmitReports(report, report_dir,
                         workspace.lexically_normal().filename().string().empty()
                             ? workspace.string()
                             : workspace.lexically_normal().filename().string());
  if (report.suite) {
    std::cerr << "suite score " << report.suite->killed << "/" << report.suite->generated
              << "; " << report.methods.size() << " test methods selected; reports in "
              << report_dir.string() << "\n";
  } else {
    std::cerr << "no mutants generated; reports in " << report_dir.string() << "\n";
  }
}

int Run(const std::string& workspace_arg, const std::string& runner_cmd, int jobs,
        bool resume, const CommonOptions& opts) {
  const fs::path workspace = fs::absolute(workspace_arg).lexically_normal();
  const auto cfg = LoadOrDefault(opts);
  const auto frontend = mutascope::MakeDefaultFrontend();
  const auto project = mutascope::ScanProject(workspace, cfg, *frontend);
  const auto ops = mutascope::SelectOperators(cfg.operators);
  const auto mutants = mutascope::GenerateMutants(project.ProductionFiles(), ops);
  std::cerr << "generated " << mutants.size() << " mutants\n";

  const auto runner = MakeRunner(runner_cmd);
  mutascope::BaselineOptions bopts;
  bopts.per_test_timeout = std::chrono::milliseconds(cfg.baseline_timeout_ms);
  const auto baseline = mutascope::RunBaseline(workspace, runner, bopts);
  std::cerr << "baseline green: " << baseline.size() << " tests\n";

  const fs::path report_dir = opts.report_dir;
  std::error_code ec;
  fs::create_directories(report_dir, ec);
  if (ec) throw mutascope::ReportIOError("cannot create " + report_dir.string());

  mutascope::ExecutionOptions eopts;
  eopts.jobs = jobs;
  eopts.timeout_factor = cfg.timeout_factor;
  eopts.timeout_constant_ms = cfg.timeout_constant_ms;
  eopts.journal = report_dir / "matrix.journal.jsonl";
  eopts.resume = resume;
  auto matrix = mutascope::ExecuteMatrix(workspace, mutants, baseline, runner, eopts);
  matrix.set_source_root(workspace.string());
  mutascope::WriteFileBytes(report_dir / "matrix.json", mutascope::SerializeMatrix(matrix));

  Report(matrix, project, cfg, report_dir, workspace);
  return 0;
}

int Score(const std::string& matrix_path, const std::string& workspace_arg,
          const CommonOptions& opts) {
  auto matrix = [&] {
    try {
      return mutascope::ParseMatrix(mutascope::ReadFileBytes(matrix_path));
    } catch (const std::invalid_argument& e) {
      throw mutascope::ConfigError(matrix_path + ": " + e.what());
    }
  }();
  const std::string root = workspace_arg.empty() ? matrix.source_root() : workspace_arg;
  if (root.empty()) {
    throw mutascope::ConfigError(
        "the matrix does not record its workspace; pass --workspace");
  }
  const fs::path workspace = fs::absolute(root).lexically_normal();
  const auto cfg = LoadOrDefault(opts);
  const auto frontend = mutascope::MakeDefaultFrontend();
  const auto project = mutascope::ScanProject(workspace, cfg, *frontend);
  Report(matrix, project, cfg, opts.report_dir, workspace);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Method-level mutation testing and test-quality study harness"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  std::string workspace, runner;
  int jobs = 1;
  bool resume = false;
  auto* run = app.add_subcommand("run", "Run baseline, mutants and reports");
  run->add_option("--workspace", workspace, "Project directory")->required();
  run->add_option("--runner", runner, "Runner command (whitespace-separated)")->required();
  run->add_option("--config", run_opts.config_path, "JSON configuration file");
  run->add_option("--jobs", jobs, "Parallel workers")->check(CLI::PositiveNumber);
  run->add_option("--seed", run_opts.seed, "Random group seed");
  run->add_option("--k", run_opts.k, "Group size")->check(CLI::PositiveNumber);
  run->add_option("--report-dir", run_opts.report_dir, "Output directory");
  run->add_flag("--resume", resume, "Reuse finished runs from the journal");

  CommonOptions score_opts;
  std::string matrix_path, score_workspace;
  auto* score = app.add_subcommand("score", "Recompute scores and study from a matrix");
  score->add_option("--matrix", matrix_path, "Persisted matrix.json")->required();
  score->add_option("--workspace", score_workspace,
                    "Project directory (defaults to the one recorded in the matrix)");
  score->add_option("--config", score_opts.config_path, "JSON configuration file");
  score->add_option("--seed", score_opts.seed, "Random group seed");
  score->add_option("--k", score_opts.k, "Group size")->check(CLI::PositiveNumber);
  score->add_option("--report-dir", score_opts.report_dir, "Output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return Run(workspace, runner, jobs, resume, run_opts);
    return Score(matrix_path, score_workspace, score_opts);
  } catch (const mutascope::RedSuiteError& e) {
    std::cerr << "error: red baseline suite: " << e.what() << "\n";
    return kExitRedSuite;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
