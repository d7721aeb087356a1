// Copyright 2026 The SumLens Authors.
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

// Command-line front end: sumlens <command> [flags].

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sumlens/commands.h"
#include "sumlens/error.h"
#include "sumlens/pipeline.h"

#ifndef SUMLENS_DEFAULT_LEXICON
#define SUMLENS_DEFAULT_LEXICON ""
#endif

namespace {

using sumlens::Error;
using sumlens::ErrorCode;
using sumlens::RunConfig;

// Flags that override RunConfig fields; unset flags leave the config alone.
struct ConfigFlags {
  std::string config_path;
  std::optional<std::string> strategy;
  std::optional<std::string> threshold_kind;
  std::optional<double> epsilon;
  std::optional<double> log_base;
  std::optional<double> phi;
  std::optional<double> compression_rate;
  std::optional<std::string> lexicon;
  std::optional<std::string> stoplist;
  std::optional<std::uint64_t> seed;
  bool no_coefficients = false;
  bool no_redundancy_reduction = false;
  bool fallback_all = false;
};

void AddConfigFlags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--config", f.config_path,
                  "JSON config file (after $SUMLENS_CONFIG, before flags)");
  cmd->add_option("--strategy", f.strategy,
                  "all | generic | freq_threshold | helmholtz | itemset");
  cmd->add_option("--threshold-kind", f.threshold_kind, "theta1 | theta2 | theta3");
  cmd->add_option("--epsilon", f.epsilon, "meaningfulness cut-off");
  cmd->add_option("--log-base", f.log_base, "logarithm base of the meaning score");
  cmd->add_option("--phi", f.phi, "minimum itemset support in (0, 1]");
  cmd->add_option("--compression-rate", f.compression_rate,
                  "summary length as a share of the body sentences");
  cmd->add_option("--lexicon", f.lexicon, "concept lexicon TSV");
  cmd->add_option("--stoplist", f.stoplist, "generic semantic types, one per line");
  cmd->add_option("--seed", f.seed, "random baseline seed");
  cmd->add_flag("--no-coefficients", f.no_coefficients,
                "drop the frequency coefficients from the ranking");
  cmd->add_flag("--no-redundancy-reduction", f.no_redundancy_reduction,
                "rank once instead of re-estimating after each pick");
  cmd->add_flag("--fallback-all", f.fallback_all,
                "use every concept when the strategy selects none");
}

RunConfig ResolveConfig(const ConfigFlags& f) {
  RunConfig c;
  if (const char* env = std::getenv("SUMLENS_CONFIG"); env != nullptr && *env) {
    sumlens::MergeConfigFile(env, c);
  }
  if (!f.config_path.empty()) sumlens::MergeConfigFile(f.config_path, c);
  if (f.strategy) {
    const auto s = sumlens::ParseStrategy(*f.strategy);
    if (!s) throw Error(ErrorCode::kInvalidParameter, "unknown strategy " + *f.strategy);
    c.strategy = *s;
  }
  if (f.threshold_kind) {
    const auto t = sumlens::ParseThresholdKind(*f.threshold_kind);
    if (!t) {
      throw Error(ErrorCode::kInvalidParameter,
                  "unknown threshold kind " + *f.threshold_kind);
    }
    c.threshold_kind = *t;
  }
  if (f.epsilon) c.epsilon = *f.epsilon;
  if (f.log_base) c.log_base = *f.log_base;
  if (f.phi) c.phi = *f.phi;
  if (f.compression_rate) c.compression_rate = *f.compression_rate;
  if (f.lexicon) c.lexicon_path = *f.lexicon;
  if (f.stoplist) c.stoplist_path = *f.stoplist;
  if (f.seed) c.seed = *f.seed;
  if (f.no_coefficients) c.use_coefficients = false;
  if (f.no_redundancy_reduction) c.redundancy_reduction = false;
  if (f.fallback_all) c.fallback_all = true;
  if (c.lexicon_path.empty()) c.lexicon_path = SUMLENS_DEFAULT_LEXICON;
  return c;
}

std::vector<sumlens::RougeMetric> ParseMetrics(const std::string& list) {
  if (list.empty() || list == "all") return sumlens::AllRougeMetrics();
  std::vector<sumlens::RougeMetric> metrics;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    const auto m = sumlens::ParseRougeMetric(name);
    if (!m) throw Error(ErrorCode::kInvalidParameter, "unknown metric " + name);
    metrics.push_back(*m);
  }
  return metrics;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Concept-based extractive summarization of biomedical articles"};
  app.require_subcommand(1);
  ConfigFlags flags;

  sumlens::SummarizeArgs summarize;
  CLI::App* summarize_cmd =
      app.add_subcommand("summarize", "summarize one document");
  summarize_cmd->add_option("--input", summarize.input, "document (.json or .txt)")
      ->required();
  summarize_cmd->add_option("--output", summarize.output, "summary file (default stdout)");
  summarize_cmd->add_option("--report", summarize.report, "JSON report file");
  AddConfigFlags(summarize_cmd, flags);

  sumlens::BatchArgs batch;
  std::string batch_system = "bayes";
  std::string batch_metrics = "all";
  CLI::App* batch_cmd =
      app.add_subcommand("batch", "summarize and score every document of a corpus");
  batch_cmd->add_option("--corpus", batch.corpus, "corpus directory")->required();
  batch_cmd->add_option("--output", batch.output, "results CSV (default stdout)");
  batch_cmd->add_option("--report", batch.report, "JSON run report");
  batch_cmd->add_option("--summaries", batch.summaries_dir,
                        "directory for per-document summaries");
  batch_cmd->add_option("--system", batch_system, "bayes | lead | random");
  batch_cmd->add_option("--metrics", batch_metrics,
                        "comma-separated subset of r1,r2,rw12,rsu4 (default all)");
  batch_cmd->add_option("--threads", batch.threads, "worker threads (0 = all cores)");
  AddConfigFlags(batch_cmd, flags);

  sumlens::CompareArgs compare;
  std::string compare_metric = "r1";
  std::string compare_score = "f1";
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "paired signed-rank test of two results files");
  compare_cmd->add_option("--results-a", compare.results_a, "results CSV of system A")
      ->required();
  compare_cmd->add_option("--results-b", compare.results_b, "results CSV of system B")
      ->required();
  compare_cmd->add_option("--metric,--metrics", compare_metric, "r1 | r2 | rw12 | rsu4");
  compare_cmd->add_option("--score", compare_score, "recall | precision | f1");
  compare_cmd->add_option("--system-a", compare.system_a, "system filter for file A");
  compare_cmd->add_option("--system-b", compare.system_b, "system filter for file B");
  compare_cmd->add_option("--alpha", compare.alpha, "significance level");
  compare_cmd->add_option("--output,--report", compare.output,
                          "comparison JSON (default stdout)");
  AddConfigFlags(compare_cmd, flags);

  sumlens::DistributionArgs distribution;
  std::string distribution_source = "body";
  CLI::App* distribution_cmd = app.add_subcommand(
      "distribution", "corpus rank-frequency table of concepts");
  distribution_cmd->add_option("--corpus", distribution.corpus, "corpus directory")
      ->required();
  distribution_cmd->add_option("--source", distribution_source, "body | abstract");
  distribution_cmd->add_option("--output", distribution.output, "CSV (default stdout)");
  AddConfigFlags(distribution_cmd, flags);

  sumlens::BaselineArgs baseline;
  std::string baseline_kind = "lead";
  CLI::App* baseline_cmd =
      app.add_subcommand("baseline", "lead or random baseline summary");
  baseline_cmd->add_option("--input", baseline.input, "document")->required();
  baseline_cmd->add_option("--kind", baseline_kind, "lead | random");
  baseline_cmd->add_option("--output", baseline.output, "summary file (default stdout)");
  AddConfigFlags(baseline_cmd, flags);

  sumlens::MineArgs mine;
  CLI::App* mine_cmd =
      app.add_subcommand("mine", "frequent concept itemsets of one document");
  mine_cmd->add_option("--input", mine.input, "document")->required();
  mine_cmd->add_option("--output", mine.output, "CSV (default stdout)");
  AddConfigFlags(mine_cmd, flags);

  CLI11_PARSE(app, argc, argv);

  return sumlens::RunReportingErrors(
      [&] {
        const RunConfig config = ResolveConfig(flags);
        if (summarize_cmd->parsed()) {
          sumlens::CmdSummarize(summarize, config, std::cout);
        } else if (batch_cmd->parsed()) {
          const auto system = sumlens::ParseSystemKind(batch_system);
          if (!system) {
            throw Error(ErrorCode::kInvalidParameter, "unknown system " + batch_system);
          }
          batch.system = *system;
          batch.metrics = ParseMetrics(batch_metrics);
          sumlens::CmdBatch(batch, config, std::cout, std::cerr);
        } else if (compare_cmd->parsed()) {
          const auto metric = sumlens::ParseRougeMetric(compare_metric);
          if (!metric) {
            throw Error(ErrorCode::kInvalidParameter, "unknown metric " + compare_metric);
          }
          const auto score = sumlens::ParseScoreColumn(compare_score);
          if (!score) {
            throw Error(ErrorCode::kInvalidParameter, "unknown score " + compare_score);
          }
          compare.metric = *metric;
          compare.score = *score;
          sumlens::CmdCompare(compare, config, std::cout);
        } else if (distribution_cmd->parsed()) {
          if (distribution_source == "body" || distribution_source == "bodies") {
            distribution.source = sumlens::TextSource::kBody;
          } else if (distribution_source == "abstract" ||
                     distribution_source == "abstracts") {
            distribution.source = sumlens::TextSource::kAbstract;
          } else {
            throw Error(ErrorCode::kInvalidParameter,
                        "unknown source " + distribution_source);
          }
          sumlens::CmdDistribution(distribution, config, std::cout, std::cerr);
        } else if (baseline_cmd->parsed()) {
          const auto kind = sumlens::ParseBaselineKind(baseline_kind);
          if (!kind) {
            throw Error(ErrorCode::kInvalidParameter, "unknown baseline " + baseline_kind);
          }
          baseline.kind = *kind;
          sumlens::CmdBaseline(baseline, config, std::cout);
        } else if (mine_cmd->parsed()) {
          sumlens::CmdMine(mine, config, std::cout);
        }
      },
      std::cerr);
}
