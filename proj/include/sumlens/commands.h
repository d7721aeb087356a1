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

#ifndef SUMLENS_COMMANDS_H_
#define SUMLENS_COMMANDS_H_

#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sumlens/concepts.h"
#include "sumlens/lexicon.h"
#include "sumlens/pipeline.h"
#include "sumlens/rouge.h"

namespace sumlens {

// Lexicon and stoplist named by a config; the stoplist falls back to the
// nine default generic types when no path is given.
struct Resources {
  Lexicon lexicon;
  SemanticTypeStoplist stoplist;
};
Resources LoadResources(const RunConfig& config);

// Sorted .json/.txt files directly inside `dir`. Throws kIoError when the
// directory is unreadable or holds no documents.
std::vector<std::string> ListCorpus(const std::string& dir);

// Writes `content` to `path`, or to `fallback` when path is empty.
void WriteOutput(const std::string& path, std::string_view content,
                 std::ostream& fallback);

// One-line JSON error object: {"error": <name>, "message": ..., ...}.
std::string ErrorJson(const std::exception& e);

// Runs `command`, printing ErrorJson to `err` on failure. Returns the exit
// code: 0 on success, 1 on a reported error.
int RunReportingErrors(const std::function<void()>& command, std::ostream& err);

struct SummarizeArgs {
  std::string input;
  std::string output;  // empty: stdout
  std::string report;  // optional JSON report path
};
void CmdSummarize(const SummarizeArgs& args, const RunConfig& config,
                  std::ostream& out);

enum class SystemKind { kBayes, kLead, kRandom };
std::optional<SystemKind> ParseSystemKind(std::string_view name);

// Name written to the system column: the strategy name for the Bayes
// summarizer, otherwise "lead" or "random".
std::string SystemLabel(SystemKind kind, const RunConfig& config);

// Seed used for the random baseline on one document of a batch.
std::uint64_t DocumentSeed(std::uint64_t seed, std::string_view doc_id);

struct BatchArgs {
  std::string corpus;
  std::string output;         // results CSV; empty: stdout
  std::string report;         // optional JSON run report
  std::string summaries_dir;  // optional; one <doc_id>.txt per document
  SystemKind system = SystemKind::kBayes;
  std::vector<RougeMetric> metrics = AllRougeMetrics();
  std::size_t threads = 0;  // 0: hardware concurrency
};
void CmdBatch(const BatchArgs& args, const RunConfig& config, std::ostream& out,
              std::ostream& err);

enum class ScoreColumn { kRecall, kPrecision, kF1 };
std::optional<ScoreColumn> ParseScoreColumn(std::string_view name);

struct CompareArgs {
  std::string results_a;
  std::string results_b;
  std::string output;  // empty: stdout
  RougeMetric metric = RougeMetric::kRouge1;
  ScoreColumn score = ScoreColumn::kF1;
  std::string system_a;  // required when a file holds several systems
  std::string system_b;
  double alpha = 0.05;
};
void CmdCompare(const CompareArgs& args, const RunConfig& config,
                std::ostream& out);

struct DistributionArgs {
  std::string corpus;
  std::string output;  // empty: stdout
  TextSource source = TextSource::kBody;
};
void CmdDistribution(const DistributionArgs& args, const RunConfig& config,
                     std::ostream& out, std::ostream& err);

enum class BaselineKind { kLead, kRandom };
std::optional<BaselineKind> ParseBaselineKind(std::string_view name);

struct BaselineArgs {
  std::string input;
  std::string output;  // empty: stdout
  BaselineKind kind = BaselineKind::kLead;
};
// Uses config.compression_rate and config.seed.
void CmdBaseline(const BaselineArgs& args, const RunConfig& config,
                 std::ostream& out);

struct MineArgs {
  std::string input;
  std::string output;  // empty: stdout
};
// Frequent itemsets of the generic-filtered body concepts at config.phi, as
// CSV "items,support_count,support" with items joined by ';'.
void CmdMine(const MineArgs& args, const RunConfig& config, std::ostream& out);

}  // namespace sumlens

#endif  // SUMLENS_COMMANDS_H_
