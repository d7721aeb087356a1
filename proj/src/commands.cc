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

#include "sumlens/commands.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sumlens/baselines.h"
#include "sumlens/corpus_stats.h"
#include "sumlens/csv.h"
#include "sumlens/error.h"
#include "sumlens/itemsets.h"
#include "sumlens/wilcoxon.h"

namespace sumlens {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr std::string_view kResultsHeader =
    "doc_id,system,metric,recall,precision,f1";
constexpr std::string_view kMeanDocId = "MEAN";

std::string Stem(const std::string& path) {
  return fs::path(path).stem().string();
}

std::vector<std::string> JoinTokens(const std::vector<Sentence>& sentences,
                                    const std::vector<std::size_t>* subset) {
  std::vector<std::string> out;
  auto append = [&out](const Sentence& s) {
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  };
  if (subset == nullptr) {
    for (const Sentence& s : sentences) append(s);
  } else {
    for (std::size_t i : *subset) append(sentences.at(i));
  }
  return out;
}

std::string ResultRow(std::string_view doc_id, std::string_view system,
                      std::string_view metric, const RougeScores* scores) {
  std::string row = CsvField(doc_id) + "," + CsvField(system) + "," +
                    CsvField(metric) + ",";
  if (scores != nullptr && scores->ok()) {
    row += FormatScore(scores->recall) + "," + FormatScore(scores->precision) +
           "," + FormatScore(scores->f1);
  } else {
    row += ",,";
  }
  return row;
}

json ErrorObject(const std::exception& e) {
  json j;
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    j["error"] = ErrorCodeName(err->code());
    if (const auto* parse = dynamic_cast<const ParseError*>(&e)) {
      j["byte_offset"] = parse->byte_offset();
    }
  } else if (dynamic_cast<const std::bad_alloc*>(&e) != nullptr) {
    j["error"] = "OutOfMemory";
  } else {
    j["error"] = "InternalError";
  }
  j["message"] = e.what();
  return j;
}

std::string WarningName(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return std::string(ErrorCodeName(err->code()));
  }
  return "InternalError";
}

// One document's contribution to the results table.
struct DocOutcome {
  std::string doc_id;
  std::optional<std::string> warning;
  std::vector<RougeScores> scores;  // parallel to the requested metrics
  std::string summary;
};

}  // namespace

Resources LoadResources(const RunConfig& config) {
  if (config.lexicon_path.empty()) {
    throw Error(ErrorCode::kInvalidParameter,
                "no lexicon given (set lexicon_path or --lexicon)");
  }
  Resources r;
  r.lexicon = LoadLexicon(config.lexicon_path);
  r.stoplist = config.stoplist_path.empty()
                   ? r.lexicon.generic_semantic_types
                   : LoadStoplist(config.stoplist_path);
  return r;
}

std::vector<std::string> ListCorpus(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIoError, "not a directory: " + dir);
  }
  std::vector<std::string> paths;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (ext == ".json" || ext == ".txt") paths.push_back(entry.path().string());
  }
  if (ec) throw Error(ErrorCode::kIoError, "cannot list " + dir);
  if (paths.empty()) {
    throw Error(ErrorCode::kIoError, "corpus holds no .json or .txt documents: " + dir);
  }
  std::sort(paths.begin(), paths.end());
  return paths;
}

void WriteOutput(const std::string& path, std::string_view content,
                 std::ostream& fallback) {
  if (path.empty()) {
    fallback << content;
    fallback.flush();
    if (!fallback) throw Error(ErrorCode::kIoError, "cannot write to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << content;
  file.close();
  if (!file) throw Error(ErrorCode::kIoError, "cannot write " + path);
}

std::string ErrorJson(const std::exception& e) { return ErrorObject(e).dump(); }

int RunReportingErrors(const std::function<void()>& command, std::ostream& err) {
  try {
    command();
    return 0;
  } catch (const std::exception& e) {
    err << ErrorJson(e) << '\n';
    return 1;
  }
}

void CmdSummarize(const SummarizeArgs& args, const RunConfig& config,
                  std::ostream& out) {
  config.Validate();
  const Document doc = LoadDocument(args.input);
  const Resources res = LoadResources(config);
  const LexiconMatcher matcher(res.lexicon);
  const SummarizeResult result = Summarize(doc, matcher, res.stoplist, config);
  std::string text = result.text;
  if (!text.empty()) text.push_back('\n');
  WriteOutput(args.output, text, out);
  if (!args.report.empty()) {
    WriteOutput(args.report, SummaryReport(doc, result, config).dump(2) + "\n",
                out);
  }
}

std::optional<SystemKind> ParseSystemKind(std::string_view name) {
  if (name == "bayes") return SystemKind::kBayes;
  if (name == "lead") return SystemKind::kLead;
  if (name == "random") return SystemKind::kRandom;
  return std::nullopt;
}

std::string SystemLabel(SystemKind kind, const RunConfig& config) {
  switch (kind) {
    case SystemKind::kBayes:
      return std::string(StrategyName(config.strategy));
    case SystemKind::kLead:
      return "lead";
    case SystemKind::kRandom:
      return "random";
  }
  return "unknown";
}

std::uint64_t DocumentSeed(std::uint64_t seed, std::string_view doc_id) {
  // FNV-1a over the id, mixed into the run seed.
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : doc_id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

void CmdBatch(const BatchArgs& args, const RunConfig& config, std::ostream& out,
              std::ostream& err) {
  config.Validate();
  if (args.metrics.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "no metrics requested");
  }
  const std::vector<std::string> paths = ListCorpus(args.corpus);
  const Resources res = LoadResources(config);
  const LexiconMatcher matcher(res.lexicon);
  const std::string system = SystemLabel(args.system, config);
  if (!args.summaries_dir.empty()) fs::create_directories(args.summaries_dir);

  std::vector<DocOutcome> outcomes(paths.size());
  std::mutex log_mutex;
  auto log = [&](const std::string& path, const json& detail) {
    json line = detail;
    line["file"] = path;
    std::lock_guard<std::mutex> lock(log_mutex);
    err << line.dump() << '\n';
  };

  auto process = [&](std::size_t i) {
    DocOutcome& o = outcomes[i];
    o.doc_id = Stem(paths[i]);
    Document doc;
    try {
      doc = LoadDocument(paths[i]);
      o.doc_id = doc.id;
    } catch (const std::exception& e) {
      o.warning = WarningName(e);
      log(paths[i], ErrorObject(e));
      return;
    }
    if (!doc.abstract_sentences || doc.abstract_sentences->empty()) {
      o.warning = "no_abstract";
      log(paths[i], {{"warning", "no_abstract"},
                     {"message", "document has no abstract to score against"}});
      return;
    }
    Summary summary;
    try {
      switch (args.system) {
        case SystemKind::kBayes:
          summary = Summarize(doc, matcher, res.stoplist, config)
                        .selection.summary;
          break;
        case SystemKind::kLead:
          summary = LeadBaseline(doc, config.compression_rate);
          break;
        case SystemKind::kRandom:
          summary = RandomBaseline(doc, config.compression_rate,
                                   DocumentSeed(config.seed, doc.id));
          break;
      }
    } catch (const std::exception& e) {
      o.warning = WarningName(e);
      log(paths[i], ErrorObject(e));
      return;
    }
    o.summary = GenerateSummary(summary, doc);
    const std::vector<std::string> candidate =
        JoinTokens(doc.body_sentences, &summary.selected);
    const std::vector<std::string> reference =
        JoinTokens(*doc.abstract_sentences, nullptr);
    for (RougeMetric m : args.metrics) {
      o.scores.push_back(ComputeRouge(m, candidate, reference));
    }
  };

  std::size_t threads = args.threads != 0
                            ? args.threads
                            : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, paths.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < paths.size(); i = next++) process(i);
    });
  }
  workers.clear();  // joins

  std::ostringstream csv;
  csv << kResultsHeader << '\n';
  std::vector<std::string> warnings;
  std::map<std::string, std::size_t> seen_ids;
  for (const DocOutcome& o : outcomes) {
    if (++seen_ids[o.doc_id] == 2) {
      log(o.doc_id, {{"warning", "duplicate_doc_id"},
                     {"message", "two corpus files share this document id"}});
    }
    if (o.warning) {
      csv << ResultRow(o.doc_id, system, "warning:" + *o.warning, nullptr)
          << '\n';
      warnings.push_back(o.doc_id + ": " + *o.warning);
      continue;
    }
    for (std::size_t k = 0; k < args.metrics.size(); ++k) {
      csv << ResultRow(o.doc_id, system, RougeMetricName(args.metrics[k]),
                       &o.scores[k])
          << '\n';
    }
    if (!args.summaries_dir.empty()) {
      std::string text = o.summary;
      if (!text.empty()) text.push_back('\n');
      WriteOutput((fs::path(args.summaries_dir) / (o.doc_id + ".txt")).string(),
                  text, out);
    }
  }

  json means = json::object();
  for (std::size_t k = 0; k < args.metrics.size(); ++k) {
    RougeScores mean;
    mean.metric = args.metrics[k];
    std::size_t n = 0;
    for (const DocOutcome& o : outcomes) {
      if (o.warning || !o.scores[k].ok()) continue;
      mean.recall += o.scores[k].recall;
      mean.precision += o.scores[k].precision;
      mean.f1 += o.scores[k].f1;
      ++n;
    }
    if (n > 0) {
      mean.recall /= static_cast<double>(n);
      mean.precision /= static_cast<double>(n);
      mean.f1 /= static_cast<double>(n);
    } else {
      mean.error = "no scored documents";
    }
    const std::string_view name = RougeMetricName(args.metrics[k]);
    csv << ResultRow(kMeanDocId, system, name, &mean) << '\n';
    means[std::string(name)] =
        n > 0 ? json{{"recall", mean.recall},
                     {"precision", mean.precision},
                     {"f1", mean.f1},
                     {"documents", n}}
              : json(nullptr);
  }
  WriteOutput(args.output, csv.str(), out);

  if (!args.report.empty()) {
    const json report = {
        {"config", ConfigToJson(config)},
        {"system", system},
        {"documents", paths.size()},
        {"warnings", warnings},
        {"means", means},
    };
    WriteOutput(args.report, report.dump(2) + "\n", out);
  }
}

std::optional<ScoreColumn> ParseScoreColumn(std::string_view name) {
  if (name == "recall") return ScoreColumn::kRecall;
  if (name == "precision") return ScoreColumn::kPrecision;
  if (name == "f1") return ScoreColumn::kF1;
  return std::nullopt;
}

namespace {

std::string_view ScoreColumnName(ScoreColumn c) {
  switch (c) {
    case ScoreColumn::kRecall:
      return "recall";
    case ScoreColumn::kPrecision:
      return "precision";
    case ScoreColumn::kF1:
      return "f1";
  }
  return "f1";
}

struct ScoreColumnTable {
  std::string system;
  std::map<std::string, double> by_doc;
};

ScoreColumnTable ReadScores(const std::string& path, RougeMetric metric,
                            ScoreColumn column, const std::string& system) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  const auto records = ReadCsv(in);
  if (records.empty()) {
    throw ParseError(path + ": empty results file", 0);
  }
  std::string header;
  for (std::size_t i = 0; i < records[0].size(); ++i) {
    header += (i ? "," : "") + records[0][i];
  }
  if (header != kResultsHeader) {
    throw ParseError(path + ": expected header " + std::string(kResultsHeader), 0);
  }
  const std::size_t col = 3 + static_cast<std::size_t>(column);
  const std::string_view metric_name = RougeMetricName(metric);
  ScoreColumnTable table;
  std::set<std::string> systems;
  std::map<std::string, std::map<std::string, double>> per_system;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& row = records[r];
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    if (row.size() != 6) {
      throw ParseError(path + ": row " + std::to_string(r + 1) +
                           " does not have 6 fields",
                       0);
    }
    if (row[0] == kMeanDocId || row[2] != metric_name) continue;
    if (!system.empty() && row[1] != system) continue;
    systems.insert(row[1]);
    if (row[col].empty()) continue;  // score undefined for this document
    double value = 0.0;
    try {
      std::size_t used = 0;
      value = std::stod(row[col], &used);
      if (used != row[col].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(path + ": bad score on row " + std::to_string(r + 1), 0);
    }
    if (!per_system[row[1]].emplace(row[0], value).second) {
      throw Error(ErrorCode::kInvalidParameter,
                  path + ": duplicate row for document " + row[0]);
    }
  }
  if (systems.size() > 1) {
    throw Error(ErrorCode::kInvalidParameter,
                path + " holds several systems; choose one with --system-a/--system-b");
  }
  if (!systems.empty()) {
    table.system = *systems.begin();
    table.by_doc = std::move(per_system[table.system]);
  }
  return table;
}

}  // namespace

void CmdCompare(const CompareArgs& args, const RunConfig& config,
                std::ostream& out) {
  if (!(args.alpha > 0.0 && args.alpha < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "alpha must lie in (0, 1)");
  }
  const ScoreColumnTable a =
      ReadScores(args.results_a, args.metric, args.score, args.system_a);
  const ScoreColumnTable b =
      ReadScores(args.results_b, args.metric, args.score, args.system_b);
  PairedScores pairs;
  std::size_t unpaired_a = 0;
  for (const auto& [doc, score] : a.by_doc) {
    const auto it = b.by_doc.find(doc);
    if (it == b.by_doc.end()) {
      ++unpaired_a;
      continue;
    }
    pairs.doc_ids.push_back(doc);
    pairs.a.push_back(score);
    pairs.b.push_back(it->second);
  }
  if (pairs.doc_ids.empty()) {
    throw Error(ErrorCode::kInvalidParameter,
                "the two results files share no scored document ids");
  }
  const WilcoxonResult w =
      WilcoxonSignedRank(pairs, WilcoxonMethod::kAuto, args.alpha);
  const json report = {
      {"status", w.degenerate ? "DegenerateTest" : "ok"},
      {"metric", RougeMetricName(args.metric)},
      {"score", ScoreColumnName(args.score)},
      {"system_a", a.system},
      {"system_b", b.system},
      {"n_pairs", pairs.doc_ids.size()},
      {"unpaired_a", unpaired_a},
      {"unpaired_b", b.by_doc.size() - pairs.doc_ids.size()},
      {"n_nonzero", w.n_nonzero},
      {"W", std::min(w.w_plus, w.w_minus)},
      {"w_plus", w.w_plus},
      {"w_minus", w.w_minus},
      {"z", w.z},
      {"p", w.p_two_sided},
      {"significant", w.significant},
      {"degenerate", w.degenerate},
      {"direction", DirectionName(w.direction)},
      {"method", w.method == WilcoxonMethod::kExact ? "exact" : "normal"},
      {"alpha", args.alpha},
      {"config", ConfigToJson(config)},
  };
  WriteOutput(args.output, report.dump(2) + "\n", out);
}

void CmdDistribution(const DistributionArgs& args, const RunConfig& config,
                     std::ostream& out, std::ostream& err) {
  const std::vector<std::string> paths = ListCorpus(args.corpus);
  const Resources res = LoadResources(config);
  const LexiconMatcher matcher(res.lexicon);
  std::vector<ConceptAnnotations> corpus;
  for (const std::string& path : paths) {
    try {
      const Document doc = LoadDocument(path);
      if (args.source == TextSource::kAbstract &&
          (!doc.abstract_sentences || doc.abstract_sentences->empty())) {
        err << json{{"warning", "no_abstract"}, {"file", path}}.dump() << '\n';
        continue;
      }
      corpus.push_back(ExtractConcepts(doc, matcher, args.source));
    } catch (const std::exception& e) {
      json line = ErrorObject(e);
      line["file"] = path;
      err << line.dump() << '\n';
    }
  }
  if (corpus.empty()) {
    throw Error(ErrorCode::kInsufficientData, "no document could be annotated");
  }
  std::ostringstream csv;
  WriteRankFrequencyCsv(ZipfTable(corpus), csv);
  WriteOutput(args.output, csv.str(), out);
}

std::optional<BaselineKind> ParseBaselineKind(std::string_view name) {
  if (name == "lead") return BaselineKind::kLead;
  if (name == "random") return BaselineKind::kRandom;
  return std::nullopt;
}

void CmdBaseline(const BaselineArgs& args, const RunConfig& config,
                 std::ostream& out) {
  if (!(config.compression_rate > 0.0 && config.compression_rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "compression_rate must lie in (0, 1]");
  }
  const Document doc = LoadDocument(args.input);
  const Summary summary =
      args.kind == BaselineKind::kLead
          ? LeadBaseline(doc, config.compression_rate)
          : RandomBaseline(doc, config.compression_rate, config.seed);
  std::string text = GenerateSummary(summary, doc);
  if (!text.empty()) text.push_back('\n');
  WriteOutput(args.output, text, out);
}

void CmdMine(const MineArgs& args, const RunConfig& config, std::ostream& out) {
  const Document doc = LoadDocument(args.input);
  const Resources res = LoadResources(config);
  const ConceptAnnotations pool =
      FilterGeneric(ExtractConcepts(doc, res.lexicon), res.stoplist);
  const auto itemsets = MineFrequentItemsets(BuildTransactions(pool), config.phi);
  std::ostringstream csv;
  csv << "items,support_count,support\n";
  for (const FrequentItemset& set : itemsets) {
    std::string items;
    for (std::size_t i = 0; i < set.items.size(); ++i) {
      items += (i ? ";" : "") + set.items[i];
    }
    csv << CsvField(items) << ',' << set.support_count << ','
        << FormatScore(set.support) << '\n';
  }
  WriteOutput(args.output, csv.str(), out);
}

}  // namespace sumlens
