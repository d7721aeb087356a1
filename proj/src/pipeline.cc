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

#include "sumlens/pipeline.h"

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "sumlens/error.h"
#include "sumlens/helmholtz.h"
#include "sumlens/itemsets.h"

namespace sumlens {
namespace {

using nlohmann::json;

[[noreturn]] void BadConfig(const std::string& message) {
  throw Error(ErrorCode::kInvalidParameter, "config: " + message);
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    BadConfig(std::string("wrong type for \"") + key + "\"");
  }
}

json FeatureToJson(const Feature& f) {
  json out = {{"id", f.id}, {"concepts", f.concepts}, {"freq", f.freq}};
  if (f.score) out["score"] = *f.score;
  return out;
}

}  // namespace

void RunConfig::Validate() const {
  if (!(compression_rate > 0.0 && compression_rate < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "compression_rate must lie in (0, 1)");
  }
  if (!(phi > 0.0 && phi <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "phi must lie in (0, 1]");
  }
  if (!std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidParameter, "epsilon must be finite");
  }
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw Error(ErrorCode::kInvalidParameter, "log_base must exceed 1");
  }
}

json ConfigToJson(const RunConfig& c) {
  return {
      {"strategy", StrategyName(c.strategy)},
      {"threshold_kind", ThresholdKindName(c.threshold_kind)},
      {"epsilon", c.epsilon},
      {"log_base", c.log_base},
      {"phi", c.phi},
      {"compression_rate", c.compression_rate},
      {"use_coefficients", c.use_coefficients},
      {"redundancy_reduction", c.redundancy_reduction},
      {"fallback_all", c.fallback_all},
      {"lexicon_path", c.lexicon_path},
      {"stoplist_path", c.stoplist_path},
      {"seed", c.seed},
  };
}

void MergeConfigJson(const json& j, RunConfig& c) {
  if (!j.is_object()) BadConfig("top level must be an object");
  for (const auto& [key, value] : j.items()) {
    const char* k = key.c_str();
    if (key == "strategy") {
      const auto s = ParseStrategy(Get<std::string>(value, k));
      if (!s) BadConfig("unknown strategy");
      c.strategy = *s;
    } else if (key == "threshold_kind") {
      const auto t = ParseThresholdKind(Get<std::string>(value, k));
      if (!t) BadConfig("unknown threshold_kind");
      c.threshold_kind = *t;
    } else if (key == "epsilon") {
      c.epsilon = Get<double>(value, k);
    } else if (key == "log_base") {
      c.log_base = Get<double>(value, k);
    } else if (key == "phi") {
      c.phi = Get<double>(value, k);
    } else if (key == "compression_rate") {
      c.compression_rate = Get<double>(value, k);
    } else if (key == "use_coefficients") {
      c.use_coefficients = Get<bool>(value, k);
    } else if (key == "redundancy_reduction") {
      c.redundancy_reduction = Get<bool>(value, k);
    } else if (key == "fallback_all") {
      c.fallback_all = Get<bool>(value, k);
    } else if (key == "lexicon_path") {
      c.lexicon_path = Get<std::string>(value, k);
    } else if (key == "stoplist_path") {
      c.stoplist_path = Get<std::string>(value, k);
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) BadConfig("seed must be a non-negative integer");
      c.seed = value.get<std::uint64_t>();
    } else {
      BadConfig("unknown key \"" + key + "\"");
    }
  }
}

void MergeConfigFile(const std::string& path, RunConfig& config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  json j;
  try {
    j = json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw ParseError("config " + path + ": " + e.what(), e.byte);
  }
  MergeConfigJson(j, config);
}

FeatureSet SelectFeatures(const ConceptAnnotations& ann,
                          const SemanticTypeStoplist& stoplist,
                          const RunConfig& config) {
  FeatureSet fs;
  const ConceptAnnotations pool = config.strategy == Strategy::kAll
                                      ? ann
                                      : FilterGeneric(ann, stoplist);
  if (!pool.empty()) {
    switch (config.strategy) {
      case Strategy::kAll:
        fs = SelectAll(ann);
        break;
      case Strategy::kGenericFiltered:
        fs = SelectGenericFiltered(pool);
        break;
      case Strategy::kFrequencyThreshold:
        fs = SelectByThreshold(pool, config.threshold_kind);
        break;
      case Strategy::kHelmholtz:
        fs = MeaningfulFeatures(pool, config.epsilon, config.log_base);
        break;
      case Strategy::kItemset:
        try {
          fs = ItemsetFeatures(ann, stoplist, config.phi);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kEmptyFeatureSet) throw;
        }
        break;
    }
  }
  if (fs.empty() && config.fallback_all) fs = SelectAll(ann);
  if (fs.empty()) {
    throw Error(ErrorCode::kEmptyFeatureSet,
                std::string("strategy ") +
                    std::string(StrategyName(config.strategy)) +
                    " selected no features");
  }
  return fs;
}

SummarizeResult Summarize(const Document& doc, const ConceptExtractor& extractor,
                          const SemanticTypeStoplist& stoplist,
                          const RunConfig& config) {
  config.Validate();
  SummarizeResult r;
  r.annotations = ExtractConcepts(doc, extractor, TextSource::kBody);
  r.features = SelectFeatures(r.annotations, stoplist, config);
  if (r.features.strategy != config.strategy) {
    r.warnings.push_back("strategy " +
                         std::string(StrategyName(config.strategy)) +
                         " selected no features; fell back to all concepts");
  }
  r.vectors = BuildVectors(r.annotations, r.features);
  SelectionOptions options;
  options.compression_rate = config.compression_rate;
  options.use_coefficients = config.use_coefficients;
  options.redundancy_reduction = config.redundancy_reduction;
  r.selection = SelectSentences(r.vectors, r.features, doc.sentence_count(),
                                options);
  r.warnings.insert(r.warnings.end(), r.selection.summary.warnings.begin(),
                    r.selection.summary.warnings.end());
  r.text = GenerateSummary(r.selection.summary, doc);
  return r;
}

json SummaryReport(const Document& doc, const SummarizeResult& r,
                   const RunConfig& config) {
  std::map<std::size_t, double> initial;
  for (const PorScore& s : r.selection.initial_scores) {
    initial[s.sentence_index] = s.log_odds;
  }
  std::map<std::size_t, std::size_t> pick_rank;
  for (std::size_t i = 0; i < r.selection.picks.size(); ++i) {
    pick_rank[r.selection.picks[i].sentence_index] = i;
  }

  json sentences = json::array();
  for (const Sentence& s : doc.body_sentences) {
    json row = {{"index", s.index}, {"selected", pick_rank.count(s.index) > 0}};
    const auto it = initial.find(s.index);
    row["log_odds"] = it == initial.end() ? json(nullptr) : json(it->second);
    const auto pick = pick_rank.find(s.index);
    if (pick != pick_rank.end()) {
      row["pick_order"] = pick->second;
      row["log_odds_at_pick"] = r.selection.picks[pick->second].log_odds;
    }
    sentences.push_back(std::move(row));
  }

  json features = json::array();
  for (const Feature& f : r.features.features) {
    features.push_back(FeatureToJson(f));
  }
  json parameters = json::object();
  const FeatureParameters& p = r.features.parameters;
  if (p.threshold_kind) parameters["threshold_kind"] = ThresholdKindName(*p.threshold_kind);
  if (p.threshold) parameters["threshold"] = *p.threshold;
  if (p.epsilon) parameters["epsilon"] = *p.epsilon;
  if (p.log_base) parameters["log_base"] = *p.log_base;
  if (p.phi) parameters["phi"] = *p.phi;

  return {
      {"doc_id", doc.id},
      {"config", ConfigToJson(config)},
      {"sentence_count", doc.sentence_count()},
      {"target_count", r.selection.summary.target_count},
      {"vector_count", r.vectors.size()},
      {"selected", r.selection.summary.selected},
      {"feature_set",
       {{"strategy", StrategyName(r.features.strategy)},
        {"parameters", parameters},
        {"features", features}}},
      {"sentences", sentences},
      {"warnings", r.warnings},
  };
}

}  // namespace sumlens
