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

#ifndef SUMLENS_PIPELINE_H_
#define SUMLENS_PIPELINE_H_

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sumlens/bayes.h"
#include "sumlens/concepts.h"
#include "sumlens/document.h"
#include "sumlens/features.h"
#include "sumlens/lexicon.h"

namespace sumlens {

// Everything a run depends on besides its inputs.
struct RunConfig {
  Strategy strategy = Strategy::kItemset;
  ThresholdKind threshold_kind = ThresholdKind::kTheta3;
  double epsilon = -1.2;
  double log_base = std::numbers::e;
  double phi = 0.09;
  double compression_rate = 0.3;
  bool use_coefficients = true;
  bool redundancy_reduction = true;
  // Use every concept as a feature when the chosen strategy yields none.
  bool fallback_all = false;
  std::string lexicon_path;
  std::string stoplist_path;
  std::uint64_t seed = 0;

  // Throws kInvalidParameter on out-of-range values.
  void Validate() const;
};

// JSON object with the RunConfig field names as keys.
nlohmann::json ConfigToJson(const RunConfig& config);

// Overwrites the fields present in `j`. Unknown keys and wrongly typed values
// are kInvalidParameter errors.
void MergeConfigJson(const nlohmann::json& j, RunConfig& config);

// Reads a JSON config file and merges it into `config`.
void MergeConfigFile(const std::string& path, RunConfig& config);

// Dispatches on config.strategy. Throws kEmptyFeatureSet when the result is
// empty, unless fallback_all is set, in which case every concept becomes a
// feature and the returned set's strategy is kAll.
FeatureSet SelectFeatures(const ConceptAnnotations& ann,
                          const SemanticTypeStoplist& stoplist,
                          const RunConfig& config);

struct SummarizeResult {
  ConceptAnnotations annotations;
  FeatureSet features;
  std::vector<SentenceVector> vectors;
  SelectionResult selection;
  std::string text;
  std::vector<std::string> warnings;
};

SummarizeResult Summarize(const Document& doc, const ConceptExtractor& extractor,
                          const SemanticTypeStoplist& stoplist,
                          const RunConfig& config);

// Per-sentence log-odds and selection flags, the feature set, the effective
// configuration and any warnings.
nlohmann::json SummaryReport(const Document& doc, const SummarizeResult& result,
                             const RunConfig& config);

}  // namespace sumlens

#endif  // SUMLENS_PIPELINE_H_
