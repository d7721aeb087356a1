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

#include "sumlens/features.h"

#include <cmath>

#include "sumlens/error.h"

namespace sumlens {

std::string_view StrategyName(Strategy s) {
  switch (s) {
    case Strategy::kAll:
      return "all";
    case Strategy::kGenericFiltered:
      return "generic_filtered";
    case Strategy::kFrequencyThreshold:
      return "freq_threshold";
    case Strategy::kHelmholtz:
      return "helmholtz";
    case Strategy::kItemset:
      return "itemset";
  }
  return "unknown";
}

std::optional<Strategy> ParseStrategy(std::string_view name) {
  if (name == "all") return Strategy::kAll;
  if (name == "generic" || name == "generic_filtered") {
    return Strategy::kGenericFiltered;
  }
  if (name == "freq_threshold") return Strategy::kFrequencyThreshold;
  if (name == "helmholtz") return Strategy::kHelmholtz;
  if (name == "itemset") return Strategy::kItemset;
  return std::nullopt;
}

std::string_view ThresholdKindName(ThresholdKind k) {
  switch (k) {
    case ThresholdKind::kTheta1:
      return "theta1";
    case ThresholdKind::kTheta2:
      return "theta2";
    case ThresholdKind::kTheta3:
      return "theta3";
  }
  return "unknown";
}

std::optional<ThresholdKind> ParseThresholdKind(std::string_view name) {
  if (name == "theta1") return ThresholdKind::kTheta1;
  if (name == "theta2") return ThresholdKind::kTheta2;
  if (name == "theta3") return ThresholdKind::kTheta3;
  return std::nullopt;
}

std::set<std::string> FeatureSet::ConceptIds() const {
  std::set<std::string> ids;
  for (const Feature& f : features) ids.insert(f.concepts.begin(), f.concepts.end());
  return ids;
}

FeatureSet SingletonFeatures(const ConceptAnnotations& ann, Strategy strategy) {
  FeatureSet fs;
  fs.strategy = strategy;
  for (const FrequencyRow& row : FrequencyTable(ann)) {
    Feature f;
    f.concepts = {row.concept_id};
    f.freq = row.sentence_count;
    fs.features.push_back(std::move(f));
  }
  RenumberFeatures(fs);
  return fs;
}

FeatureSet SelectAll(const ConceptAnnotations& ann) {
  return SingletonFeatures(ann, Strategy::kAll);
}

FeatureSet SelectGenericFiltered(const ConceptAnnotations& pool) {
  return SingletonFeatures(pool, Strategy::kGenericFiltered);
}

FrequencyMoments ComputeMoments(std::span<const std::size_t> freqs) {
  if (freqs.empty()) {
    throw Error(ErrorCode::kInvalidParameter,
                "threshold needs at least one concept frequency");
  }
  const double n = static_cast<double>(freqs.size());
  double sum = 0.0;
  for (std::size_t f : freqs) sum += static_cast<double>(f);
  const double mean = sum / n;
  double squares = 0.0;
  for (std::size_t f : freqs) {
    const double d = static_cast<double>(f) - mean;
    squares += d * d;
  }
  return {mean, std::sqrt(squares / n)};
}

double ThresholdValue(std::span<const std::size_t> freqs, ThresholdKind kind) {
  const FrequencyMoments m = ComputeMoments(freqs);
  switch (kind) {
    case ThresholdKind::kTheta1:
      return m.mean;
    case ThresholdKind::kTheta2:
      return m.mean + m.stddev;
    case ThresholdKind::kTheta3:
      return m.mean + 2.0 * m.stddev;
  }
  return m.mean;
}

FeatureSet FilterByFrequency(const ConceptAnnotations& pool, double threshold) {
  FeatureSet fs = SingletonFeatures(pool, Strategy::kFrequencyThreshold);
  std::erase_if(fs.features, [threshold](const Feature& f) {
    return static_cast<double>(f.freq) < threshold;
  });
  fs.parameters.threshold = threshold;
  RenumberFeatures(fs);
  return fs;
}

FeatureSet SelectByThreshold(const ConceptAnnotations& pool,
                             ThresholdKind kind) {
  std::vector<std::size_t> freqs;
  for (const auto& [id, stats] : pool.concepts()) {
    freqs.push_back(stats.sentence_count);
  }
  if (freqs.empty()) {
    FeatureSet fs;
    fs.strategy = Strategy::kFrequencyThreshold;
    fs.parameters.threshold_kind = kind;
    return fs;
  }
  FeatureSet fs = FilterByFrequency(pool, ThresholdValue(freqs, kind));
  fs.parameters.threshold_kind = kind;
  return fs;
}

void RenumberFeatures(FeatureSet& fs) {
  for (std::size_t i = 0; i < fs.features.size(); ++i) fs.features[i].id = i;
}

}  // namespace sumlens
