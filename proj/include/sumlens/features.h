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

#ifndef SUMLENS_FEATURES_H_
#define SUMLENS_FEATURES_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sumlens/concepts.h"

namespace sumlens {

enum class Strategy {
  kAll,                 // every distinct concept
  kGenericFiltered,     // every concept outside the generic semantic types
  kFrequencyThreshold,  // generic-filtered, then freq >= theta
  kHelmholtz,           // generic-filtered, then meaning > epsilon
  kItemset,             // frequent concept itemsets
};

enum class ThresholdKind { kTheta1, kTheta2, kTheta3 };

std::string_view StrategyName(Strategy s);
// Accepts the names above plus "generic" for kGenericFiltered.
std::optional<Strategy> ParseStrategy(std::string_view name);
std::string_view ThresholdKindName(ThresholdKind k);
std::optional<ThresholdKind> ParseThresholdKind(std::string_view name);

// A classification feature: one concept, or a conjunction of concepts for
// itemset features. `freq` is the number of sentences in which the feature is
// present.
struct Feature {
  std::size_t id = 0;
  std::vector<std::string> concepts;  // sorted, unique, nonempty
  std::size_t freq = 0;
  std::optional<double> score;  // meaning value or itemset support
};

struct FeatureParameters {
  std::optional<ThresholdKind> threshold_kind;
  std::optional<double> threshold;
  std::optional<double> epsilon;
  std::optional<double> log_base;
  std::optional<double> phi;
};

struct FeatureSet {
  Strategy strategy = Strategy::kAll;
  FeatureParameters parameters;
  std::vector<Feature> features;

  bool empty() const { return features.empty(); }
  std::size_t size() const { return features.size(); }
  // Union of the concepts of all features.
  std::set<std::string> ConceptIds() const;
};

// Singleton features, one per concept of `ann`, ordered by descending
// sentence count then concept id. `score` is left empty.
FeatureSet SingletonFeatures(const ConceptAnnotations& ann, Strategy strategy);

FeatureSet SelectAll(const ConceptAnnotations& ann);

// `pool` must already be generic-filtered (see FilterGeneric).
FeatureSet SelectGenericFiltered(const ConceptAnnotations& pool);

struct FrequencyMoments {
  double mean = 0.0;
  double stddev = 0.0;  // population
};

// Throws Error(kInvalidParameter) on empty input.
FrequencyMoments ComputeMoments(std::span<const std::size_t> freqs);

// theta1 = mean, theta2 = mean + sd, theta3 = mean + 2 sd.
double ThresholdValue(std::span<const std::size_t> freqs, ThresholdKind kind);

// Keeps concepts with sentence count >= threshold.
FeatureSet FilterByFrequency(const ConceptAnnotations& pool, double threshold);

// Computes the threshold over the pool's sentence counts and filters.
FeatureSet SelectByThreshold(const ConceptAnnotations& pool, ThresholdKind kind);

// Re-numbers feature ids 0..n-1 in their current order.
void RenumberFeatures(FeatureSet& fs);

}  // namespace sumlens

#endif  // SUMLENS_FEATURES_H_
