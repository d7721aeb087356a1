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

// ROUGE overlap metrics against a reference summary.
//
// Inputs are token sequences (lowercased alphanumeric tokens, no stemming, no
// stopword removal). All counts are clipped multiset overlaps. F1 is the
// harmonic mean of recall and precision.

#ifndef SUMLENS_ROUGE_H_
#define SUMLENS_ROUGE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumlens {

enum class RougeMetric { kRouge1, kRouge2, kRougeW12, kRougeSU4 };

// "r1", "r2", "rw12", "rsu4".
std::string_view RougeMetricName(RougeMetric m);
std::optional<RougeMetric> ParseRougeMetric(std::string_view name);
std::vector<RougeMetric> AllRougeMetrics();

struct RougeScores {
  RougeMetric metric = RougeMetric::kRouge1;
  double recall = 0.0;
  double precision = 0.0;
  double f1 = 0.0;
  // Set when the reference is too short for the metric; scores are then 0.
  std::optional<std::string> error;

  bool ok() const { return !error.has_value(); }
};

using Tokens = std::span<const std::string>;

// n must be 1 or 2.
RougeScores RougeN(Tokens candidate, Tokens reference, int n);

// Skip-bigrams (i < j with at most max_skip tokens between) plus unigrams.
RougeScores RougeSU(Tokens candidate, Tokens reference,
                    std::size_t max_skip = 4);

// Weighted LCS with f(k) = k^weight_exponent. weight_exponent must be >= 1.
RougeScores RougeW(Tokens candidate, Tokens reference,
                   double weight_exponent = 1.2);

// Raw weighted-LCS value; exposed for tests and diagnostics.
double WeightedLcs(Tokens x, Tokens y, double weight_exponent);

RougeScores ComputeRouge(RougeMetric metric, Tokens candidate, Tokens reference);

// Best (by F1) score over several references. Errors only when every
// reference errors.
RougeScores ComputeRougeMultiReference(
    RougeMetric metric, Tokens candidate,
    std::span<const std::vector<std::string>> references);

}  // namespace sumlens

#endif  // SUMLENS_ROUGE_H_
