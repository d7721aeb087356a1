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

#include "sumlens/rouge.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "sumlens/error.h"

namespace sumlens {
namespace {

using Counts = std::unordered_map<std::string, std::size_t>;

constexpr char kSeparator = '\x1f';

std::string Key(const std::string& a, const std::string& b) {
  std::string key = a;
  key.push_back(kSeparator);
  key += b;
  return key;
}

Counts NGrams(Tokens tokens, int n) {
  Counts counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    counts[n == 1 ? tokens[i] : Key(tokens[i], tokens[i + 1])]++;
  }
  return counts;
}

Counts SkipBigramsWithUnigrams(Tokens tokens, std::size_t max_skip) {
  Counts counts;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    counts[tokens[i]]++;
    for (std::size_t j = i + 1; j < tokens.size() && j - i - 1 <= max_skip;
         ++j) {
      counts[Key(tokens[i], tokens[j])]++;
    }
  }
  return counts;
}

std::size_t Total(const Counts& c) {
  std::size_t total = 0;
  for (const auto& [key, n] : c) total += n;
  return total;
}

std::size_t ClippedOverlap(const Counts& candidate, const Counts& reference) {
  std::size_t overlap = 0;
  for (const auto& [key, n] : candidate) {
    auto it = reference.find(key);
    if (it != reference.end()) overlap += std::min(n, it->second);
  }
  return overlap;
}

double HarmonicMean(double r, double p) {
  return r + p > 0.0 ? 2.0 * r * p / (r + p) : 0.0;
}

RougeScores FromCounts(RougeMetric metric, const Counts& candidate,
                       const Counts& reference) {
  RougeScores s;
  s.metric = metric;
  const double overlap =
      static_cast<double>(ClippedOverlap(candidate, reference));
  const std::size_t ref_total = Total(reference);
  const std::size_t cand_total = Total(candidate);
  s.recall = ref_total ? overlap / static_cast<double>(ref_total) : 0.0;
  s.precision = cand_total ? overlap / static_cast<double>(cand_total) : 0.0;
  s.f1 = HarmonicMean(s.recall, s.precision);
  return s;
}

RougeScores Failed(RougeMetric metric, std::string message) {
  RougeScores s;
  s.metric = metric;
  s.error = std::move(message);
  return s;
}

}  // namespace

std::string_view RougeMetricName(RougeMetric m) {
  switch (m) {
    case RougeMetric::kRouge1:
      return "r1";
    case RougeMetric::kRouge2:
      return "r2";
    case RougeMetric::kRougeW12:
      return "rw12";
    case RougeMetric::kRougeSU4:
      return "rsu4";
  }
  return "unknown";
}

std::optional<RougeMetric> ParseRougeMetric(std::string_view name) {
  for (RougeMetric m : AllRougeMetrics()) {
    if (RougeMetricName(m) == name) return m;
  }
  return std::nullopt;
}

std::vector<RougeMetric> AllRougeMetrics() {
  return {RougeMetric::kRouge1, RougeMetric::kRouge2, RougeMetric::kRougeW12,
          RougeMetric::kRougeSU4};
}

RougeScores RougeN(Tokens candidate, Tokens reference, int n) {
  if (n != 1 && n != 2) {
    throw Error(ErrorCode::kInvalidParameter, "ROUGE-N supports n = 1 or 2");
  }
  const RougeMetric metric = n == 1 ? RougeMetric::kRouge1 : RougeMetric::kRouge2;
  if (reference.size() < static_cast<std::size_t>(n)) {
    return Failed(metric, "reference has fewer than " + std::to_string(n) +
                              " tokens");
  }
  return FromCounts(metric, NGrams(candidate, n), NGrams(reference, n));
}

RougeScores RougeSU(Tokens candidate, Tokens reference, std::size_t max_skip) {
  if (reference.empty()) {
    return Failed(RougeMetric::kRougeSU4, "reference is empty");
  }
  return FromCounts(RougeMetric::kRougeSU4,
                    SkipBigramsWithUnigrams(candidate, max_skip),
                    SkipBigramsWithUnigrams(reference, max_skip));
}

double WeightedLcs(Tokens x, Tokens y, double weight_exponent) {
  const auto f = [weight_exponent](double k) {
    return std::pow(k, weight_exponent);
  };
  const std::size_t m = x.size();
  const std::size_t n = y.size();
  // c: weighted score, w: length of the consecutive run ending at (i, j).
  std::vector<double> c((m + 1) * (n + 1), 0.0);
  std::vector<std::size_t> w((m + 1) * (n + 1), 0);
  auto at = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (x[i - 1] == y[j - 1]) {
        const std::size_t k = w[at(i - 1, j - 1)];
        c[at(i, j)] = c[at(i - 1, j - 1)] + f(static_cast<double>(k + 1)) -
                      f(static_cast<double>(k));
        w[at(i, j)] = k + 1;
      } else if (c[at(i - 1, j)] > c[at(i, j - 1)]) {
        c[at(i, j)] = c[at(i - 1, j)];
      } else {
        c[at(i, j)] = c[at(i, j - 1)];
      }
    }
  }
  return c[at(m, n)];
}

RougeScores RougeW(Tokens candidate, Tokens reference, double weight_exponent) {
  if (!(weight_exponent >= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "ROUGE-W exponent must be >= 1");
  }
  if (reference.empty() || candidate.empty()) {
    return Failed(RougeMetric::kRougeW12, "ROUGE-W needs nonempty inputs");
  }
  const double wlcs = WeightedLcs(candidate, reference, weight_exponent);
  const auto f = [weight_exponent](std::size_t k) {
    return std::pow(static_cast<double>(k), weight_exponent);
  };
  const double inverse = 1.0 / weight_exponent;
  RougeScores s;
  s.metric = RougeMetric::kRougeW12;
  s.recall = std::pow(wlcs / f(reference.size()), inverse);
  s.precision = std::pow(wlcs / f(candidate.size()), inverse);
  s.f1 = HarmonicMean(s.recall, s.precision);
  return s;
}

RougeScores ComputeRouge(RougeMetric metric, Tokens candidate,
                         Tokens reference) {
  switch (metric) {
    case RougeMetric::kRouge1:
      return RougeN(candidate, reference, 1);
    case RougeMetric::kRouge2:
      return RougeN(candidate, reference, 2);
    case RougeMetric::kRougeW12:
      return RougeW(candidate, reference, 1.2);
    case RougeMetric::kRougeSU4:
      return RougeSU(candidate, reference, 4);
  }
  return Failed(metric, "unknown metric");
}

RougeScores ComputeRougeMultiReference(
    RougeMetric metric, Tokens candidate,
    std::span<const std::vector<std::string>> references) {
  std::optional<RougeScores> best;
  RougeScores last_error = Failed(metric, "no references");
  for (const auto& reference : references) {
    RougeScores s = ComputeRouge(metric, candidate, reference);
    if (!s.ok()) {
      last_error = s;
      continue;
    }
    if (!best || s.f1 > best->f1) best = s;
  }
  return best ? *best : last_error;
}

}  // namespace sumlens
