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

#include "sumlens/helmholtz.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>

#include "sumlens/error.h"

namespace sumlens {
namespace {

__extension__ using Uint128 = unsigned __int128;
__extension__ using Int128 = __int128;

// Exact C(k, m) when it fits in 64 bits.
std::optional<std::uint64_t> Binomial(std::size_t k, std::size_t m) {
  m = std::min(m, k - m);
  Uint128 c = 1;
  for (std::size_t i = 0; i < m; ++i) {
    // c * (k - i) / (i + 1) stays integral at every step.
    c = c * (k - i) / (i + 1);
    if (c > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(c);
}

// Exact n^e when it fits in 64 bits.
std::optional<std::uint64_t> Power(std::size_t n, std::size_t e) {
  Uint128 p = 1;
  for (std::size_t i = 0; i < e; ++i) {
    p *= n;
    if (p > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(p);
}

double LogBinomial(std::size_t k, std::size_t m) {
  if (const auto c = Binomial(k, m)) return std::log(static_cast<double>(*c));
  const double kd = static_cast<double>(k);
  const double md = static_cast<double>(m);
  return std::lgamma(kd + 1.0) - std::lgamma(md + 1.0) -
         std::lgamma(kd - md + 1.0);
}

}  // namespace

double LogNfa(std::size_t k, std::size_t m, std::size_t n) {
  if (m == 0 || m > k) {
    throw Error(ErrorCode::kDomainError,
                "NFA requires 1 <= m <= k (k=" + std::to_string(k) +
                    ", m=" + std::to_string(m) + ")");
  }
  if (n == 0) throw Error(ErrorCode::kDomainError, "NFA requires N >= 1");
  const auto c = Binomial(k, m);
  const auto p = Power(n, m - 1);
  if (c && p) {
    // Both exact: take the log of the ratio directly so that NFA values at or
    // near 1 keep full relative precision.
    const double diff = static_cast<double>(static_cast<Int128>(*c) -
                                            static_cast<Int128>(*p));
    const double denom = static_cast<double>(*p);
    if (std::abs(diff) < 0.5 * denom) return std::log1p(diff / denom);
    return std::log(static_cast<double>(*c)) - std::log(denom);
  }
  return LogBinomial(k, m) -
         static_cast<double>(m - 1) * std::log(static_cast<double>(n));
}

double Meaning(std::size_t k, std::size_t m, std::size_t n, double log_base) {
  if (!(log_base > 0.0) || log_base == 1.0) {
    throw Error(ErrorCode::kInvalidParameter, "log base must be > 0 and != 1");
  }
  const double log_nfa = LogNfa(k, m, n);
  if (log_nfa == 0.0) return 0.0;
  return -log_nfa / (static_cast<double>(m) * std::log(log_base));
}

const ConceptMeaning* MeaningReport::Find(const std::string& concept_id) const {
  auto it = std::lower_bound(
      concepts.begin(), concepts.end(), concept_id,
      [](const ConceptMeaning& c, const std::string& id) {
        return c.concept_id < id;
      });
  return it != concepts.end() && it->concept_id == concept_id ? &*it : nullptr;
}

MeaningReport ComputeMeaning(const ConceptAnnotations& pool, double log_base) {
  MeaningReport report;
  const std::size_t total = pool.total_occurrences();
  if (total == 0) return report;
  const std::vector<std::size_t> paragraph_totals = pool.ParagraphTotals();

  for (const auto& [id, stats] : pool.concepts()) {
    ConceptMeaning cm;
    cm.concept_id = id;
    bool first = true;
    for (const auto& [paragraph, m] : stats.per_paragraph_counts) {
      const std::size_t b = paragraph_totals[paragraph];
      if (b == 0) continue;
      const double value = Meaning(stats.occurrence_count, m, total / b, log_base);
      cm.per_paragraph[paragraph] = value;
      cm.doc_meaning = first ? value : std::max(cm.doc_meaning, value);
      first = false;
    }
    report.concepts.push_back(std::move(cm));
  }
  return report;
}

FeatureSet MeaningfulFeatures(const ConceptAnnotations& pool, double epsilon,
                              double log_base) {
  const MeaningReport report = ComputeMeaning(pool, log_base);
  FeatureSet fs = SingletonFeatures(pool, Strategy::kHelmholtz);
  for (Feature& f : fs.features) {
    f.score = report.Find(f.concepts.front())->doc_meaning;
  }
  std::erase_if(fs.features,
                [epsilon](const Feature& f) { return !(*f.score > epsilon); });
  fs.parameters.epsilon = epsilon;
  fs.parameters.log_base = log_base;
  RenumberFeatures(fs);
  return fs;
}

}  // namespace sumlens
