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

#include "sumlens/wilcoxon.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "sumlens/error.h"

namespace sumlens {
namespace {

constexpr double kZeroTolerance = 1e-12;
constexpr std::size_t kMinNonzero = 6;

bool SameMagnitude(double x, double y) {
  return std::abs(x - y) <= kZeroTolerance * std::max({1.0, x, y});
}

struct SignedRanks {
  std::vector<long> doubled_ranks;  // 2 * average rank, always integral
  std::vector<bool> positive;
  std::vector<std::size_t> tie_sizes;
};

SignedRanks Rank(std::span<const double> a, std::span<const double> b) {
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (std::abs(d) > kZeroTolerance) diffs.push_back(d);
  }
  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::abs(diffs[x]) < std::abs(diffs[y]);
  });

  SignedRanks out;
  out.doubled_ranks.resize(diffs.size());
  out.positive.resize(diffs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i + 1;
    while (j < order.size() &&
           SameMagnitude(std::abs(diffs[order[i]]), std::abs(diffs[order[j]]))) {
      ++j;
    }
    // Ranks i+1..j averaged, doubled: (i + 1 + j).
    const long doubled = static_cast<long>(i + 1 + j);
    for (std::size_t k = i; k < j; ++k) {
      out.doubled_ranks[k] = doubled;
      out.positive[k] = diffs[order[k]] > 0;
    }
    out.tie_sizes.push_back(j - i);
    i = j;
  }
  return out;
}

double NormalPValue(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

// P(|W - E W| >= |observed - E W|) under random signs, by dynamic programming
// over doubled rank sums.
double ExactPValue(const SignedRanks& r, long observed_doubled) {
  const long total = std::accumulate(r.doubled_ranks.begin(),
                                     r.doubled_ranks.end(), 0L);
  std::vector<double> ways(static_cast<std::size_t>(total) + 1, 0.0);
  ways[0] = 1.0;
  long reach = 0;
  for (long rank : r.doubled_ranks) {
    for (long s = reach; s >= 0; --s) {
      if (ways[static_cast<std::size_t>(s)] != 0.0) {
        ways[static_cast<std::size_t>(s + rank)] +=
            ways[static_cast<std::size_t>(s)];
      }
    }
    reach += rank;
  }
  const long observed_gap = std::labs(2 * observed_doubled - total);
  double extreme = 0.0;
  double all = 0.0;
  for (long s = 0; s <= total; ++s) {
    const double w = ways[static_cast<std::size_t>(s)];
    all += w;
    if (std::labs(2 * s - total) >= observed_gap) extreme += w;
  }
  return std::min(1.0, extreme / all);
}

}  // namespace

std::string_view DirectionName(Direction d) {
  switch (d) {
    case Direction::kNone:
      return "none";
    case Direction::kA:
      return "A";
    case Direction::kB:
      return "B";
  }
  return "none";
}

WilcoxonResult WilcoxonSignedRank(std::span<const double> a,
                                  std::span<const double> b,
                                  WilcoxonMethod method, double alpha) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kInvalidParameter,
                "paired samples must have equal length");
  }
  const SignedRanks ranks = Rank(a, b);
  WilcoxonResult result;
  result.n_nonzero = ranks.doubled_ranks.size();
  if (result.n_nonzero == 0) {
    result.degenerate = true;
    result.p_two_sided = 1.0;
    return result;
  }
  if (result.n_nonzero < kMinNonzero) {
    throw Error(ErrorCode::kInsufficientData,
                "signed-rank test needs at least 6 nonzero differences, got " +
                    std::to_string(result.n_nonzero));
  }

  long w_plus_doubled = 0;
  long w_minus_doubled = 0;
  for (std::size_t i = 0; i < ranks.doubled_ranks.size(); ++i) {
    (ranks.positive[i] ? w_plus_doubled : w_minus_doubled) +=
        ranks.doubled_ranks[i];
  }
  result.w_plus = static_cast<double>(w_plus_doubled) / 2.0;
  result.w_minus = static_cast<double>(w_minus_doubled) / 2.0;

  const double n = static_cast<double>(result.n_nonzero);
  const double mean = n * (n + 1.0) / 4.0;
  double variance = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  for (std::size_t t : ranks.tie_sizes) {
    const double td = static_cast<double>(t);
    variance -= (td * td * td - td) / 48.0;
  }
  const double gap = result.w_plus - mean;
  const double corrected = std::max(std::abs(gap) - 0.5, 0.0);
  result.z = (gap < 0 ? -corrected : corrected) / std::sqrt(variance);

  if (method == WilcoxonMethod::kAuto) {
    method = result.n_nonzero <= kExactLimit ? WilcoxonMethod::kExact
                                             : WilcoxonMethod::kNormal;
  }
  result.method = method;
  result.p_two_sided = method == WilcoxonMethod::kExact
                           ? ExactPValue(ranks, w_plus_doubled)
                           : NormalPValue(result.z);
  result.significant = result.p_two_sided < alpha;
  if (w_plus_doubled > w_minus_doubled) {
    result.direction = Direction::kA;
  } else if (w_minus_doubled > w_plus_doubled) {
    result.direction = Direction::kB;
  }
  return result;
}

WilcoxonResult WilcoxonSignedRank(const PairedScores& pairs,
                                  WilcoxonMethod method, double alpha) {
  return WilcoxonSignedRank(pairs.a, pairs.b, method, alpha);
}

}  // namespace sumlens
