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

// Paired Wilcoxon signed-rank test.

#ifndef SUMLENS_WILCOXON_H_
#define SUMLENS_WILCOXON_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sumlens {

// Per-document scores of two systems on the same documents.
struct PairedScores {
  std::vector<std::string> doc_ids;
  std::vector<double> a;
  std::vector<double> b;
};

enum class WilcoxonMethod {
  kAuto,    // exact for up to kExactLimit nonzero differences, else normal
  kNormal,  // tie- and continuity-corrected normal approximation
  kExact,   // exact null distribution of the (tie-averaged) rank sum
};

inline constexpr std::size_t kExactLimit = 12;

enum class Direction { kNone, kA, kB };
std::string_view DirectionName(Direction d);

struct WilcoxonResult {
  double w_plus = 0.0;   // rank sum of differences a - b > 0
  double w_minus = 0.0;  // rank sum of differences a - b < 0
  double z = 0.0;        // normal approximation; positive favours A
  double p_two_sided = 1.0;
  bool significant = false;  // p < alpha
  bool degenerate = false;   // every difference is zero
  Direction direction = Direction::kNone;
  std::size_t n_nonzero = 0;
  WilcoxonMethod method = WilcoxonMethod::kNormal;  // method actually used
};

// Zero differences are dropped and tied magnitudes share average ranks.
// All-zero input yields a degenerate result with p = 1. Throws
// Error(kInvalidParameter) on length mismatch and Error(kInsufficientData)
// when fewer than 6 differences are nonzero.
WilcoxonResult WilcoxonSignedRank(std::span<const double> a,
                                  std::span<const double> b,
                                  WilcoxonMethod method = WilcoxonMethod::kAuto,
                                  double alpha = 0.05);

WilcoxonResult WilcoxonSignedRank(const PairedScores& pairs,
                                  WilcoxonMethod method = WilcoxonMethod::kAuto,
                                  double alpha = 0.05);

}  // namespace sumlens

#endif  // SUMLENS_WILCOXON_H_
