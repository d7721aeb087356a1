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

#include "sumlens/baselines.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "sumlens/error.h"

namespace sumlens {
namespace {

std::size_t BaselineLength(const Document& doc, double rate) {
  if (!(rate > 0.0 && rate <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "baseline rate must lie in (0, 1]");
  }
  return std::min(SummaryLength(rate, doc.sentence_count()),
                  doc.sentence_count());
}

uint64_t Bounded(std::mt19937_64& engine, uint64_t range) {
  constexpr uint64_t kMax = std::numeric_limits<uint64_t>::max();
  const uint64_t limit = kMax - kMax % range;
  uint64_t x;
  do {
    x = engine();
  } while (x >= limit);
  return x % range;
}

}  // namespace

Summary LeadBaseline(const Document& doc, double rate) {
  Summary s;
  s.target_count = BaselineLength(doc, rate);
  s.selected.resize(s.target_count);
  std::iota(s.selected.begin(), s.selected.end(), std::size_t{0});
  return s;
}

Summary RandomBaseline(const Document& doc, double rate, std::uint64_t seed) {
  Summary s;
  s.target_count = BaselineLength(doc, rate);
  const std::size_t n = doc.sentence_count();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 engine(seed);
  for (std::size_t i = 0; i < s.target_count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(Bounded(engine, n - i));
    std::swap(order[i], order[j]);
  }
  s.selected.assign(order.begin(),
                    order.begin() + static_cast<std::ptrdiff_t>(s.target_count));
  std::sort(s.selected.begin(), s.selected.end());
  return s;
}

}  // namespace sumlens
