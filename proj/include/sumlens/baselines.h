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

#ifndef SUMLENS_BASELINES_H_
#define SUMLENS_BASELINES_H_

#include <cstdint>

#include "sumlens/bayes.h"
#include "sumlens/document.h"

namespace sumlens {

// First ceil(rate * n) body sentences. rate must lie in (0, 1].
Summary LeadBaseline(const Document& doc, double rate);

// ceil(rate * n) distinct body sentences, in document order.
//
// The draw is a partial Fisher-Yates shuffle of 0..n-1 driven by
// std::mt19937_64 seeded with `seed`; each bounded draw takes raw 64-bit
// outputs and rejects values at or above the largest multiple of the range,
// then reduces modulo the range. The engine's output sequence is fixed by the
// C++ standard, so selections are reproducible across platforms.
Summary RandomBaseline(const Document& doc, double rate, std::uint64_t seed);

}  // namespace sumlens

#endif  // SUMLENS_BASELINES_H_
