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

// Meaningfulness of concepts under the Helmholtz principle.
//
// A concept mentioned k times in the document and m times in paragraph P has
//
//   NFA(k, m, N) = C(k, m) / N^(m - 1),   N = floor(L / B)
//
// where L and B are the total concept mentions in the document and in P.
// Its meaning in P is -(1/m) log NFA, and its meaning in the document is the
// maximum over the paragraphs it occurs in. Everything is evaluated in log
// space; the binomial comes from lgamma.

#ifndef SUMLENS_HELMHOLTZ_H_
#define SUMLENS_HELMHOLTZ_H_

#include <cstddef>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "sumlens/concepts.h"
#include "sumlens/features.h"

namespace sumlens {

// Natural log of NFA. Throws Error(kDomainError) unless 1 <= m <= k, N >= 1.
double LogNfa(std::size_t k, std::size_t m, std::size_t n);

// -(1/m) * log_base(NFA).
double Meaning(std::size_t k, std::size_t m, std::size_t n,
               double log_base = std::numbers::e);

struct ConceptMeaning {
  std::string concept_id;
  std::map<std::size_t, double> per_paragraph;
  double doc_meaning = 0.0;  // max of per_paragraph
};

struct MeaningReport {
  std::vector<ConceptMeaning> concepts;  // ordered by concept id

  const ConceptMeaning* Find(const std::string& concept_id) const;
};

// Meaning of every concept of `pool` in every paragraph where it occurs.
MeaningReport ComputeMeaning(const ConceptAnnotations& pool,
                             double log_base = std::numbers::e);

// Concepts whose document meaning is strictly greater than `epsilon`, as
// singleton features (freq = sentence count, score = document meaning).
FeatureSet MeaningfulFeatures(const ConceptAnnotations& pool, double epsilon,
                              double log_base = std::numbers::e);

}  // namespace sumlens

#endif  // SUMLENS_HELMHOLTZ_H_
