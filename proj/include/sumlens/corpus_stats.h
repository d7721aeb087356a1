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

#ifndef SUMLENS_CORPUS_STATS_H_
#define SUMLENS_CORPUS_STATS_H_

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sumlens/bayes.h"
#include "sumlens/concepts.h"

namespace sumlens {

// Number of distinct concepts mentioned in the selected sentences.
std::size_t ConceptCoverage(const Summary& summary,
                            const ConceptAnnotations& ann);

struct RankFrequencyRow {
  std::size_t rank = 0;  // 1-based
  std::string concept_id;
  std::size_t occurrence_count = 0;
};

struct RankFrequencyTable {
  std::vector<RankFrequencyRow> rows;
};

// Sums occurrence counts per concept over all annotations and ranks them by
// descending count, ties by ascending concept id.
RankFrequencyTable ZipfTable(std::span<const ConceptAnnotations> corpus);

// Least-squares slope of ln(count) against ln(rank). Needs two or more rows.
double LogLogSlope(const RankFrequencyTable& table);

// CSV with header "rank,concept_id,occurrence_count".
void WriteRankFrequencyCsv(const RankFrequencyTable& table, std::ostream& out);

}  // namespace sumlens

#endif  // SUMLENS_CORPUS_STATS_H_
