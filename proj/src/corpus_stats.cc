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

#include "sumlens/corpus_stats.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sumlens/csv.h"
#include "sumlens/error.h"

namespace sumlens {

std::size_t ConceptCoverage(const Summary& summary,
                            const ConceptAnnotations& ann) {
  const std::set<std::size_t> selected(summary.selected.begin(),
                                       summary.selected.end());
  std::set<std::string> covered;
  for (const ConceptOccurrence& occ : ann.occurrences()) {
    if (selected.count(occ.sentence_index)) covered.insert(occ.concept_id);
  }
  return covered.size();
}

RankFrequencyTable ZipfTable(std::span<const ConceptAnnotations> corpus) {
  std::map<std::string, std::size_t> counts;
  for (const ConceptAnnotations& ann : corpus) {
    for (const auto& [id, stats] : ann.concepts()) {
      counts[id] += stats.occurrence_count;
    }
  }
  RankFrequencyTable table;
  for (const auto& [id, count] : counts) table.rows.push_back({0, id, count});
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const RankFrequencyRow& a, const RankFrequencyRow& b) {
                     return a.occurrence_count > b.occurrence_count;
                   });
  for (std::size_t i = 0; i < table.rows.size(); ++i) table.rows[i].rank = i + 1;
  return table;
}

double LogLogSlope(const RankFrequencyTable& table) {
  if (table.rows.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "slope needs at least two ranks");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(table.rows.size());
  for (const RankFrequencyRow& row : table.rows) {
    const double x = std::log(static_cast<double>(row.rank));
    const double y = std::log(static_cast<double>(row.occurrence_count));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void WriteRankFrequencyCsv(const RankFrequencyTable& table, std::ostream& out) {
  out << "rank,concept_id,occurrence_count\n";
  for (const RankFrequencyRow& row : table.rows) {
    out << row.rank << ',' << CsvField(row.concept_id) << ','
        << row.occurrence_count << '\n';
  }
}

}  // namespace sumlens
