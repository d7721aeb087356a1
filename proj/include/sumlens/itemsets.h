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

// Apriori frequent-itemset mining over sentence/concept transactions.

#ifndef SUMLENS_ITEMSETS_H_
#define SUMLENS_ITEMSETS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "sumlens/concepts.h"
#include "sumlens/features.h"
#include "sumlens/lexicon.h"

namespace sumlens {

// One transaction per sentence; items are sorted and unique. Sentences
// without concepts are kept as empty transactions so supports are fractions
// of all sentences.
struct TransactionSet {
  std::vector<std::vector<std::string>> transactions;

  std::size_t size() const { return transactions.size(); }
};

TransactionSet BuildTransactions(const ConceptAnnotations& ann);

struct FrequentItemset {
  std::vector<std::string> items;  // sorted
  std::size_t support_count = 0;
  double support = 0.0;  // support_count / n
};

// Smallest count c with c / n >= phi, tolerant of decimal phi values that
// are not exactly representable (0.07 * 100 must give 7, not 8).
std::size_t MinSupportCount(double phi, std::size_t n);

// Every itemset with support >= phi, found levelwise: k-candidates are joined
// from frequent (k-1)-itemsets sharing a (k-2)-prefix, pruned by downward
// closure, then support-counted. Output is ordered by descending support,
// ascending size, then lexicographic items.
//
// Throws Error(kInvalidParameter) when phi is outside (0, 1] or the
// transaction set is empty.
std::vector<FrequentItemset> MineFrequentItemsets(const TransactionSet& ts,
                                                  double phi);

// Generic-filters `ann`, mines at `phi`, and turns every frequent itemset
// (including 1-itemsets) into a feature with freq = support count and
// score = support. Throws Error(kEmptyFeatureSet) when nothing is frequent.
FeatureSet ItemsetFeatures(const ConceptAnnotations& ann,
                           const SemanticTypeStoplist& stoplist, double phi);

}  // namespace sumlens

#endif  // SUMLENS_ITEMSETS_H_
