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

#include "sumlens/itemsets.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>

#include "sumlens/error.h"

namespace sumlens {
namespace {

// Set of transaction ids as a bit vector.
class TidSet {
 public:
  explicit TidSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void Set(std::size_t i) { words_[i / 64] |= uint64_t{1} << (i % 64); }

  TidSet Intersect(const TidSet& other) const {
    TidSet out(0);
    out.words_.resize(words_.size());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      out.words_[w] = words_[w] & other.words_[w];
    }
    return out;
  }

  std::size_t Count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<uint64_t> words_;
};

using ItemIds = std::vector<int>;

struct Level {
  std::vector<ItemIds> itemsets;  // lexicographically sorted
  std::vector<TidSet> tids;
  std::vector<std::size_t> counts;
};

bool ContainsAllSubsets(const ItemIds& candidate,
                        const std::vector<ItemIds>& previous) {
  // Subsets that drop one of the last two items are the join parents.
  ItemIds subset(candidate.size() - 1);
  for (std::size_t skip = 0; skip + 2 < candidate.size(); ++skip) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
      if (i != skip) subset[j++] = candidate[i];
    }
    if (!std::binary_search(previous.begin(), previous.end(), subset)) {
      return false;
    }
  }
  return true;
}

}  // namespace

TransactionSet BuildTransactions(const ConceptAnnotations& ann) {
  TransactionSet ts;
  for (const auto& concepts : ann.SentenceConcepts()) {
    ts.transactions.emplace_back(concepts.begin(), concepts.end());
  }
  return ts;
}

std::size_t MinSupportCount(double phi, std::size_t n) {
  const double exact = phi * static_cast<double>(n);
  const double count = std::ceil(exact - 1e-9 * std::max(1.0, exact));
  return static_cast<std::size_t>(std::max(count, 1.0));
}

std::vector<FrequentItemset> MineFrequentItemsets(const TransactionSet& ts,
                                                  double phi) {
  if (!(phi > 0.0 && phi <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "phi must lie in (0, 1]");
  }
  const std::size_t n = ts.size();
  if (n == 0) {
    throw Error(ErrorCode::kInvalidParameter, "no transactions to mine");
  }
  const std::size_t min_count = MinSupportCount(phi, n);

  // Items are numbered in lexicographic order so integer order is string
  // order.
  std::map<std::string, int> item_index;
  for (const auto& t : ts.transactions) {
    for (const auto& item : t) item_index.emplace(item, 0);
  }
  std::vector<std::string> names;
  for (auto& [name, index] : item_index) {
    index = static_cast<int>(names.size());
    names.push_back(name);
  }

  std::vector<TidSet> item_tids(names.size(), TidSet(n));
  for (std::size_t t = 0; t < n; ++t) {
    for (const auto& item : ts.transactions[t]) {
      item_tids[item_index[item]].Set(t);
    }
  }

  std::vector<FrequentItemset> result;
  auto emit = [&](const Level& level) {
    for (std::size_t i = 0; i < level.itemsets.size(); ++i) {
      FrequentItemset fi;
      for (int id : level.itemsets[i]) fi.items.push_back(names[id]);
      fi.support_count = level.counts[i];
      fi.support = static_cast<double>(fi.support_count) / static_cast<double>(n);
      result.push_back(std::move(fi));
    }
  };

  Level level;
  for (std::size_t id = 0; id < names.size(); ++id) {
    const std::size_t count = item_tids[id].Count();
    if (count >= min_count) {
      level.itemsets.push_back({static_cast<int>(id)});
      level.tids.push_back(item_tids[id]);
      level.counts.push_back(count);
    }
  }

  while (!level.itemsets.empty()) {
    emit(level);
    Level next;
    const std::size_t k = level.itemsets.front().size();
    for (std::size_t a = 0; a < level.itemsets.size(); ++a) {
      for (std::size_t b = a + 1; b < level.itemsets.size(); ++b) {
        const ItemIds& left = level.itemsets[a];
        const ItemIds& right = level.itemsets[b];
        // Sorted order keeps itemsets with a shared prefix contiguous.
        if (!std::equal(left.begin(), left.end() - 1, right.begin())) break;
        ItemIds candidate = left;
        candidate.push_back(right.back());
        if (k >= 2 && !ContainsAllSubsets(candidate, level.itemsets)) continue;
        TidSet tids = level.tids[a].Intersect(level.tids[b]);
        const std::size_t count = tids.Count();
        if (count < min_count) continue;
        next.itemsets.push_back(std::move(candidate));
        next.tids.push_back(std::move(tids));
        next.counts.push_back(count);
      }
    }
    level = std::move(next);
  }

  std::stable_sort(result.begin(), result.end(),
                   [](const FrequentItemset& x, const FrequentItemset& y) {
                     if (x.support_count != y.support_count) {
                       return x.support_count > y.support_count;
                     }
                     if (x.items.size() != y.items.size()) {
                       return x.items.size() < y.items.size();
                     }
                     return x.items < y.items;
                   });
  return result;
}

FeatureSet ItemsetFeatures(const ConceptAnnotations& ann,
                           const SemanticTypeStoplist& stoplist, double phi) {
  const ConceptAnnotations pool = FilterGeneric(ann, stoplist);
  FeatureSet fs;
  fs.strategy = Strategy::kItemset;
  fs.parameters.phi = phi;
  for (FrequentItemset& fi :
       MineFrequentItemsets(BuildTransactions(pool), phi)) {
    Feature f;
    f.concepts = std::move(fi.items);
    f.freq = fi.support_count;
    f.score = fi.support;
    fs.features.push_back(std::move(f));
  }
  if (fs.features.empty()) {
    throw Error(ErrorCode::kEmptyFeatureSet,
                "no frequent itemsets at phi = " + std::to_string(phi));
  }
  RenumberFeatures(fs);
  return fs;
}

}  // namespace sumlens
