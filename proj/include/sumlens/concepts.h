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

// Concept annotation: mapping sentences to domain concepts and counting them.
//
// Two counts are kept per concept. The sentence count (number of distinct
// sentences mentioning it) is what the rest of the pipeline calls the
// concept's frequency; the occurrence count (total mentions) drives the
// meaningfulness computation.

#ifndef SUMLENS_CONCEPTS_H_
#define SUMLENS_CONCEPTS_H_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sumlens/document.h"
#include "sumlens/lexicon.h"

namespace sumlens {

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  bool operator==(const TokenSpan&) const = default;
};

struct ConceptOccurrence {
  std::size_t sentence_index = 0;
  std::size_t paragraph_index = 0;
  std::string concept_id;
  std::string concept_name;
  std::string semantic_type;
  TokenSpan span;
};

struct ConceptStats {
  std::string name;
  std::string semantic_type;
  std::size_t sentence_count = 0;
  std::size_t occurrence_count = 0;
  std::map<std::size_t, std::size_t> per_paragraph_counts;
};

// Annotations of one text source (document body or abstract). Immutable after
// construction; build through FromOccurrences so the aggregates stay
// consistent with the occurrence list.
class ConceptAnnotations {
 public:
  ConceptAnnotations() = default;

  // `sentence_count` and `paragraph_count` describe the annotated source,
  // including sentences without any occurrence.
  static ConceptAnnotations FromOccurrences(
      std::vector<ConceptOccurrence> occurrences, std::size_t sentence_count,
      std::size_t paragraph_count);

  const std::vector<ConceptOccurrence>& occurrences() const {
    return occurrences_;
  }
  const std::map<std::string, ConceptStats>& concepts() const {
    return concepts_;
  }
  const ConceptStats* Find(const std::string& concept_id) const;

  std::size_t sentence_count() const { return sentence_count_; }
  std::size_t paragraph_count() const { return paragraph_count_; }
  std::size_t distinct_concepts() const { return concepts_.size(); }
  std::size_t total_occurrences() const { return occurrences_.size(); }
  bool empty() const { return occurrences_.empty(); }

  // Distinct concept ids per sentence, indexed by sentence.
  std::vector<std::set<std::string>> SentenceConcepts() const;

  // Total occurrences per paragraph, indexed by paragraph.
  std::vector<std::size_t> ParagraphTotals() const;

 private:
  std::vector<ConceptOccurrence> occurrences_;
  std::map<std::string, ConceptStats> concepts_;
  std::size_t sentence_count_ = 0;
  std::size_t paragraph_count_ = 0;
};

// Pluggable concept mapper. Implementations fill sentence-relative fields
// (concept, type, span); the caller assigns sentence and paragraph indices.
class ConceptExtractor {
 public:
  virtual ~ConceptExtractor() = default;
  virtual std::vector<ConceptOccurrence> Annotate(
      const Sentence& sentence) const = 0;
};

// Greedy longest-match dictionary annotator. At each token position the
// longest lexicon phrase wins and its tokens are consumed; a phrase with
// several concepts yields one occurrence per concept at the same span.
class LexiconMatcher : public ConceptExtractor {
 public:
  // Throws Error(kInvalidParameter) when the lexicon is empty.
  explicit LexiconMatcher(const Lexicon& lexicon);

  std::vector<ConceptOccurrence> Annotate(
      const Sentence& sentence) const override;

 private:
  const Lexicon& lexicon_;
};

enum class TextSource { kBody, kAbstract };

ConceptAnnotations ExtractConcepts(const Document& doc,
                                   const ConceptExtractor& extractor,
                                   TextSource source = TextSource::kBody);
ConceptAnnotations ExtractConcepts(const Document& doc, const Lexicon& lexicon,
                                   TextSource source = TextSource::kBody);

struct FrequencyRow {
  std::string concept_id;
  std::size_t sentence_count = 0;
  std::size_t occurrence_count = 0;
};

// Sorted by descending sentence count, ties by ascending concept id.
std::vector<FrequencyRow> FrequencyTable(const ConceptAnnotations& ann);

// Drops every occurrence whose semantic type is in the stoplist and
// recomputes the aggregates.
ConceptAnnotations FilterGeneric(const ConceptAnnotations& ann,
                                 const SemanticTypeStoplist& stoplist);

}  // namespace sumlens

#endif  // SUMLENS_CONCEPTS_H_
