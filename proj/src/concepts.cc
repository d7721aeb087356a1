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

#include "sumlens/concepts.h"

#include <algorithm>

#include "sumlens/error.h"

namespace sumlens {

ConceptAnnotations ConceptAnnotations::FromOccurrences(
    std::vector<ConceptOccurrence> occurrences, std::size_t sentence_count,
    std::size_t paragraph_count) {
  ConceptAnnotations ann;
  ann.sentence_count_ = sentence_count;
  ann.paragraph_count_ = paragraph_count;

  std::stable_sort(occurrences.begin(), occurrences.end(),
                   [](const ConceptOccurrence& a, const ConceptOccurrence& b) {
                     return a.sentence_index < b.sentence_index;
                   });
  std::map<std::string, std::set<std::size_t>> sentences_of;
  for (const ConceptOccurrence& occ : occurrences) {
    if (occ.sentence_index >= sentence_count) {
      throw Error(ErrorCode::kInvalidParameter,
                  "occurrence outside the annotated sentence range");
    }
    ConceptStats& stats = ann.concepts_[occ.concept_id];
    if (stats.occurrence_count == 0) {
      stats.name = occ.concept_name;
      stats.semantic_type = occ.semantic_type;
    }
    ++stats.occurrence_count;
    ++stats.per_paragraph_counts[occ.paragraph_index];
    sentences_of[occ.concept_id].insert(occ.sentence_index);
  }
  for (auto& [id, stats] : ann.concepts_) {
    stats.sentence_count = sentences_of[id].size();
  }
  ann.occurrences_ = std::move(occurrences);
  return ann;
}

const ConceptStats* ConceptAnnotations::Find(
    const std::string& concept_id) const {
  auto it = concepts_.find(concept_id);
  return it == concepts_.end() ? nullptr : &it->second;
}

std::vector<std::set<std::string>> ConceptAnnotations::SentenceConcepts()
    const {
  std::vector<std::set<std::string>> out(sentence_count_);
  for (const ConceptOccurrence& occ : occurrences_) {
    out[occ.sentence_index].insert(occ.concept_id);
  }
  return out;
}

std::vector<std::size_t> ConceptAnnotations::ParagraphTotals() const {
  std::vector<std::size_t> totals(paragraph_count_, 0);
  for (const ConceptOccurrence& occ : occurrences_) {
    if (occ.paragraph_index >= totals.size()) {
      totals.resize(occ.paragraph_index + 1, 0);
    }
    ++totals[occ.paragraph_index];
  }
  return totals;
}

LexiconMatcher::LexiconMatcher(const Lexicon& lexicon) : lexicon_(lexicon) {
  if (lexicon_.empty()) {
    throw Error(ErrorCode::kInvalidParameter, "lexicon is empty");
  }
}

std::vector<ConceptOccurrence> LexiconMatcher::Annotate(
    const Sentence& sentence) const {
  std::vector<ConceptOccurrence> out;
  const auto& tokens = sentence.tokens;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::size_t longest =
        std::min(lexicon_.max_phrase_tokens(), tokens.size() - i);
    std::size_t matched = 0;
    for (std::size_t len = longest; len >= 1 && matched == 0; --len) {
      std::string phrase = tokens[i];
      for (std::size_t j = 1; j < len; ++j) {
        phrase.push_back(' ');
        phrase += tokens[i + j];
      }
      if (const auto* concepts = lexicon_.Find(phrase)) {
        for (const ConceptEntry& c : *concepts) {
          ConceptOccurrence occ;
          occ.concept_id = c.id;
          occ.concept_name = c.name;
          occ.semantic_type = c.semantic_type;
          occ.span = {i, i + len};
          out.push_back(std::move(occ));
        }
        matched = len;
      }
    }
    i += matched == 0 ? 1 : matched;
  }
  return out;
}

ConceptAnnotations ExtractConcepts(const Document& doc,
                                   const ConceptExtractor& extractor,
                                   TextSource source) {
  std::vector<ConceptOccurrence> occurrences;
  if (source == TextSource::kBody) {
    for (const Sentence& s : doc.body_sentences) {
      const std::size_t paragraph = doc.ParagraphOf(s.index);
      for (ConceptOccurrence& occ : extractor.Annotate(s)) {
        occ.sentence_index = s.index;
        occ.paragraph_index = paragraph;
        occurrences.push_back(std::move(occ));
      }
    }
    return ConceptAnnotations::FromOccurrences(
        std::move(occurrences), doc.body_sentences.size(),
        doc.paragraphs.size());
  }
  if (!doc.abstract_sentences) return {};
  for (const Sentence& s : *doc.abstract_sentences) {
    for (ConceptOccurrence& occ : extractor.Annotate(s)) {
      occ.sentence_index = s.index;
      occ.paragraph_index = 0;
      occurrences.push_back(std::move(occ));
    }
  }
  return ConceptAnnotations::FromOccurrences(
      std::move(occurrences), doc.abstract_sentences->size(), 1);
}

ConceptAnnotations ExtractConcepts(const Document& doc, const Lexicon& lexicon,
                                   TextSource source) {
  return ExtractConcepts(doc, LexiconMatcher(lexicon), source);
}

std::vector<FrequencyRow> FrequencyTable(const ConceptAnnotations& ann) {
  std::vector<FrequencyRow> rows;
  rows.reserve(ann.concepts().size());
  for (const auto& [id, stats] : ann.concepts()) {
    rows.push_back({id, stats.sentence_count, stats.occurrence_count});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const FrequencyRow& a, const FrequencyRow& b) {
                     return a.sentence_count > b.sentence_count;
                   });
  return rows;
}

ConceptAnnotations FilterGeneric(const ConceptAnnotations& ann,
                                 const SemanticTypeStoplist& stoplist) {
  std::vector<ConceptOccurrence> kept;
  for (const ConceptOccurrence& occ : ann.occurrences()) {
    if (!stoplist.Contains(occ.semantic_type)) kept.push_back(occ);
  }
  return ConceptAnnotations::FromOccurrences(
      std::move(kept), ann.sentence_count(), ann.paragraph_count());
}

}  // namespace sumlens
