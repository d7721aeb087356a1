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

#ifndef SUMLENS_LEXICON_H_
#define SUMLENS_LEXICON_H_

#include <cstddef>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sumlens {

struct ConceptEntry {
  std::string id;
  std::string name;
  std::string semantic_type;

  bool operator==(const ConceptEntry&) const = default;
};

// Set of semantic types whose concepts are considered too generic to serve as
// features. Lookups ignore ASCII case.
class SemanticTypeStoplist {
 public:
  SemanticTypeStoplist() = default;
  explicit SemanticTypeStoplist(const std::vector<std::string>& types);

  // The nine broad types: functional, qualitative, quantitative, temporal and
  // spatial concepts, mental process, language, idea or concept, and
  // intellectual product.
  static SemanticTypeStoplist Default();

  void Add(std::string_view type);
  bool Contains(std::string_view type) const;
  bool empty() const { return types_.empty(); }
  std::size_t size() const { return types_.size(); }
  const std::set<std::string>& types() const { return types_; }

 private:
  std::set<std::string> types_;  // lowercased
};

// Dictionary from normalized surface phrase to every concept it denotes.
class Lexicon {
 public:
  // Normalizes `surface` (tokenize + lowercase + single spaces). Empty
  // surfaces are ignored; duplicate (surface, concept id) rows collapse.
  void Add(std::string_view surface, ConceptEntry entry);

  // All concepts for an already-normalized phrase, or nullptr.
  const std::vector<ConceptEntry>* Find(std::string_view phrase) const;

  std::size_t max_phrase_tokens() const { return max_phrase_tokens_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  SemanticTypeStoplist generic_semantic_types = SemanticTypeStoplist::Default();

 private:
  std::unordered_map<std::string, std::vector<ConceptEntry>> entries_;
  std::size_t max_phrase_tokens_ = 0;
};

// TSV with columns surface_form, concept_id, concept_name, semantic_type.
// Lines starting with '#' and blank lines are skipped. Throws ParseError on a
// row with fewer than four columns.
Lexicon ReadLexicon(std::istream& in);
Lexicon LoadLexicon(const std::string& path);

// One semantic type per line; '#' comments and blank lines skipped.
SemanticTypeStoplist ReadStoplist(std::istream& in);
SemanticTypeStoplist LoadStoplist(const std::string& path);

}  // namespace sumlens

#endif  // SUMLENS_LEXICON_H_
