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

#include "sumlens/lexicon.h"

#include <algorithm>
#include <cctype>
#include <fstream>

#include "sumlens/error.h"
#include "sumlens/text.h"

namespace sumlens {
namespace {

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view StripLine(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
    line.remove_prefix(1);
  }
  return line;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

}  // namespace

SemanticTypeStoplist::SemanticTypeStoplist(
    const std::vector<std::string>& types) {
  for (const auto& t : types) Add(t);
}

SemanticTypeStoplist SemanticTypeStoplist::Default() {
  return SemanticTypeStoplist({"Functional Concept", "Qualitative Concept",
                               "Quantitative Concept", "Temporal Concept",
                               "Spatial Concept", "Mental Process", "Language",
                               "Idea or Concept", "Intellectual Product"});
}

void SemanticTypeStoplist::Add(std::string_view type) {
  std::string_view stripped = StripLine(type);
  if (!stripped.empty()) types_.insert(AsciiLower(stripped));
}

bool SemanticTypeStoplist::Contains(std::string_view type) const {
  return types_.count(AsciiLower(type)) > 0;
}

void Lexicon::Add(std::string_view surface, ConceptEntry entry) {
  std::vector<std::string> tokens = Tokenize(surface);
  if (tokens.empty()) return;
  std::string key = NormalizePhrase(surface);
  auto& concepts = entries_[key];
  const bool duplicate =
      std::any_of(concepts.begin(), concepts.end(),
                  [&](const ConceptEntry& c) { return c.id == entry.id; });
  if (!duplicate) concepts.push_back(std::move(entry));
  max_phrase_tokens_ = std::max(max_phrase_tokens_, tokens.size());
}

const std::vector<ConceptEntry>* Lexicon::Find(std::string_view phrase) const {
  auto it = entries_.find(std::string(phrase));
  return it == entries_.end() ? nullptr : &it->second;
}

Lexicon ReadLexicon(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_number = 0;
  std::size_t byte_offset = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::size_t line_start = byte_offset;
    byte_offset += line.size() + 1;
    std::string_view view = line;
    if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
    if (StripLine(view).empty() || StripLine(view).front() == '#') continue;
    std::vector<std::string_view> fields = SplitTabs(view);
    if (fields.size() < 4) {
      throw ParseError("lexicon line " + std::to_string(line_number) +
                           ": expected 4 tab-separated columns",
                       line_start);
    }
    lexicon.Add(fields[0], ConceptEntry{std::string(StripLine(fields[1])),
                                        std::string(StripLine(fields[2])),
                                        std::string(StripLine(fields[3]))});
  }
  return lexicon;
}

Lexicon LoadLexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read lexicon " + path);
  return ReadLexicon(in);
}

SemanticTypeStoplist ReadStoplist(std::istream& in) {
  SemanticTypeStoplist stoplist;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view view = StripLine(line);
    if (view.empty() || view.front() == '#') continue;
    stoplist.Add(view);
  }
  return stoplist;
}

SemanticTypeStoplist LoadStoplist(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read stoplist " + path);
  return ReadStoplist(in);
}

}  // namespace sumlens
