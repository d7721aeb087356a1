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

#ifndef SUMLENS_DOCUMENT_H_
#define SUMLENS_DOCUMENT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumlens {

struct Sentence {
  std::size_t index = 0;
  std::string text;
  std::vector<std::string> tokens;  // lowercase, never empty
};

// Half-open range of body sentence indices.
struct ParagraphRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const ParagraphRange&) const = default;
};

// A parsed input document. Body sentences are numbered 0..n-1 and the
// paragraph ranges partition that interval in order. The abstract, when
// present, is the reference summary used by evaluation; its sentences are
// numbered independently.
struct Document {
  std::string id;
  std::optional<std::string> title;
  std::optional<std::vector<Sentence>> abstract_sentences;
  std::vector<Sentence> body_sentences;
  std::vector<ParagraphRange> paragraphs;

  std::size_t sentence_count() const { return body_sentences.size(); }

  // Paragraph index of a body sentence.
  std::size_t ParagraphOf(std::size_t sentence_index) const;
};

enum class DocumentFormat { kJson, kPlain };

// Parses `raw` as UTF-8. JSON input follows
//   {"id": str, "title": str?, "abstract": str?,
//    "sections": [{"heading": str?, "paragraphs": [str, ...]}]}
// Plain input is an optional abstract block closed by a "---" line, followed
// by blank-line separated body paragraphs; `fallback_id` names it.
//
// Throws ParseError for malformed input and Error(kEmptyDocument) when the
// body has no tokenizable sentence.
Document ParseDocument(std::string_view raw, DocumentFormat format,
                       std::string_view fallback_id = "");

// Picks the format from the file extension (".json" -> JSON, else plain).
DocumentFormat FormatForPath(std::string_view path);

// Reads and parses a file; the file stem becomes the fallback id.
Document LoadDocument(const std::string& path);

// Sentences built from one block of running text, numbered from
// `first_index`. Segments without tokens are dropped.
std::vector<Sentence> MakeSentences(std::string_view text,
                                    std::size_t first_index);

}  // namespace sumlens

#endif  // SUMLENS_DOCUMENT_H_
