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

#include "sumlens/document.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sumlens/error.h"
#include "sumlens/text.h"

namespace sumlens {
namespace {

using nlohmann::json;

class DocumentBuilder {
 public:
  void AddParagraph(std::string_view text) {
    std::vector<Sentence> sentences = MakeSentences(text, body_.size());
    if (sentences.empty()) return;
    const std::size_t begin = body_.size();
    for (Sentence& s : sentences) body_.push_back(std::move(s));
    paragraphs_.push_back({begin, body_.size()});
  }

  void Finish(Document& doc) {
    if (body_.empty()) {
      throw Error(ErrorCode::kEmptyDocument,
                  "document '" + doc.id + "' has no body sentences");
    }
    doc.body_sentences = std::move(body_);
    doc.paragraphs = std::move(paragraphs_);
  }

 private:
  std::vector<Sentence> body_;
  std::vector<ParagraphRange> paragraphs_;
};

void CheckUtf8(std::string_view raw) {
  if (auto bad = FindInvalidUtf8(raw)) {
    throw ParseError("invalid UTF-8 at byte " + std::to_string(*bad), *bad);
  }
}

std::string RequireString(const json& value, const char* field) {
  if (!value.is_string()) {
    throw ParseError(std::string("field '") + field + "' must be a string", 0);
  }
  return value.get<std::string>();
}

Document ParseJson(std::string_view raw, std::string_view fallback_id) {
  json root;
  try {
    root = json::parse(raw.begin(), raw.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  if (!root.is_object()) throw ParseError("document must be a JSON object", 0);

  Document doc;
  doc.id = root.contains("id") ? RequireString(root["id"], "id")
                               : std::string(fallback_id);
  if (root.contains("title") && !root["title"].is_null()) {
    doc.title = RequireString(root["title"], "title");
  }
  if (root.contains("abstract") && !root["abstract"].is_null()) {
    doc.abstract_sentences =
        MakeSentences(RequireString(root["abstract"], "abstract"), 0);
  }

  DocumentBuilder builder;
  if (root.contains("sections")) {
    const json& sections = root["sections"];
    if (!sections.is_array()) throw ParseError("'sections' must be an array", 0);
    for (const json& section : sections) {
      if (!section.is_object() || !section.contains("paragraphs")) continue;
      const json& paragraphs = section["paragraphs"];
      if (!paragraphs.is_array()) {
        throw ParseError("'paragraphs' must be an array", 0);
      }
      for (const json& p : paragraphs) {
        builder.AddParagraph(RequireString(p, "paragraphs[]"));
      }
    }
  }
  builder.Finish(doc);
  return doc;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  });
}

bool IsAbstractSeparator(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                           line.back() == '\t')) {
    line.remove_suffix(1);
  }
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
    line.remove_prefix(1);
  }
  return line == "---";
}

Document ParsePlain(std::string_view raw, std::string_view fallback_id) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= raw.size()) {
    std::size_t nl = raw.find('\n', pos);
    if (nl == std::string_view::npos) nl = raw.size();
    lines.push_back(raw.substr(pos, nl - pos));
    pos = nl + 1;
  }

  Document doc;
  doc.id = std::string(fallback_id);

  std::size_t body_start = 0;
  auto separator = std::find_if(lines.begin(), lines.end(), IsAbstractSeparator);
  if (separator != lines.end()) {
    std::string abstract;
    for (auto it = lines.begin(); it != separator; ++it) {
      abstract.append(*it);
      abstract.push_back('\n');
    }
    doc.abstract_sentences = MakeSentences(abstract, 0);
    body_start = static_cast<std::size_t>(separator - lines.begin()) + 1;
  }

  DocumentBuilder builder;
  std::string paragraph;
  for (std::size_t i = body_start; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) {
      builder.AddParagraph(paragraph);
      paragraph.clear();
    } else {
      paragraph.append(lines[i]);
      paragraph.push_back('\n');
    }
  }
  builder.AddParagraph(paragraph);
  builder.Finish(doc);
  return doc;
}

}  // namespace

std::size_t Document::ParagraphOf(std::size_t sentence_index) const {
  auto it = std::upper_bound(
      paragraphs.begin(), paragraphs.end(), sentence_index,
      [](std::size_t i, const ParagraphRange& p) { return i < p.end; });
  return static_cast<std::size_t>(it - paragraphs.begin());
}

std::vector<Sentence> MakeSentences(std::string_view text,
                                    std::size_t first_index) {
  std::vector<Sentence> out;
  for (std::string& piece : SegmentSentences(text)) {
    std::vector<std::string> tokens = Tokenize(piece);
    if (tokens.empty()) continue;
    Sentence s;
    s.index = first_index + out.size();
    s.text = std::move(piece);
    s.tokens = std::move(tokens);
    out.push_back(std::move(s));
  }
  return out;
}

Document ParseDocument(std::string_view raw, DocumentFormat format,
                       std::string_view fallback_id) {
  CheckUtf8(raw);
  return format == DocumentFormat::kJson ? ParseJson(raw, fallback_id)
                                         : ParsePlain(raw, fallback_id);
}

DocumentFormat FormatForPath(std::string_view path) {
  std::string ext = std::filesystem::path(path).extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".json" ? DocumentFormat::kJson : DocumentFormat::kPlain;
}

Document LoadDocument(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDocument(buffer.str(), FormatForPath(path),
                       std::filesystem::path(path).stem().string());
}

}  // namespace sumlens
