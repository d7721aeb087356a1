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

#include "sumlens/text.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>

namespace sumlens {
namespace {

// Lowercased, without the trailing period. Multi-word abbreviations are
// matched on their last word ("et al." -> "al").
constexpr std::array<std::string_view, 24> kAbbreviations = {
    "al",   "fig",  "figs",   "e.g", "i.e", "vs",  "eq",  "eqs",
    "ref",  "refs", "no",     "dr",  "mr",  "mrs", "ms",  "prof",
    "approx", "ca", "cf",     "resp", "tab", "sect", "vol", "pp"};

struct CodePoint {
  UChar32 value;
  std::size_t next;  // offset just past this code point
};

CodePoint DecodeAt(std::string_view text, std::size_t offset) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  auto i = static_cast<int32_t>(offset);
  UChar32 c;
  U8_NEXT(bytes, i, length, c);
  return {c, static_cast<std::size_t>(i)};
}

void AppendUtf8(std::string& out, UChar32 c) {
  uint8_t buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  UBool error = false;
  U8_APPEND(buffer, length, U8_MAX_LENGTH, c, error);
  if (!error) out.append(reinterpret_cast<const char*>(buffer), length);
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsTerminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing punctuation that may trail a terminator: ) ] " ' and the curly
// right quotes.
std::size_t SkipClosers(std::string_view text, std::size_t pos) {
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ')' || c == ']' || c == '"' || c == '\'') {
      ++pos;
      continue;
    }
    CodePoint cp = DecodeAt(text, pos);
    if (cp.value == 0x201D || cp.value == 0x2019) {
      pos = cp.next;
      continue;
    }
    break;
  }
  return pos;
}

std::size_t SkipOpeners(std::string_view text, std::size_t pos) {
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '(' || c == '[' || c == '"' || c == '\'') {
      ++pos;
      continue;
    }
    CodePoint cp = DecodeAt(text, pos);
    if (cp.value == 0x201C || cp.value == 0x2018) {
      pos = cp.next;
      continue;
    }
    break;
  }
  return pos;
}

bool StartsWithUppercase(std::string_view text, std::size_t pos) {
  pos = SkipOpeners(text, pos);
  if (pos >= text.size()) return false;
  CodePoint cp = DecodeAt(text, pos);
  return cp.value >= 0 && u_isupper(cp.value);
}

// The whitespace-delimited word ending right before the period at `dot`,
// lowercased and stripped of leading openers.
std::string WordBefore(std::string_view text, std::size_t dot) {
  std::size_t begin = dot;
  while (begin > 0 && !IsSpace(text[begin - 1])) --begin;
  std::string word(text.substr(begin, dot - begin));
  word.erase(0, word.find_first_not_of("([\"'"));
  std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
    return static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  });
  return word;
}

bool IsAbbreviation(std::string_view word) {
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

std::string_view Trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size() && IsSpace(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && IsSpace(s[e - 1])) --e;
  return s.substr(b, e - b);
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    CodePoint cp = DecodeAt(text, pos);
    pos = cp.next;
    if (cp.value >= 0 && u_isalnum(cp.value)) {
      AppendUtf8(current, u_tolower(cp.value));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string NormalizePhrase(std::string_view text) {
  std::string out;
  for (const std::string& token : Tokenize(text)) {
    if (!out.empty()) out.push_back(' ');
    out += token;
  }
  return out;
}

std::vector<std::string> SegmentSentences(std::string_view paragraph) {
  std::vector<std::string> sentences;
  std::size_t start = 0;
  std::size_t pos = 0;
  auto emit = [&](std::size_t end) {
    std::string_view piece = Trim(paragraph.substr(start, end - start));
    if (!piece.empty()) sentences.emplace_back(piece);
    start = end;
  };
  while (pos < paragraph.size()) {
    if (!IsTerminator(paragraph[pos])) {
      ++pos;
      continue;
    }
    const std::size_t first_terminator = pos;
    while (pos < paragraph.size() && IsTerminator(paragraph[pos])) ++pos;
    const std::size_t end = SkipClosers(paragraph, pos);
    pos = end;

    if (paragraph[first_terminator] == '.' &&
        IsAbbreviation(WordBefore(paragraph, first_terminator))) {
      continue;
    }
    std::size_t next = end;
    while (next < paragraph.size() && IsSpace(paragraph[next])) ++next;
    if (next == paragraph.size()) {
      emit(end);
    } else if (next > end && StartsWithUppercase(paragraph, next)) {
      emit(end);
    }
  }
  emit(paragraph.size());
  return sentences;
}

std::optional<std::size_t> FindInvalidUtf8(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    CodePoint cp = DecodeAt(text, pos);
    if (cp.value < 0) return pos;
    pos = cp.next;
  }
  return std::nullopt;
}

}  // namespace sumlens
