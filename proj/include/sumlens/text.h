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

// Tokenization and sentence segmentation for English scientific prose.
//
// Tokens are maximal runs of Unicode alphanumeric code points, lowercased with
// simple case mapping. Everything else (punctuation, hyphens, symbols) is a
// separator, so "X-linked" yields {"x", "linked"}.
//
// Sentences end at '.', '!' or '?' (optionally followed by closing quotes or
// brackets) when the next non-space character is an uppercase letter, or when
// the text ends. A period never ends a sentence after a known abbreviation
// such as "Fig." or "et al.", and never inside a number such as "0.3".

#ifndef SUMLENS_TEXT_H_
#define SUMLENS_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sumlens {

std::vector<std::string> Tokenize(std::string_view text);

// Tokens joined with single spaces. Lexicon surface forms and matched text
// spans share this normal form.
std::string NormalizePhrase(std::string_view text);

std::vector<std::string> SegmentSentences(std::string_view paragraph);

// Byte offset of the first invalid UTF-8 sequence, or nullopt when `text` is
// well formed.
std::optional<std::size_t> FindInvalidUtf8(std::string_view text);

}  // namespace sumlens

#endif  // SUMLENS_TEXT_H_
