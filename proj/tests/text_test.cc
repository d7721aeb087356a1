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

#include <string>
#include <vector>

#include "gtest/gtest.h"

namespace sumlens {
namespace {

using Strings = std::vector<std::string>;

TEST(TokenizeTest, LowercasesAlphanumericRuns) {
  EXPECT_EQ(Tokenize("Autism and SCHIZOPHRENIA overlap."),
            (Strings{"autism", "and", "schizophrenia", "overlap"}));
}

TEST(TokenizeTest, HyphensAndPunctuationSplit) {
  EXPECT_EQ(Tokenize("genome-wide (GWAS) 0.3"),
            (Strings{"genome", "wide", "gwas", "0", "3"}));
}

TEST(TokenizeTest, UnicodeLettersStayInTokens) {
  EXPECT_EQ(Tokenize("Ärzte über Größe"), (Strings{"ärzte", "über", "größe"}));
}

TEST(TokenizeTest, EmptyAndPunctuationOnly) {
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize(" .,;- ").empty());
}

TEST(NormalizePhraseTest, CollapsesToSingleSpacedTokens) {
  EXPECT_EQ(NormalizePhrase("  Bipolar   DISORDER "), "bipolar disorder");
  EXPECT_EQ(NormalizePhrase("IL-6"), "il 6");
}

TEST(SegmentSentencesTest, DecimalAndAbbreviationDoNotSplit) {
  EXPECT_EQ(SegmentSentences("Risk is 0.3. See Fig. 2 for details."),
            (Strings{"Risk is 0.3.", "See Fig. 2 for details."}));
}

TEST(SegmentSentencesTest, EmptyAndWhitespace) {
  EXPECT_TRUE(SegmentSentences("").empty());
  EXPECT_TRUE(SegmentSentences(" \n\t ").empty());
}

TEST(SegmentSentencesTest, NoTerminator) {
  EXPECT_EQ(SegmentSentences("Hello world"), (Strings{"Hello world"}));
}

TEST(SegmentSentencesTest, EtAlAndLatinAbbreviations) {
  EXPECT_EQ(SegmentSentences("Smith et al. Found it. Drugs, e.g. Lithium, help. "
                             "Compare A vs. B here."),
            (Strings{"Smith et al. Found it.", "Drugs, e.g. Lithium, help.",
                     "Compare A vs. B here."}));
}

TEST(SegmentSentencesTest, LowercaseContinuationDoesNotSplit) {
  EXPECT_EQ(SegmentSentences("It rose. then fell. Done!"),
            (Strings{"It rose. then fell.", "Done!"}));
}

TEST(SegmentSentencesTest, ClosersStayWithTheirSentence) {
  EXPECT_EQ(SegmentSentences("He said \"stop.\" Then (quietly) left?! \"Yes.\""),
            (Strings{"He said \"stop.\"", "Then (quietly) left?!", "\"Yes.\""}));
}

TEST(SegmentSentencesTest, ConcatenationPreservesNonWhitespace) {
  const std::string input =
      "First one.  Second (with 1.5 mg) here! Third? \"Fourth.\" Fifth";
  std::string joined;
  for (const std::string& s : SegmentSentences(input)) joined += s;
  std::string squeezed;
  for (char c : input) {
    if (!std::isspace(static_cast<unsigned char>(c))) squeezed += c;
  }
  std::string joined_squeezed;
  for (char c : joined) {
    if (!std::isspace(static_cast<unsigned char>(c))) joined_squeezed += c;
  }
  EXPECT_EQ(joined_squeezed, squeezed);
}

TEST(FindInvalidUtf8Test, ReportsFirstBadByte) {
  EXPECT_EQ(FindInvalidUtf8("ok \xC3\xA4"), std::nullopt);
  EXPECT_EQ(FindInvalidUtf8("ab\xFF" "cd"), std::optional<std::size_t>(2));
  EXPECT_EQ(FindInvalidUtf8("x\xC3"), std::optional<std::size_t>(1));
}

}  // namespace
}  // namespace sumlens
