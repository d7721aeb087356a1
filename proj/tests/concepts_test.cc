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

#include <random>
#include <sstream>
#include <string>

#include "generators.h"
#include "gtest/gtest.h"
#include "sumlens/document.h"
#include "sumlens/error.h"
#include "sumlens/lexicon.h"

namespace sumlens {
namespace {

using sumlens_testing::Occ;

Lexicon TestLexicon() {
  std::istringstream tsv(
      "# surface\tid\tname\ttype\n"
      "autism\tC1\tAutism\tDisease or Syndrome\n"
      "schizophrenia\tC2\tSchizophrenia\tDisease or Syndrome\n"
      "bipolar\tC3\tBipolar\tQualitative Concept\n"
      "bipolar disorder\tC4\tBipolar Disorder\tDisease or Syndrome\n"
      "bipolar disorder\tC5\tManic Depression\tMental or Behavioral Dysfunction\n"
      "Risk\tC6\tRisk\tQualitative Concept\n");
  return ReadLexicon(tsv);
}

Document Doc(const std::string& text) {
  return ParseDocument(text, DocumentFormat::kPlain, "t");
}

TEST(LexiconTest, ReadsAndNormalizesSurfaces) {
  const Lexicon lexicon = TestLexicon();
  EXPECT_EQ(lexicon.size(), 5u);
  EXPECT_EQ(lexicon.max_phrase_tokens(), 2u);
  ASSERT_NE(lexicon.Find("risk"), nullptr);
  EXPECT_EQ(lexicon.Find("Risk"), nullptr);
  EXPECT_EQ(lexicon.Find("bipolar disorder")->size(), 2u);
}

TEST(LexiconTest, ShortRowIsParseError) {
  std::istringstream tsv("autism\tC1\tAutism\n");
  EXPECT_THROW(ReadLexicon(tsv), ParseError);
}

TEST(LexiconTest, DuplicateRowsCollapse) {
  Lexicon lexicon;
  lexicon.Add("Autism", {"C1", "Autism", "Disease or Syndrome"});
  lexicon.Add("autism ", {"C1", "Autism", "Disease or Syndrome"});
  EXPECT_EQ(lexicon.Find("autism")->size(), 1u);
}

TEST(StoplistTest, DefaultHasTheNineGenericTypes) {
  const SemanticTypeStoplist s = SemanticTypeStoplist::Default();
  EXPECT_EQ(s.size(), 9u);
  for (const char* type :
       {"Functional Concept", "Qualitative Concept", "Quantitative Concept",
        "Temporal Concept", "Spatial Concept", "Mental Process", "Language",
        "Idea or Concept", "Intellectual Product"}) {
    EXPECT_TRUE(s.Contains(type)) << type;
  }
  EXPECT_TRUE(s.Contains("qualitative concept"));
  EXPECT_FALSE(s.Contains("Disease or Syndrome"));
}

TEST(StoplistTest, ShippedFileMatchesDefault) {
  EXPECT_EQ(LoadStoplist(SUMLENS_STOPLIST).types(),
            SemanticTypeStoplist::Default().types());
}

TEST(ExtractConceptsTest, MatchesEachConceptOnce) {
  const ConceptAnnotations ann =
      ExtractConcepts(Doc("Autism and schizophrenia overlap."), TestLexicon());
  ASSERT_EQ(ann.occurrences().size(), 2u);
  EXPECT_EQ(ann.Find("C1")->sentence_count, 1u);
  EXPECT_EQ(ann.Find("C2")->sentence_count, 1u);
  EXPECT_EQ(ann.occurrences()[0].span, (TokenSpan{0, 1}));
  EXPECT_EQ(ann.occurrences()[1].span, (TokenSpan{2, 3}));
}

TEST(ExtractConceptsTest, LongestMatchWithAllMappings) {
  const ConceptAnnotations ann =
      ExtractConcepts(Doc("Bipolar disorder is common."), TestLexicon());
  ASSERT_EQ(ann.occurrences().size(), 2u);
  EXPECT_EQ(ann.Find("C3"), nullptr);  // shorter phrase never matches
  EXPECT_EQ(ann.occurrences()[0].span, ann.occurrences()[1].span);
  EXPECT_NE(ann.Find("C4"), nullptr);
  EXPECT_NE(ann.Find("C5"), nullptr);
}

TEST(ExtractConceptsTest, NoHitsGivesEmptyAnnotations) {
  const ConceptAnnotations ann =
      ExtractConcepts(Doc("Nothing to see here."), TestLexicon());
  EXPECT_TRUE(ann.empty());
  EXPECT_EQ(ann.sentence_count(), 1u);
}

TEST(ExtractConceptsTest, RepeatedMentionCountsOnceForSentences) {
  const ConceptAnnotations ann =
      ExtractConcepts(Doc("Autism, autism everywhere. Autism again.\n\nNone."),
                      TestLexicon());
  const ConceptStats* s = ann.Find("C1");
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->sentence_count, 2u);
  EXPECT_EQ(s->occurrence_count, 3u);
  EXPECT_EQ(s->per_paragraph_counts.at(0), 3u);
  EXPECT_EQ(ann.paragraph_count(), 2u);
}

TEST(ExtractConceptsTest, AbstractSource) {
  const Document doc = Doc("Schizophrenia abstract.\n---\nAutism body.");
  EXPECT_NE(ExtractConcepts(doc, TestLexicon(), TextSource::kAbstract).Find("C2"),
            nullptr);
  EXPECT_EQ(ExtractConcepts(doc, TestLexicon(), TextSource::kBody).Find("C2"),
            nullptr);
}

TEST(LexiconMatcherTest, EmptyLexiconRejected) {
  const Lexicon empty;
  EXPECT_THROW(LexiconMatcher{empty}, Error);
}

TEST(FrequencyTableTest, SortedByCountThenId) {
  const auto ann = ConceptAnnotations::FromOccurrences(
      {Occ(0, 0, "b"), Occ(0, 0, "b"), Occ(1, 0, "a"), Occ(2, 0, "c"),
       Occ(1, 0, "c"), Occ(2, 0, "d")},
      3, 1);
  const auto rows = FrequencyTable(ann);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].concept_id, "c");
  EXPECT_EQ(rows[0].sentence_count, 2u);
  EXPECT_EQ(rows[1].concept_id, "a");
  EXPECT_EQ(rows[2].concept_id, "b");
  EXPECT_EQ(rows[2].sentence_count, 1u);
  EXPECT_EQ(rows[2].occurrence_count, 2u);
  EXPECT_EQ(rows[3].concept_id, "d");
}

TEST(FrequencyTableTest, ConceptInEverySentence) {
  std::vector<ConceptOccurrence> occ;
  for (std::size_t s = 0; s < 7; ++s) occ.push_back(Occ(s, 0, "x"));
  const auto ann = ConceptAnnotations::FromOccurrences(occ, 7, 1);
  EXPECT_EQ(ann.Find("x")->sentence_count, 7u);
}

TEST(FilterGenericTest, RemovesStoplistTypes) {
  const Document doc = Doc("Risk of autism. Bipolar risk.");
  const ConceptAnnotations ann = ExtractConcepts(doc, TestLexicon());
  const ConceptAnnotations pool =
      FilterGeneric(ann, SemanticTypeStoplist::Default());
  EXPECT_NE(ann.Find("C6"), nullptr);
  EXPECT_EQ(pool.Find("C6"), nullptr);
  EXPECT_EQ(pool.Find("C3"), nullptr);
  EXPECT_NE(pool.Find("C1"), nullptr);
  EXPECT_EQ(pool.sentence_count(), ann.sentence_count());
}

TEST(FilterGenericTest, EmptyStoplistIsIdentity) {
  const ConceptAnnotations ann =
      ExtractConcepts(Doc("Risk of autism. Bipolar risk."), TestLexicon());
  const ConceptAnnotations same = FilterGeneric(ann, SemanticTypeStoplist());
  EXPECT_EQ(same.total_occurrences(), ann.total_occurrences());
  EXPECT_EQ(same.distinct_concepts(), ann.distinct_concepts());
}

TEST(FilterGenericTest, AllGenericGivesEmptyPool) {
  const ConceptAnnotations ann =
      ExtractConcepts(Doc("Risk. Bipolar risk."), TestLexicon());
  EXPECT_TRUE(FilterGeneric(ann, SemanticTypeStoplist::Default()).empty());
}

TEST(ConceptAnnotationsProperty, CountInvariantsOnRandomDocuments) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const ConceptAnnotations ann = sumlens_testing::RandomAnnotations(rng);
    for (const auto& [id, stats] : ann.concepts()) {
      EXPECT_GE(stats.sentence_count, 1u);
      EXPECT_LE(stats.sentence_count, stats.occurrence_count);
      EXPECT_LE(stats.sentence_count, ann.sentence_count());
      std::size_t sum = 0;
      for (const auto& [p, c] : stats.per_paragraph_counts) sum += c;
      EXPECT_EQ(sum, stats.occurrence_count);
    }
  }
}

TEST(ConceptAnnotationsProperty, SpansStayInsideSentences) {
  const Lexicon lexicon = LoadLexicon(SUMLENS_LEXICON);
  std::mt19937_64 rng(11);
  const auto surfaces = sumlens_testing::ProseSurfaces(SUMLENS_LEXICON);
  for (int trial = 0; trial < 20; ++trial) {
    const Document doc = Doc(sumlens_testing::SyntheticDocumentText(
        rng, surfaces, 15, false));
    const ConceptAnnotations ann = ExtractConcepts(doc, lexicon);
    EXPECT_FALSE(ann.empty());
    for (const ConceptOccurrence& o : ann.occurrences()) {
      const Sentence& s = doc.body_sentences.at(o.sentence_index);
      EXPECT_LT(o.span.begin, o.span.end);
      EXPECT_LE(o.span.end, s.tokens.size());
      EXPECT_EQ(o.paragraph_index, doc.ParagraphOf(o.sentence_index));
    }
    // Determinism: same bytes, same annotations.
    const ConceptAnnotations again = ExtractConcepts(doc, lexicon);
    EXPECT_EQ(again.total_occurrences(), ann.total_occurrences());
  }
}

}  // namespace
}  // namespace sumlens
