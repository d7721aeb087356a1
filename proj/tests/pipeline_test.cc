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

#include "sumlens/pipeline.h"

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "generators.h"
#include "gtest/gtest.h"
#include "sumlens/error.h"

namespace sumlens {
namespace {

using nlohmann::json;
using sumlens_testing::Occ;

const Lexicon& SharedLexicon() {
  static const Lexicon lexicon = LoadLexicon(SUMLENS_LEXICON);
  return lexicon;
}

Document HundredSentenceDocument(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto surfaces = sumlens_testing::ProseSurfaces(SUMLENS_LEXICON);
  return ParseDocument(
      sumlens_testing::SyntheticDocumentText(rng, surfaces, 100, true),
      DocumentFormat::kPlain, "synthetic");
}

TEST(RunConfigTest, DefaultsAreValid) {
  const RunConfig c;
  EXPECT_NO_THROW(c.Validate());
  EXPECT_EQ(c.strategy, Strategy::kItemset);
  EXPECT_DOUBLE_EQ(c.compression_rate, 0.3);
  EXPECT_TRUE(c.use_coefficients);
  EXPECT_TRUE(c.redundancy_reduction);
}

TEST(RunConfigTest, ValidationRejectsOutOfRange) {
  auto invalid = [](auto mutate) {
    RunConfig c;
    mutate(c);
    EXPECT_THROW(c.Validate(), Error);
  };
  invalid([](RunConfig& c) { c.compression_rate = 0.0; });
  invalid([](RunConfig& c) { c.compression_rate = 1.0; });
  invalid([](RunConfig& c) { c.phi = 0.0; });
  invalid([](RunConfig& c) { c.phi = 1.5; });
  invalid([](RunConfig& c) { c.epsilon = std::nan(""); });
  invalid([](RunConfig& c) { c.log_base = 1.0; });
}

TEST(RunConfigTest, JsonRoundTrip) {
  RunConfig c;
  c.strategy = Strategy::kHelmholtz;
  c.threshold_kind = ThresholdKind::kTheta1;
  c.epsilon = 0.5;
  c.log_base = 10;
  c.phi = 0.2;
  c.compression_rate = 0.15;
  c.use_coefficients = false;
  c.redundancy_reduction = false;
  c.fallback_all = true;
  c.lexicon_path = "lex.tsv";
  c.stoplist_path = "stop.txt";
  c.seed = 99;
  RunConfig back;
  MergeConfigJson(ConfigToJson(c), back);
  EXPECT_EQ(ConfigToJson(back), ConfigToJson(c));
}

TEST(RunConfigTest, PartialMergeKeepsOtherFields) {
  RunConfig c;
  MergeConfigJson(json{{"phi", 0.5}, {"strategy", "generic"}}, c);
  EXPECT_DOUBLE_EQ(c.phi, 0.5);
  EXPECT_EQ(c.strategy, Strategy::kGenericFiltered);
  EXPECT_DOUBLE_EQ(c.compression_rate, 0.3);
}

TEST(RunConfigTest, MergeErrors) {
  auto code_of = [](const json& j) {
    RunConfig c;
    try {
      MergeConfigJson(j, c);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  EXPECT_EQ(code_of(json{{"bogus", 1}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of(json{{"phi", "high"}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of(json{{"strategy", "magic"}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of(json{{"seed", -1}}), ErrorCode::kInvalidParameter);
  EXPECT_EQ(code_of(json::array()), ErrorCode::kInvalidParameter);
}

TEST(RunConfigTest, MalformedFileReportsOffset) {
  const std::string path = ::testing::TempDir() + "bad_config.json";
  {
    std::ofstream out(path);
    out << "{\"phi\": 0.2,\n \"seed\": }";
  }
  RunConfig c;
  try {
    MergeConfigFile(path, c);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
    EXPECT_GE(e.byte_offset(), 20u);
    EXPECT_LE(e.byte_offset(), 24u);
  }
  std::remove(path.c_str());
  EXPECT_THROW(MergeConfigFile(path, c), Error);
}

ConceptAnnotations SmallAnnotations() {
  using sumlens_testing::kGenericType;
  return ConceptAnnotations::FromOccurrences(
      {Occ(0, 0, "a"), Occ(1, 0, "a"), Occ(2, 0, "a"), Occ(0, 0, "b"),
       Occ(3, 1, "c"), Occ(1, 0, "g", kGenericType), Occ(4, 1, "g", kGenericType)},
      5, 2);
}

TEST(SelectFeaturesTest, DispatchesOnStrategy) {
  const auto ann = SmallAnnotations();
  const auto stop = SemanticTypeStoplist::Default();
  for (const char* name : {"all", "generic_filtered", "freq_threshold",
                           "helmholtz", "itemset"}) {
    RunConfig c;
    c.strategy = *ParseStrategy(name);
    c.threshold_kind = ThresholdKind::kTheta1;
    c.phi = 0.4;
    c.epsilon = -5;
    const FeatureSet fs = SelectFeatures(ann, stop, c);
    EXPECT_EQ(fs.strategy, c.strategy) << name;
    EXPECT_FALSE(fs.empty()) << name;
  }
  RunConfig all;
  all.strategy = Strategy::kAll;
  EXPECT_EQ(SelectFeatures(ann, stop, all).size(), 4u);
  all.strategy = Strategy::kGenericFiltered;
  EXPECT_EQ(SelectFeatures(ann, stop, all).size(), 3u);
}

TEST(SelectFeaturesTest, EmptySelectionAndFallback) {
  const auto ann = SmallAnnotations();
  const auto stop = SemanticTypeStoplist::Default();
  RunConfig c;
  c.strategy = Strategy::kItemset;
  c.phi = 1.0;
  try {
    SelectFeatures(ann, stop, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyFeatureSet);
  }
  c.fallback_all = true;
  const FeatureSet fs = SelectFeatures(ann, stop, c);
  EXPECT_EQ(fs.strategy, Strategy::kAll);
  EXPECT_EQ(fs.size(), 4u);
}

TEST(SelectFeaturesTest, OnlyGenericConcepts) {
  const auto ann = ConceptAnnotations::FromOccurrences(
      {Occ(0, 0, "g", sumlens_testing::kGenericType)}, 1, 1);
  RunConfig c;
  c.strategy = Strategy::kFrequencyThreshold;
  EXPECT_THROW(SelectFeatures(ann, SemanticTypeStoplist::Default(), c), Error);
}

TEST(SummarizeTest, HundredSentenceDocument) {
  const Document doc = HundredSentenceDocument(1);
  ASSERT_EQ(doc.sentence_count(), 100u);
  const LexiconMatcher matcher(SharedLexicon());
  RunConfig c;
  c.strategy = Strategy::kAll;
  const SummarizeResult r =
      Summarize(doc, matcher, SharedLexicon().generic_semantic_types, c);
  ASSERT_GE(r.vectors.size(), 30u);
  EXPECT_EQ(r.selection.summary.target_count, 30u);
  EXPECT_EQ(r.selection.summary.selected.size(), 30u);
  EXPECT_TRUE(r.warnings.empty());
  std::size_t lines = 1;
  for (char ch : r.text) lines += ch == '\n';
  EXPECT_EQ(lines, 30u);
}

TEST(SummarizeTest, EveryStrategyIsDeterministic) {
  const Document doc = HundredSentenceDocument(2);
  const LexiconMatcher matcher(SharedLexicon());
  for (const char* name : {"all", "generic_filtered", "freq_threshold",
                           "helmholtz", "itemset"}) {
    RunConfig c;
    c.strategy = *ParseStrategy(name);
    c.fallback_all = true;
    const auto a = Summarize(doc, matcher, SharedLexicon().generic_semantic_types, c);
    const auto b = Summarize(doc, matcher, SharedLexicon().generic_semantic_types, c);
    EXPECT_EQ(a.text, b.text) << name;
    EXPECT_EQ(SummaryReport(doc, a, c).dump(), SummaryReport(doc, b, c).dump());
    EXPECT_EQ(a.selection.summary.selected.size(),
              std::min<std::size_t>(30, a.vectors.size()));
  }
}

TEST(SummarizeTest, ReportFields) {
  const Document doc = HundredSentenceDocument(3);
  const LexiconMatcher matcher(SharedLexicon());
  RunConfig c;
  c.strategy = Strategy::kFrequencyThreshold;
  const auto r = Summarize(doc, matcher, SharedLexicon().generic_semantic_types, c);
  const json report = SummaryReport(doc, r, c);
  EXPECT_EQ(report["doc_id"], "synthetic");
  EXPECT_EQ(report["sentence_count"], 100);
  EXPECT_EQ(report["target_count"], 30);
  EXPECT_EQ(report["config"]["strategy"], "freq_threshold");
  EXPECT_EQ(report["feature_set"]["strategy"], "freq_threshold");
  EXPECT_TRUE(report["feature_set"]["parameters"].contains("threshold"));
  ASSERT_EQ(report["sentences"].size(), 100u);
  std::size_t selected = 0;
  std::size_t scored = 0;
  for (const json& s : report["sentences"]) {
    if (s["selected"].get<bool>()) {
      ++selected;
      EXPECT_TRUE(s.contains("pick_order"));
      EXPECT_TRUE(s["log_odds"].is_number());
    }
    if (!s["log_odds"].is_null()) ++scored;
  }
  EXPECT_EQ(selected, report["selected"].size());
  EXPECT_EQ(scored, report["vector_count"].get<std::size_t>());
}

TEST(SummarizeTest, FallbackIsReported) {
  const Document doc = HundredSentenceDocument(4);
  const LexiconMatcher matcher(SharedLexicon());
  RunConfig c;
  c.strategy = Strategy::kHelmholtz;
  c.epsilon = 1e6;
  EXPECT_THROW(Summarize(doc, matcher, SharedLexicon().generic_semantic_types, c),
               Error);
  c.fallback_all = true;
  const auto r = Summarize(doc, matcher, SharedLexicon().generic_semantic_types, c);
  ASSERT_FALSE(r.warnings.empty());
  EXPECT_NE(r.warnings[0].find("fell back"), std::string::npos);
}

}  // namespace
}  // namespace sumlens
