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

#include "sumlens/bayes.h"

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "generators.h"
#include "gtest/gtest.h"
#include "oracles.h"
#include "sumlens/document.h"
#include "sumlens/error.h"

namespace sumlens {
namespace {

using sumlens_testing::Occ;

FeatureSet Singletons(const std::vector<std::size_t>& freqs) {
  FeatureSet fs;
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    fs.features.push_back({k, {"f" + std::to_string(k)}, freqs[k], {}});
  }
  return fs;
}

SentenceVector Vec(std::size_t index, std::vector<bool> values) {
  return {index, std::move(values)};
}

TEST(SummaryLengthTest, CeilingOfRateTimesTotal) {
  EXPECT_EQ(SummaryLength(0.3, 85), 26u);
  EXPECT_EQ(SummaryLength(0.3, 100), 30u);
  EXPECT_EQ(SummaryLength(0.3, 10), 3u);
  EXPECT_EQ(SummaryLength(0.25, 10), 3u);
  EXPECT_EQ(SummaryLength(0.07, 100), 7u);
  EXPECT_EQ(SummaryLength(0.1, 85), 9u);
}

TEST(BuildVectorsTest, DropsSentencesWithoutFeatures) {
  const auto ann = ConceptAnnotations::FromOccurrences(
      {Occ(0, 0, "a"), Occ(1, 0, "b"), Occ(3, 0, "a"), Occ(3, 0, "b")}, 4, 1);
  FeatureSet fs;
  fs.features = {{0, {"a"}, 2, {}}, {1, {"a", "b"}, 1, {}}};
  const auto vectors = BuildVectors(ann, fs);
  ASSERT_EQ(vectors.size(), 2u);
  EXPECT_EQ(vectors[0].sentence_index, 0u);
  EXPECT_EQ(vectors[0].values, (std::vector<bool>{true, false}));  // a only
  EXPECT_EQ(vectors[1].sentence_index, 3u);
  EXPECT_EQ(vectors[1].values, (std::vector<bool>{true, true}));
}

TEST(BuildVectorsTest, NoSurvivorsIsError) {
  const auto ann = ConceptAnnotations::FromOccurrences({Occ(0, 0, "a")}, 1, 1);
  FeatureSet fs;
  fs.features = {{0, {"z"}, 1, {}}};
  try {
    BuildVectors(ann, fs);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoClassifiableSentences);
  }
}

TEST(EstimateModelTest, SampleScaleAnchors) {
  const ConceptAnnotations ann = sumlens_testing::SampleScaleAnnotations();
  const ConceptAnnotations pool =
      FilterGeneric(ann, SemanticTypeStoplist::Default());
  const FeatureSet fs = SelectByThreshold(pool, ThresholdKind::kTheta3);
  const auto vectors = BuildVectors(ann, fs);
  ASSERT_EQ(vectors.size(), 69u);
  const ClassifierModel model = EstimateModel(vectors, fs, 0.3, 85);
  EXPECT_EQ(model.target_count, 26u);
  EXPECT_NEAR(model.p_yes, 0.377, 1e-3);
  EXPECT_DOUBLE_EQ(model.p_yes, 26.0 / 69.0);
  EXPECT_NEAR(model.features[0].d, 0.435, 1e-3);
  EXPECT_DOUBLE_EQ(model.features[0].d, 30.0 / 69.0);
  EXPECT_EQ(model.features[0].freq, 30u);
}

TEST(EstimateModelTest, SaturatedPriorIsClamped) {
  const std::vector<SentenceVector> v = {Vec(0, {true}), Vec(1, {true})};
  const ClassifierModel model = EstimateModel(v, Singletons({2}), 0.9, 10);
  EXPECT_DOUBLE_EQ(model.eps_p, 0.25);
  EXPECT_DOUBLE_EQ(model.p_yes, 0.75);
  EXPECT_DOUBLE_EQ(model.p_no, 0.25);
  // d = 1 is clamped in products.
  EXPECT_DOUBLE_EQ(model.Likelihood(0, true, SummaryClass::kYes), 0.75);
  EXPECT_DOUBLE_EQ(model.Likelihood(0, false, SummaryClass::kNo), 0.25);
}

TEST(EstimateModelTest, RateOutOfRange) {
  const std::vector<SentenceVector> v = {Vec(0, {true})};
  for (double rate : {0.0, 1.0, -0.2, 1.5}) {
    EXPECT_THROW(EstimateModel(v, Singletons({1}), rate, 5), Error) << rate;
  }
}

TEST(CoefficientTest, Values) {
  EXPECT_DOUBLE_EQ(Coefficient(true, 30, SummaryClass::kYes), 30.0);
  EXPECT_DOUBLE_EQ(Coefficient(false, 30, SummaryClass::kYes), 1.0 / 30);
  EXPECT_DOUBLE_EQ(Coefficient(true, 30, SummaryClass::kNo), 1.0 / 30);
  EXPECT_DOUBLE_EQ(Coefficient(false, 30, SummaryClass::kNo), 30.0);
  for (bool v : {true, false}) {
    for (SummaryClass c : {SummaryClass::kYes, SummaryClass::kNo}) {
      EXPECT_DOUBLE_EQ(Coefficient(v, 1, c), 1.0);
    }
  }
  try {
    Coefficient(true, 0, SummaryClass::kYes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDomainError);
  }
}

ClassifierModel SingleFeatureModel() {
  ClassifierModel model;
  model.p_yes = 0.377;
  model.p_no = 1 - 0.377;
  model.eps_p = 1.0 / 138;
  model.vector_count = 69;
  model.features = {{0.435, 30, true}};
  return model;
}

TEST(LogPosteriorTest, SingleFeatureExample) {
  const ClassifierModel model = SingleFeatureModel();
  const SentenceVector v = Vec(0, {true});
  EXPECT_NEAR(LogPosterior(v, model, SummaryClass::kYes, true),
              std::log(0.377 * 0.435 * 30), 1e-12);
  EXPECT_NEAR(std::exp(LogPosterior(v, model, SummaryClass::kYes, true)), 4.920,
              1e-3);
  EXPECT_NEAR(LogPosterior(v, model, SummaryClass::kNo, true),
              std::log(0.623 * 0.435 / 30), 1e-12);
  EXPECT_NEAR(std::exp(LogPosterior(v, model, SummaryClass::kNo, true)), 0.00903,
              1e-5);
  EXPECT_NEAR(LogPosterior(v, model, SummaryClass::kYes, false),
              std::log(0.377 * 0.435), 1e-12);
}

TEST(PorTest, SingleFeatureExample) {
  const ClassifierModel model = SingleFeatureModel();
  const double odds = std::exp(Por(Vec(0, {true}), model, true).log_odds);
  EXPECT_NEAR(odds, (0.377 * 0.435 * 30) / (0.623 * 0.435 / 30), 1e-9);
  // The published ratio divides already rounded posteriors (4.920 / 0.00903).
  EXPECT_NEAR(odds, 544.8, 0.2);
  EXPECT_NEAR(4.920 / 0.00903, 544.8, 0.1);
}

TEST(PorTest, WithoutCoefficientsAllVectorsTie) {
  const std::vector<SentenceVector> v = {Vec(0, {true, false, true}),
                                         Vec(1, {false, true, false}),
                                         Vec(2, {true, true, true})};
  const ClassifierModel model = EstimateModel(v, Singletons({2, 2, 2}), 0.3, 6);
  const double expected = std::log(model.p_yes / model.p_no);
  for (const auto& s : v) {
    EXPECT_NEAR(Por(s, model, false).log_odds, expected, 1e-12);
  }
}

TEST(PorTest, FlipDeltaIsFourLogFreq) {
  const std::vector<SentenceVector> v = {Vec(0, {true, false}),
                                         Vec(1, {false, true}),
                                         Vec(2, {true, true})};
  const ClassifierModel model = EstimateModel(v, Singletons({7, 1}), 0.3, 6);
  const double off = Por(Vec(9, {false, true}), model, true).log_odds;
  const double on = Por(Vec(9, {true, true}), model, true).log_odds;
  EXPECT_NEAR(on - off, 4 * std::log(7.0), 1e-9);
  const double unit_off = Por(Vec(9, {true, false}), model, true).log_odds;
  EXPECT_NEAR(on - unit_off, 0.0, 1e-12);
}

TEST(PorProperty, MatchesLinearSpaceOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t features = sumlens_testing::Uniform(rng, 1, 12);
    const std::size_t count = sumlens_testing::Uniform(rng, 1, 20);
    sumlens_testing::LinearModelInput in;
    std::vector<SentenceVector> vectors;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<bool> values(features);
      const std::size_t forced = sumlens_testing::Uniform(rng, 0, features - 1);
      for (std::size_t k = 0; k < features; ++k) {
        values[k] = k == forced || sumlens_testing::Uniform(rng, 0, 2) == 0;
      }
      in.vectors.push_back(values);
      vectors.push_back(Vec(i, values));
    }
    for (std::size_t k = 0; k < features; ++k) {
      in.freqs.push_back(sumlens_testing::Uniform(rng, 1, 20));
    }
    const std::size_t total = count + sumlens_testing::Uniform(rng, 0, 10);
    const double rate = 0.05 + 0.9 * static_cast<double>(trial) / 100;
    in.needed = SummaryLength(rate, total);
    const ClassifierModel model =
        EstimateModel(vectors, Singletons(in.freqs), rate, total);
    for (bool coefficients : {true, false}) {
      for (const SentenceVector& v : vectors) {
        const long double want =
            sumlens_testing::LinearBayes(in, v.values, coefficients).Odds();
        const long double got = std::exp(
            static_cast<long double>(Por(v, model, coefficients).log_odds));
        EXPECT_LT(std::abs(got - want) / want, 1e-6L);
      }
    }
  }
}

TEST(PorProperty, FlippingFrequentFeatureRaisesOdds) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t features = sumlens_testing::Uniform(rng, 1, 8);
    std::vector<SentenceVector> vectors;
    for (std::size_t i = 0; i < 10; ++i) {
      std::vector<bool> values(features);
      for (std::size_t k = 0; k < features; ++k) {
        values[k] = sumlens_testing::Uniform(rng, 0, 1) == 1;
      }
      values[0] = true;
      vectors.push_back(Vec(i, values));
    }
    std::vector<std::size_t> freqs;
    for (std::size_t k = 0; k < features; ++k) {
      freqs.push_back(sumlens_testing::Uniform(rng, 1, 9));
    }
    const ClassifierModel model = EstimateModel(vectors, Singletons(freqs), 0.3, 10);
    for (std::size_t k = 0; k < features; ++k) {
      std::vector<bool> off(features, false);
      off[(k + 1) % features] = true;
      off[k] = false;
      std::vector<bool> on = off;
      on[k] = true;
      const double delta = Por(Vec(0, on), model, true).log_odds -
                           Por(Vec(0, off), model, true).log_odds;
      if (freqs[k] >= 2) {
        EXPECT_GT(delta, 0.0);
      } else {
        EXPECT_NEAR(delta, 0.0, 1e-12);
      }
    }
  }
}

// Twins {A,B} (product of frequencies 3*3) outrank the distinct {C,D} (2*3)
// until one twin is picked; then the remaining twin drops to 2*2.
std::vector<SentenceVector> TwinFixture() {
  return {Vec(0, {true, true, false, false}),  Vec(1, {true, true, false, false}),
          Vec(2, {false, false, true, true}),  Vec(3, {true, false, false, false}),
          Vec(4, {false, true, false, false}), Vec(5, {false, false, true, false}),
          Vec(6, {false, false, false, true}), Vec(7, {false, false, false, true})};
}

TEST(SelectSentencesTest, RedundancyReductionDemotesTwin) {
  const auto vectors = TwinFixture();
  const FeatureSet fs = Singletons({3, 3, 2, 3});
  SelectionOptions options;
  options.compression_rate = 0.25;
  options.redundancy_reduction = false;
  const SelectionResult plain = SelectSentences(vectors, fs, 8, options);
  EXPECT_EQ(plain.summary.selected, (std::vector<std::size_t>{0, 1}));
  options.redundancy_reduction = true;
  const SelectionResult rr = SelectSentences(vectors, fs, 8, options);
  EXPECT_EQ(rr.summary.selected, (std::vector<std::size_t>{0, 2}));
  ASSERT_EQ(rr.picks.size(), 2u);

  // Second pick against the linear-space oracle over the remaining vectors,
  // with frequencies counted among them.
  sumlens_testing::LinearModelInput in;
  for (const auto& v : vectors) {
    if (v.sentence_index != 0) in.vectors.push_back(v.values);
  }
  for (std::size_t k = 0; k < 4; ++k) {
    std::size_t on = 0;
    for (const auto& v : in.vectors) on += v[k] ? 1 : 0;
    in.freqs.push_back(std::max<std::size_t>(on, 1));
  }
  in.needed = 1;
  const long double want =
      sumlens_testing::LinearBayes(in, vectors[2].values, true).Odds();
  EXPECT_NEAR(rr.picks[1].log_odds, std::log(static_cast<double>(want)), 1e-9);
  const long double twin =
      sumlens_testing::LinearBayes(in, vectors[1].values, true).Odds();
  EXPECT_GT(want, twin);
}

TEST(SelectSentencesTest, SaturationSelectsAllWithWarning) {
  const auto vectors = TwinFixture();
  const FeatureSet fs = Singletons({3, 3, 2, 3});
  for (bool rr : {false, true}) {
    SelectionOptions options;
    options.compression_rate = 0.9;
    options.redundancy_reduction = rr;
    const SelectionResult r = SelectSentences(vectors, fs, 20, options);
    EXPECT_EQ(r.summary.target_count, 18u);
    EXPECT_EQ(r.summary.selected.size(), 8u);
    EXPECT_EQ(r.summary.warnings.size(), 1u);
  }
}

TEST(SelectSentencesTest, WithoutCoefficientsFallsBackToDocumentOrder) {
  const auto vectors = TwinFixture();
  SelectionOptions options;
  options.compression_rate = 0.3;
  options.use_coefficients = false;
  options.redundancy_reduction = false;
  const SelectionResult r =
      SelectSentences(vectors, Singletons({3, 3, 2, 3}), 10, options);
  EXPECT_EQ(r.summary.selected, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(SelectSentencesProperty, SizeDistinctnessAndDeterminism) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const ConceptAnnotations ann = sumlens_testing::RandomAnnotations(rng);
    const FeatureSet fs = SelectAll(ann);
    if (fs.empty()) continue;
    const auto vectors = BuildVectors(ann, fs);
    for (bool rr : {false, true}) {
      SelectionOptions options;
      options.compression_rate = 0.3;
      options.redundancy_reduction = rr;
      const auto a = SelectSentences(vectors, fs, ann.sentence_count(), options);
      const auto b = SelectSentences(vectors, fs, ann.sentence_count(), options);
      EXPECT_EQ(a.summary.selected, b.summary.selected);
      const std::set<std::size_t> unique(a.summary.selected.begin(),
                                         a.summary.selected.end());
      EXPECT_EQ(unique.size(), a.summary.selected.size());
      EXPECT_EQ(a.summary.selected.size(),
                std::min(a.summary.target_count, vectors.size()));
      EXPECT_TRUE(std::is_sorted(a.summary.selected.begin(),
                                 a.summary.selected.end()));
    }
  }
}

TEST(SelectSentencesProperty, CommonLikelihoodScaleKeepsRanking) {
  // Scaling both classes' likelihoods by one constant shifts every log-odds
  // by the same amount; the argmax is unchanged.
  const auto vectors = TwinFixture();
  const FeatureSet fs = Singletons({3, 3, 2, 3});
  const ClassifierModel model = EstimateModel(vectors, fs, 0.25, 8);
  std::vector<double> base;
  for (const auto& v : vectors) base.push_back(Por(v, model, true).log_odds);
  const double c = std::log(0.37);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const double yes = LogPosterior(vectors[i], model, SummaryClass::kYes, true) + c;
    const double no = LogPosterior(vectors[i], model, SummaryClass::kNo, true) + c;
    EXPECT_NEAR(yes - no, base[i], 1e-12);
  }
}

TEST(GenerateSummaryTest, DocumentOrderJoinedByNewline) {
  const Document doc =
      ParseDocument("One a. Two b. Three c. Four d.", DocumentFormat::kPlain);
  Summary s;
  s.selected = {3, 1};
  EXPECT_EQ(GenerateSummary(s, doc), "Two b.\nFour d.");
  s.selected = {};
  EXPECT_EQ(GenerateSummary(s, doc), "");
  s.selected = {0, 1, 2, 3};
  EXPECT_EQ(GenerateSummary(s, doc), "One a.\nTwo b.\nThree c.\nFour d.");
}

}  // namespace
}  // namespace sumlens
