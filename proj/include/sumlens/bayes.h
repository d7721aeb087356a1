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

// Unsupervised naive Bayes sentence classifier.
//
// Every sentence becomes a boolean vector over the selected features. The
// prior P(Yes) is the share of vectors that must end up in the summary, and
// the likelihood of a feature being present is its empirical rate d over the
// vectors, for both classes. Frequency coefficients then reward presence of
// frequent features for class Yes and punish it for class No:
//
//   C_yes(True) = freq, C_yes(False) = 1/freq
//   C_no(True)  = 1/freq, C_no(False) = freq
//
// Sentences are ranked by the log posterior odds ratio. All arithmetic is in
// log space and likelihoods are clamped to [1/(2n), 1 - 1/(2n)].

#ifndef SUMLENS_BAYES_H_
#define SUMLENS_BAYES_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "sumlens/concepts.h"
#include "sumlens/document.h"
#include "sumlens/features.h"

namespace sumlens {

struct SentenceVector {
  std::size_t sentence_index = 0;
  std::vector<bool> values;  // one per feature, at least one true
};

// One vector per sentence of `ann` having at least one true feature. A
// multi-concept feature is true only when all its concepts occur.
// Throws Error(kNoClassifiableSentences) when no vector survives.
std::vector<SentenceVector> BuildVectors(const ConceptAnnotations& ann,
                                         const FeatureSet& fs);

// ceil(rate * total_sentences), computed so that exact decimal products such
// as 0.3 * 100 are not pushed up by rounding noise.
std::size_t SummaryLength(double rate, std::size_t total_sentences);

enum class SummaryClass { kYes, kNo };

struct FeatureModel {
  double d = 0.0;      // share of vectors where the feature is true
  std::size_t freq = 0;  // coefficient basis
  bool active = true;  // inactive features contribute nothing
};

struct ClassifierModel {
  double p_yes = 0.0;  // clamped
  double p_no = 0.0;
  double eps_p = 0.0;
  std::size_t vector_count = 0;
  std::size_t target_count = 0;  // N, sentences still to select
  std::vector<FeatureModel> features;

  double Clamp(double p) const;
  // Clamped likelihood of observing `value` for feature k; identical for
  // both classes.
  double Likelihood(std::size_t k, bool value, SummaryClass cls) const;
};

// Model over `vectors` for a document with `total_sentences` body sentences.
// Throws Error(kInvalidParameter) unless 0 < compression_rate < 1, and when
// `vectors` is empty.
ClassifierModel EstimateModel(std::span<const SentenceVector> vectors,
                              const FeatureSet& fs, double compression_rate,
                              std::size_t total_sentences);

// Model over an explicit vector subset with `needed` sentences to select and
// per-feature coefficient frequencies. Features with d == 0 are inactive.
ClassifierModel EstimateModelFor(std::span<const SentenceVector> vectors,
                                 std::span<const std::size_t> freqs,
                                 std::size_t needed);

// Throws Error(kDomainError) when freq == 0.
double Coefficient(bool value, std::size_t freq, SummaryClass cls);

double LogPosterior(const SentenceVector& v, const ClassifierModel& model,
                    SummaryClass cls, bool use_coefficients);

struct PorScore {
  std::size_t sentence_index = 0;
  double log_odds = 0.0;
};

// LogPosterior(Yes) - LogPosterior(No), accumulated term by term so the
// shared likelihood factors cancel exactly.
PorScore Por(const SentenceVector& v, const ClassifierModel& model,
             bool use_coefficients);

struct SelectionOptions {
  double compression_rate = 0.3;
  bool use_coefficients = true;
  bool redundancy_reduction = true;
};

struct Summary {
  std::vector<std::size_t> selected;  // ascending document order
  std::size_t target_count = 0;       // N from the compression rate
  std::vector<std::string> warnings;
};

struct SelectionResult {
  Summary summary;
  // Scores under the model over all vectors, in vector order.
  std::vector<PorScore> initial_scores;
  // Picks in selection order with the score they had when picked.
  std::vector<PorScore> picks;
};

// Without redundancy reduction the top min(N, |vectors|) vectors by log odds
// are taken (ties go to the earlier sentence). With it, one vector is picked
// per round and the model is re-estimated over the unpicked vectors: the
// prior becomes (N - t) / remaining, and each feature's rate and coefficient
// frequency are recounted without the picked sentences.
SelectionResult SelectSentences(std::span<const SentenceVector> vectors,
                                const FeatureSet& fs,
                                std::size_t total_sentences,
                                const SelectionOptions& options);

// Selected sentence texts in document order, one per line.
std::string GenerateSummary(const Summary& summary, const Document& doc);

}  // namespace sumlens

#endif  // SUMLENS_BAYES_H_
