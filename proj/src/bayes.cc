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

#include <algorithm>
#include <cmath>

#include "sumlens/error.h"

namespace sumlens {
namespace {

// ln C for a coefficient: +ln f or -ln f.
double LogCoefficient(bool value, std::size_t freq, SummaryClass cls) {
  const double log_freq = std::log(static_cast<double>(freq));
  const bool rewards = (cls == SummaryClass::kYes) == value;
  return rewards ? log_freq : -log_freq;
}

bool Better(const PorScore& a, const PorScore& b) {
  if (a.log_odds != b.log_odds) return a.log_odds > b.log_odds;
  return a.sentence_index < b.sentence_index;
}

void CheckFreq(std::size_t freq) {
  if (freq == 0) {
    throw Error(ErrorCode::kDomainError, "feature frequency must be >= 1");
  }
}

}  // namespace

std::vector<SentenceVector> BuildVectors(const ConceptAnnotations& ann,
                                         const FeatureSet& fs) {
  std::vector<SentenceVector> vectors;
  const auto sentence_concepts = ann.SentenceConcepts();
  for (std::size_t s = 0; s < sentence_concepts.size(); ++s) {
    const auto& present = sentence_concepts[s];
    SentenceVector v;
    v.sentence_index = s;
    v.values.reserve(fs.size());
    bool any = false;
    for (const Feature& f : fs.features) {
      const bool on = std::all_of(
          f.concepts.begin(), f.concepts.end(),
          [&](const std::string& c) { return present.count(c) > 0; });
      v.values.push_back(on);
      any = any || on;
    }
    if (any) vectors.push_back(std::move(v));
  }
  if (vectors.empty()) {
    throw Error(ErrorCode::kNoClassifiableSentences,
                "no sentence contains any selected feature");
  }
  return vectors;
}

std::size_t SummaryLength(double rate, std::size_t total_sentences) {
  const double exact = rate * static_cast<double>(total_sentences);
  const double n = std::ceil(exact - 1e-9 * std::max(1.0, exact));
  return static_cast<std::size_t>(std::max(n, 0.0));
}

double ClassifierModel::Clamp(double p) const {
  return std::clamp(p, eps_p, 1.0 - eps_p);
}

double ClassifierModel::Likelihood(std::size_t k, bool value,
                                   SummaryClass /*cls*/) const {
  const double d = features[k].d;
  return Clamp(value ? d : 1.0 - d);
}

ClassifierModel EstimateModelFor(std::span<const SentenceVector> vectors,
                                 std::span<const std::size_t> freqs,
                                 std::size_t needed) {
  if (vectors.empty()) {
    throw Error(ErrorCode::kNoClassifiableSentences, "no vectors to model");
  }
  ClassifierModel model;
  const std::size_t n = vectors.size();
  const double nd = static_cast<double>(n);
  model.vector_count = n;
  model.target_count = needed;
  model.eps_p = 1.0 / (2.0 * nd);
  model.p_yes = model.Clamp(static_cast<double>(std::min(needed, n)) / nd);
  model.p_no = 1.0 - model.p_yes;

  model.features.resize(freqs.size());
  for (std::size_t k = 0; k < freqs.size(); ++k) {
    std::size_t on = 0;
    for (const SentenceVector& v : vectors) on += v.values[k] ? 1 : 0;
    FeatureModel& fm = model.features[k];
    fm.d = static_cast<double>(on) / nd;
    fm.active = on > 0;
    fm.freq = std::max<std::size_t>(freqs[k], 1);
  }
  return model;
}

ClassifierModel EstimateModel(std::span<const SentenceVector> vectors,
                              const FeatureSet& fs, double compression_rate,
                              std::size_t total_sentences) {
  if (!(compression_rate > 0.0 && compression_rate < 1.0)) {
    throw Error(ErrorCode::kInvalidParameter,
                "compression rate must lie in (0, 1)");
  }
  std::vector<std::size_t> freqs;
  freqs.reserve(fs.size());
  for (const Feature& f : fs.features) {
    CheckFreq(f.freq);
    freqs.push_back(f.freq);
  }
  ClassifierModel model = EstimateModelFor(
      vectors, freqs, SummaryLength(compression_rate, total_sentences));
  // Every feature of the set takes part in the first model, even one no
  // vector carries.
  for (FeatureModel& fm : model.features) fm.active = true;
  return model;
}

double Coefficient(bool value, std::size_t freq, SummaryClass cls) {
  CheckFreq(freq);
  const double f = static_cast<double>(freq);
  const bool rewards = (cls == SummaryClass::kYes) == value;
  return rewards ? f : 1.0 / f;
}

double LogPosterior(const SentenceVector& v, const ClassifierModel& model,
                    SummaryClass cls, bool use_coefficients) {
  double log_p =
      std::log(cls == SummaryClass::kYes ? model.p_yes : model.p_no);
  for (std::size_t k = 0; k < model.features.size(); ++k) {
    const FeatureModel& fm = model.features[k];
    if (!fm.active) continue;
    log_p += std::log(model.Likelihood(k, v.values[k], cls));
    if (use_coefficients) log_p += LogCoefficient(v.values[k], fm.freq, cls);
  }
  return log_p;
}

PorScore Por(const SentenceVector& v, const ClassifierModel& model,
             bool use_coefficients) {
  double log_odds = std::log(model.p_yes) - std::log(model.p_no);
  for (std::size_t k = 0; k < model.features.size(); ++k) {
    const FeatureModel& fm = model.features[k];
    if (!fm.active) continue;
    const bool value = v.values[k];
    log_odds += std::log(model.Likelihood(k, value, SummaryClass::kYes)) -
                std::log(model.Likelihood(k, value, SummaryClass::kNo));
    if (use_coefficients) {
      log_odds += LogCoefficient(value, fm.freq, SummaryClass::kYes) -
                  LogCoefficient(value, fm.freq, SummaryClass::kNo);
    }
  }
  return {v.sentence_index, log_odds};
}

SelectionResult SelectSentences(std::span<const SentenceVector> vectors,
                                const FeatureSet& fs,
                                std::size_t total_sentences,
                                const SelectionOptions& options) {
  const ClassifierModel initial = EstimateModel(
      vectors, fs, options.compression_rate, total_sentences);

  SelectionResult result;
  Summary& summary = result.summary;
  summary.target_count = initial.target_count;
  const std::size_t take = std::min(initial.target_count, vectors.size());
  if (initial.target_count > vectors.size()) {
    summary.warnings.push_back(
        "summary length " + std::to_string(initial.target_count) +
        " exceeds the " + std::to_string(vectors.size()) +
        " classifiable sentences; all of them are selected");
  }

  for (const SentenceVector& v : vectors) {
    result.initial_scores.push_back(Por(v, initial, options.use_coefficients));
  }

  if (!options.redundancy_reduction) {
    std::vector<PorScore> ranked = result.initial_scores;
    std::sort(ranked.begin(), ranked.end(), Better);
    ranked.resize(take);
    result.picks = ranked;
  } else {
    std::vector<std::size_t> base_freqs;
    for (const Feature& f : fs.features) base_freqs.push_back(f.freq);
    std::vector<std::size_t> picked_on(fs.size(), 0);

    std::vector<SentenceVector> remaining(vectors.begin(), vectors.end());
    for (std::size_t t = 0; t < take; ++t) {
      std::vector<std::size_t> freqs(fs.size());
      for (std::size_t k = 0; k < fs.size(); ++k) {
        freqs[k] = base_freqs[k] > picked_on[k] ? base_freqs[k] - picked_on[k]
                                                : 1;
      }
      ClassifierModel model =
          EstimateModelFor(remaining, freqs, initial.target_count - t);
      if (t == 0) {
        for (FeatureModel& fm : model.features) fm.active = true;
      }
      std::size_t best = 0;
      PorScore best_score = Por(remaining[0], model, options.use_coefficients);
      for (std::size_t i = 1; i < remaining.size(); ++i) {
        PorScore s = Por(remaining[i], model, options.use_coefficients);
        if (Better(s, best_score)) {
          best = i;
          best_score = s;
        }
      }
      result.picks.push_back(best_score);
      for (std::size_t k = 0; k < fs.size(); ++k) {
        if (remaining[best].values[k]) ++picked_on[k];
      }
      remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
  }

  for (const PorScore& p : result.picks) {
    summary.selected.push_back(p.sentence_index);
  }
  std::sort(summary.selected.begin(), summary.selected.end());
  return result;
}

std::string GenerateSummary(const Summary& summary, const Document& doc) {
  std::vector<std::size_t> order = summary.selected;
  std::sort(order.begin(), order.end());
  std::string text;
  for (std::size_t i : order) {
    if (i >= doc.body_sentences.size()) {
      throw Error(ErrorCode::kInvalidParameter,
                  "summary references sentence " + std::to_string(i) +
                      " outside the document");
    }
    if (!text.empty()) text.push_back('\n');
    text += doc.body_sentences[i].text;
  }
  return text;
}

}  // namespace sumlens
