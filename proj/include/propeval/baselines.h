// Copyright 2026 The Propeval Authors.
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

#ifndef PROPEVAL_BASELINES_H_
#define PROPEVAL_BASELINES_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propeval/annotations.h"
#include "propeval/corpus.h"
#include "propeval/technique.h"

namespace propeval {

// ---------------------------------------------------------------------------
// Random span baseline for span identification.

struct RandomSiConfig {
  int spans_per_doc = 2;
  int max_len = 20;
  std::uint64_t seed = 0;
};

struct RandomSiResult {
  AnnotationSet spans;                // SI mode, ordered by document id
  std::vector<std::string> warnings;  // e.g. skipped empty documents
};

// For each document: pick a start uniformly in [0, length-1], then a length
// uniformly in [1, max_len]; the end is clamped to the document length.
// Each document draws from its own stream seeded by (seed, doc id).
RandomSiResult RandomSiBaseline(const Corpus &corpus,
                                const RandomSiConfig &cfg);

// Uniform integer in [0, bound) by rejection sampling; the sequence depends
// only on the 64-bit generator, not on the standard library.
std::uint64_t UniformBelow(std::uint64_t &state, std::uint64_t bound);

// SplitMix64 step.
std::uint64_t NextRandom(std::uint64_t &state);

// ---------------------------------------------------------------------------
// Fragment-length logistic regression for technique classification.

struct TrainConfig {
  double learning_rate = 0.1;
  int epochs = 500;
  double l2_penalty = 1e-4;
  std::uint64_t seed = 0;  // recorded only; training is deterministic
};

// Multinomial logistic regression over the standardized span length. One
// weight and bias per technique, classes in canonical order.
struct LengthLogRegModel {
  std::array<double, kNumTechniques> weights{};
  std::array<double, kNumTechniques> biases{};
  double mean = 0.0;
  double stddev = 1.0;
  TrainConfig config;

  // Softmax class probabilities for a span of `length` characters.
  std::array<double, kNumTechniques> Probabilities(double length) const;
  // Argmax; ties go to the earliest class in canonical order.
  Technique Predict(double length) const;

  // Parameter vector layout: weights[0..13] then biases[0..13].
  static constexpr std::size_t kNumParams = 2 * kNumTechniques;
  std::array<double, kNumParams> Parameters() const;
  void SetParameters(std::span<const double> params);
};

struct LengthInstance {
  double length = 0.0;
  Technique label = Technique::kLoadedLanguage;
};

std::vector<LengthInstance> LengthInstances(const AnnotationSet &train);

// Mean cross-entropy over the batch plus (l2/2) * sum of squared weights.
double LogRegLoss(const LengthLogRegModel &model,
                  std::span<const LengthInstance> batch);

// Analytic gradient of LogRegLoss, laid out like Parameters().
std::array<double, LengthLogRegModel::kNumParams> LogRegGradient(
    const LengthLogRegModel &model, std::span<const LengthInstance> batch);

struct FitResult {
  LengthLogRegModel model;
  std::vector<double> loss_history;  // loss before each epoch, then final
  double final_loss = 0.0;
};

// Full-batch gradient descent from zero parameters. Throws
// DegenerateFeatureError when fewer than two distinct lengths are present
// and Error on an invalid config or empty training set.
FitResult FitLengthLogReg(const AnnotationSet &train, const TrainConfig &cfg);
FitResult FitLengthLogReg(std::span<const LengthInstance> instances,
                          const TrainConfig &cfg);

// Labels every record with the model's prediction; result is TC mode.
AnnotationSet PredictLengthLogReg(const LengthLogRegModel &model,
                                  const AnnotationSet &spans);

std::string ModelToJson(const LengthLogRegModel &model);
LengthLogRegModel ModelFromJson(std::string_view json);

}  // namespace propeval

#endif  // PROPEVAL_BASELINES_H_
