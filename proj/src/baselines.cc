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

#include "propeval/baselines.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "json.hpp"
#include "propeval/error.h"
#include "propeval/parallel.h"

namespace propeval {

std::uint64_t NextRandom(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t UniformBelow(std::uint64_t &state, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = NextRandom(state);
    if (r >= threshold) return r % bound;
  }
}

RandomSiResult RandomSiBaseline(const Corpus &corpus,
                                const RandomSiConfig &cfg) {
  if (cfg.spans_per_doc < 1) throw Error("spans_per_doc must be >= 1");
  if (cfg.max_len < 1) throw Error("max_len must be >= 1");
  if (corpus.empty()) throw EmptyCorpusError("corpus has no documents");

  std::vector<const Document *> docs;
  for (const auto &[id, doc] : corpus) docs.push_back(&doc);
  std::vector<std::vector<Annotation>> per_doc(docs.size());

  ParallelFor(docs.size(), [&](std::size_t i) {
    const Document &doc = *docs[i];
    if (doc.length() == 0) return;
    std::uint64_t mix = static_cast<std::uint64_t>(doc.id);
    std::uint64_t state = cfg.seed ^ NextRandom(mix);
    for (int k = 0; k < cfg.spans_per_doc; ++k) {
      Annotation a;
      a.doc_id = doc.id;
      a.span.start = static_cast<std::int64_t>(
          UniformBelow(state, static_cast<std::uint64_t>(doc.length())));
      const auto len = 1 + static_cast<std::int64_t>(UniformBelow(
                               state, static_cast<std::uint64_t>(cfg.max_len)));
      a.span.end = std::min(a.span.start + len, doc.length());
      per_doc[i].push_back(a);
    }
  });

  RandomSiResult result;
  result.spans.mode = Mode::kSi;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i]->length() == 0) {
      result.warnings.push_back("skipping empty document " +
                                std::to_string(docs[i]->id));
    }
    for (const Annotation &a : per_doc[i]) result.spans.records.push_back(a);
  }
  return result;
}

std::array<double, kNumTechniques> LengthLogRegModel::Probabilities(
    double length) const {
  const double x = (length - mean) / stddev;
  std::array<double, kNumTechniques> z{};
  double top = -INFINITY;
  for (std::size_t c = 0; c < kNumTechniques; ++c) {
    z[c] = weights[c] * x + biases[c];
    top = std::max(top, z[c]);
  }
  double sum = 0.0;
  for (double &v : z) {
    v = std::exp(v - top);
    sum += v;
  }
  for (double &v : z) v /= sum;
  return z;
}

Technique LengthLogRegModel::Predict(double length) const {
  const auto p = Probabilities(length);
  return static_cast<Technique>(std::max_element(p.begin(), p.end()) -
                                p.begin());
}

std::array<double, LengthLogRegModel::kNumParams>
LengthLogRegModel::Parameters() const {
  std::array<double, kNumParams> params{};
  std::copy(weights.begin(), weights.end(), params.begin());
  std::copy(biases.begin(), biases.end(), params.begin() + kNumTechniques);
  return params;
}

void LengthLogRegModel::SetParameters(std::span<const double> params) {
  if (params.size() != kNumParams) throw Error("wrong parameter count");
  std::copy_n(params.begin(), kNumTechniques, weights.begin());
  std::copy_n(params.begin() + kNumTechniques, kNumTechniques, biases.begin());
}

std::vector<LengthInstance> LengthInstances(const AnnotationSet &train) {
  std::vector<LengthInstance> out;
  out.reserve(train.size());
  for (const Annotation &a : train.records) {
    if (!a.technique) throw Error("training records need techniques");
    out.push_back({static_cast<double>(a.span.length()), *a.technique});
  }
  return out;
}

double LogRegLoss(const LengthLogRegModel &model,
                  std::span<const LengthInstance> batch) {
  if (batch.empty()) throw Error("empty batch");
  double loss = 0.0;
  for (const LengthInstance &inst : batch) {
    const double x = (inst.length - model.mean) / model.stddev;
    // log-sum-exp for a stable log softmax
    double top = -INFINITY;
    for (std::size_t c = 0; c < kNumTechniques; ++c) {
      top = std::max(top, model.weights[c] * x + model.biases[c]);
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < kNumTechniques; ++c) {
      sum += std::exp(model.weights[c] * x + model.biases[c] - top);
    }
    const std::size_t y = Index(inst.label);
    loss += top + std::log(sum) - (model.weights[y] * x + model.biases[y]);
  }
  loss /= static_cast<double>(batch.size());
  double reg = 0.0;
  for (double w : model.weights) reg += w * w;
  return loss + 0.5 * model.config.l2_penalty * reg;
}

std::array<double, LengthLogRegModel::kNumParams> LogRegGradient(
    const LengthLogRegModel &model, std::span<const LengthInstance> batch) {
  if (batch.empty()) throw Error("empty batch");
  std::array<double, LengthLogRegModel::kNumParams> grad{};
  for (const LengthInstance &inst : batch) {
    const double x = (inst.length - model.mean) / model.stddev;
    auto p = model.Probabilities(inst.length);
    p[Index(inst.label)] -= 1.0;
    for (std::size_t c = 0; c < kNumTechniques; ++c) {
      grad[c] += p[c] * x;
      grad[kNumTechniques + c] += p[c];
    }
  }
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  for (double &g : grad) g *= inv_n;
  for (std::size_t c = 0; c < kNumTechniques; ++c) {
    grad[c] += model.config.l2_penalty * model.weights[c];
  }
  return grad;
}

FitResult FitLengthLogReg(std::span<const LengthInstance> instances,
                          const TrainConfig &cfg) {
  if (!(cfg.learning_rate > 0.0)) throw Error("learning_rate must be > 0");
  if (cfg.epochs < 1) throw Error("epochs must be >= 1");
  if (cfg.l2_penalty < 0.0) throw Error("l2_penalty must be >= 0");
  if (instances.empty()) throw Error("empty training set");

  std::set<double> distinct;
  double sum = 0.0;
  for (const LengthInstance &inst : instances) {
    distinct.insert(inst.length);
    sum += inst.length;
  }
  if (distinct.size() < 2) {
    throw DegenerateFeatureError(
        "training spans have a single distinct length; the length feature "
        "cannot be standardized");
  }

  FitResult fit;
  LengthLogRegModel &model = fit.model;
  model.config = cfg;
  const double n = static_cast<double>(instances.size());
  model.mean = sum / n;
  double sq = 0.0;
  for (const LengthInstance &inst : instances) {
    sq += (inst.length - model.mean) * (inst.length - model.mean);
  }
  model.stddev = std::sqrt(sq / n);

  fit.loss_history.reserve(static_cast<std::size_t>(cfg.epochs) + 1);
  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    fit.loss_history.push_back(LogRegLoss(model, instances));
    const auto grad = LogRegGradient(model, instances);
    auto params = model.Parameters();
    for (std::size_t i = 0; i < params.size(); ++i) {
      params[i] -= cfg.learning_rate * grad[i];
    }
    model.SetParameters(params);
  }
  fit.final_loss = LogRegLoss(model, instances);
  fit.loss_history.push_back(fit.final_loss);
  return fit;
}

FitResult FitLengthLogReg(const AnnotationSet &train, const TrainConfig &cfg) {
  const auto instances = LengthInstances(train);
  return FitLengthLogReg(instances, cfg);
}

AnnotationSet PredictLengthLogReg(const LengthLogRegModel &model,
                                  const AnnotationSet &spans) {
  AnnotationSet out;
  out.mode = Mode::kTc;
  out.records = spans.records;
  ParallelFor(out.records.size(), [&](std::size_t i) {
    Annotation &a = out.records[i];
    a.technique = model.Predict(static_cast<double>(a.span.length()));
  });
  return out;
}

std::string ModelToJson(const LengthLogRegModel &model) {
  nlohmann::ordered_json j;
  j["classes"] = nlohmann::ordered_json::array();
  for (Technique t : AllTechniques()) j["classes"].push_back(CanonicalToken(t));
  j["weights"] = model.weights;
  j["biases"] = model.biases;
  j["mean"] = model.mean;
  j["stddev"] = model.stddev;
  j["config"] = {{"learning_rate", model.config.learning_rate},
                 {"epochs", model.config.epochs},
                 {"l2_penalty", model.config.l2_penalty},
                 {"seed", model.config.seed}};
  return j.dump(2) + "\n";
}

LengthLogRegModel ModelFromJson(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    LengthLogRegModel model;
    const auto &classes = j.at("classes");
    const auto &weights = j.at("weights");
    const auto &biases = j.at("biases");
    if (classes.size() != kNumTechniques || weights.size() != kNumTechniques ||
        biases.size() != kNumTechniques) {
      throw ParseError("model must list " + std::to_string(kNumTechniques) +
                           " classes, weights and biases",
                       0);
    }
    // Rows may come in any class order; store them canonically.
    for (std::size_t i = 0; i < kNumTechniques; ++i) {
      auto t = ParseTechnique(classes[i].get<std::string>());
      if (!t) throw ParseError("unknown class in model", 0);
      model.weights[Index(*t)] = weights[i].get<double>();
      model.biases[Index(*t)] = biases[i].get<double>();
    }
    model.mean = j.at("mean").get<double>();
    model.stddev = j.at("stddev").get<double>();
    if (!(model.stddev > 0.0)) throw ParseError("model stddev must be > 0", 0);
    const auto &cfg = j.at("config");
    model.config.learning_rate = cfg.at("learning_rate").get<double>();
    model.config.epochs = cfg.at("epochs").get<int>();
    model.config.l2_penalty = cfg.at("l2_penalty").get<double>();
    model.config.seed = cfg.at("seed").get<std::uint64_t>();
    return model;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed model: ") + e.what(), 0);
  }
}

}  // namespace propeval
