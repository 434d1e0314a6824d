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

#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "propeval/baselines.h"
#include "propeval/error.h"
#include "propeval/validate.h"

namespace propeval {
namespace {

using testing::MakeCorpus;
using testing::TcSet;

constexpr Technique A = Technique::kLoadedLanguage;
constexpr Technique B = Technique::kDoubt;

std::vector<LengthInstance> AllClassInstances(std::mt19937_64 &rng, int per_class) {
  // Overlapping length ranges keep the problem non-separable, so every
  // parameter has a finite optimum.
  std::vector<LengthInstance> out;
  for (Technique t : AllTechniques()) {
    std::uniform_int_distribution<int> len(1 + 3 * Index(t), 40 + 3 * Index(t));
    for (int i = 0; i < per_class; ++i) out.push_back({double(len(rng)), t});
  }
  return out;
}

double Norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

TEST_CASE("random baseline is deterministic and stays in bounds") {
  Corpus corpus = MakeCorpus({{1, std::string(10, 'x')},
                              {2, std::string(300, 'y')},
                              {3, std::string(1, 'z')}});
  RandomSiConfig cfg;
  cfg.seed = 42;
  cfg.spans_per_doc = 50;
  const RandomSiResult a = RandomSiBaseline(corpus, cfg);
  const RandomSiResult b = RandomSiBaseline(corpus, cfg);
  CHECK(SerializeSpans(a.spans) == SerializeSpans(b.spans));
  CHECK(a.spans.records.size() == 150);
  CHECK(a.warnings.empty());
  for (const Annotation &r : a.spans.records) {
    const std::int64_t len = corpus.Find(r.doc_id)->length();
    CHECK(r.span.start >= 0);
    CHECK(r.span.start < r.span.end);
    CHECK(r.span.end <= len);
    CHECK(r.span.length() <= cfg.max_len);
  }
  CHECK(Validate(corpus, a.spans).ok());

  cfg.seed = 43;
  CHECK(SerializeSpans(RandomSiBaseline(corpus, cfg).spans) !=
        SerializeSpans(a.spans));
}

TEST_CASE("random baseline streams depend on document id only") {
  Corpus one = MakeCorpus({{7, std::string(500, 'a')}});
  Corpus many = MakeCorpus({{3, std::string(80, 'b')},
                            {7, std::string(500, 'a')},
                            {9, std::string(60, 'c')}});
  RandomSiConfig cfg;
  cfg.seed = 1;
  std::vector<Span> alone, together;
  for (const auto &r : RandomSiBaseline(one, cfg).spans.records) alone.push_back(r.span);
  for (const auto &r : RandomSiBaseline(many, cfg).spans.records) {
    if (r.doc_id == 7) together.push_back(r.span);
  }
  CHECK(alone == together);
}

TEST_CASE("random baseline skips empty documents") {
  Corpus corpus = MakeCorpus({{1, ""}, {2, "abc"}});
  const RandomSiResult r = RandomSiBaseline(corpus, {});
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("1") != std::string::npos);
  for (const auto &a : r.spans.records) CHECK(a.doc_id == 2);
  CHECK_THROWS_AS(RandomSiBaseline(Corpus{}, {}), EmptyCorpusError);
}

TEST_CASE("UniformBelow stays below the bound") {
  std::uint64_t state = 5;
  std::array<int, 7> hist{};
  for (int i = 0; i < 7000; ++i) {
    const std::uint64_t v = UniformBelow(state, 7);
    REQUIRE(v < 7);
    ++hist[v];
  }
  for (int h : hist) CHECK(h > 800);
}

TEST_CASE("single-class training predicts that class everywhere") {
  std::vector<LengthInstance> train;
  for (int len : {3, 5, 9, 20, 44}) train.push_back({double(len), B});
  const FitResult fit = FitLengthLogReg(train, {});
  for (double len : {1.0, 10.0, 100.0, 5000.0}) CHECK(fit.model.Predict(len) == B);
}

TEST_CASE("synthetic length-separable data is learned") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> short_len(3, 8), long_len(40, 60);
  std::vector<LengthInstance> train;
  for (int i = 0; i < 200; ++i) {
    train.push_back({double(short_len(rng)), A});
    train.push_back({double(long_len(rng)), B});
  }
  const FitResult fit = FitLengthLogReg(train, {});
  int correct = 0;
  for (const auto &x : train) correct += fit.model.Predict(x.length) == x.label;
  CHECK(correct / double(train.size()) >= 0.95);
  CHECK(fit.model.stddev > 0.0);
}

TEST_CASE("analytic gradient matches central differences") {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_int_distribution<int> len(1, 200), label(0, kNumTechniques - 1);
  constexpr double kStep = 1e-5;
  for (int point = 0; point < 20; ++point) {
    std::vector<LengthInstance> batch;
    for (int i = 0; i < 20; ++i) {
      batch.push_back({double(len(rng)), static_cast<Technique>(label(rng))});
    }
    LengthLogRegModel model;
    model.mean = 60.0;
    model.stddev = 45.0;
    model.config.l2_penalty = 0.01;
    std::array<double, LengthLogRegModel::kNumParams> params;
    for (double &p : params) p = normal(rng);
    model.SetParameters(params);
    const auto grad = LogRegGradient(model, batch);
    for (std::size_t i = 0; i < params.size(); ++i) {
      auto plus = params, minus = params;
      plus[i] += kStep;
      minus[i] -= kStep;
      LengthLogRegModel mp = model, mm = model;
      mp.SetParameters(plus);
      mm.SetParameters(minus);
      const double numeric =
          (LogRegLoss(mp, batch) - LogRegLoss(mm, batch)) / (2 * kStep);
      const double scale = std::max({std::abs(grad[i]), std::abs(numeric), 1e-6});
      CHECK(std::abs(grad[i] - numeric) / scale < 1e-4);
    }
  }
}

TEST_CASE("gradient vanishes at a converged fit") {
  std::mt19937_64 rng(8);
  const auto train = AllClassInstances(rng, 30);
  TrainConfig cfg;
  cfg.learning_rate = 1.0;
  cfg.epochs = 20000;
  const FitResult fit = FitLengthLogReg(train, cfg);
  const auto grad = LogRegGradient(fit.model, train);
  CHECK(Norm(grad) < 1e-3);
}

TEST_CASE("bias gradients are symmetric for a balanced equal-length batch") {
  std::vector<LengthInstance> batch{{12.0, A}, {12.0, B}, {12.0, A}, {12.0, B}};
  LengthLogRegModel model;
  model.mean = 12.0;
  model.stddev = 3.0;
  auto g = LogRegGradient(model, batch);
  const std::size_t ba = kNumTechniques + Index(A);
  const std::size_t bb = kNumTechniques + Index(B);
  CHECK(g[ba] == doctest::Approx(g[bb]).epsilon(1e-15));
  double sum = 0.0;
  for (std::size_t i = kNumTechniques; i < g.size(); ++i) sum += g[i];
  CHECK(std::abs(sum) < 1e-15);

  // Restricted to the two present classes, a bias offset gives exactly
  // opposite gradients.
  for (std::size_t c = 0; c < kNumTechniques; ++c) model.biases[c] = -60.0;
  model.biases[Index(A)] = 0.4;
  model.biases[Index(B)] = -0.4;
  g = LogRegGradient(model, batch);
  CHECK(g[ba] > 0.0);
  CHECK(g[ba] == doctest::Approx(-g[bb]).epsilon(1e-12));
  for (std::size_t c = 0; c < kNumTechniques; ++c) CHECK(g[c] == 0.0);
}

TEST_CASE("training loss does not increase at default settings") {
  const AnnotationSet train = ParseSpanFile(testing::Fixture("mini/gold_tc.tsv"), Mode::kTc);
  const FitResult fit = FitLengthLogReg(train, {});
  REQUIRE(fit.loss_history.size() == 501);
  for (std::size_t i = 1; i < fit.loss_history.size(); ++i) {
    CHECK(fit.loss_history[i] <= fit.loss_history[i - 1] + 1e-12);
  }
  CHECK(fit.final_loss == fit.loss_history.back());
  CHECK(fit.final_loss < fit.loss_history.front());
}

TEST_CASE("fitting errors") {
  std::vector<LengthInstance> same{{5.0, A}, {5.0, B}};
  CHECK_THROWS_AS(FitLengthLogReg(same, {}), DegenerateFeatureError);
  std::vector<LengthInstance> ok{{5.0, A}, {6.0, B}};
  TrainConfig bad;
  bad.epochs = 0;
  CHECK_THROWS_AS(FitLengthLogReg(ok, bad), Error);
  bad = {};
  bad.learning_rate = 0.0;
  CHECK_THROWS_AS(FitLengthLogReg(ok, bad), Error);
}

TEST_CASE("probabilities form a distribution") {
  std::mt19937_64 rng(4);
  const FitResult fit = FitLengthLogReg(AllClassInstances(rng, 5), {});
  for (double len : {1.0, 17.0, 250.0}) {
    const auto p = fit.model.Probabilities(len);
    double sum = 0.0;
    for (double x : p) {
      CHECK(x >= 0.0);
      sum += x;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hand-evaluated two-class softmax") {
  LengthLogRegModel model;
  model.mean = 20.0;
  model.stddev = 5.0;
  for (double &b : model.biases) b = -100.0;
  model.weights[Index(A)] = -1.5;
  model.biases[Index(A)] = 0.2;
  model.weights[Index(B)] = 0.5;
  model.biases[Index(B)] = 0.1;
  // z = (10 - 20) / 5 = -2; logits 3.2 and -0.9.
  const double pa = 1.0 / (1.0 + std::exp(-0.9 - 3.2));
  const auto p = model.Probabilities(10.0);
  CHECK(p[Index(A)] == doctest::Approx(pa).epsilon(1e-9));
  CHECK(p[Index(B)] == doctest::Approx(1.0 - pa).epsilon(1e-9));
  CHECK(model.Predict(10.0) == A);
  // z = 2 at length 30; logits -2.8 and 1.1.
  CHECK(model.Predict(30.0) == B);
}

TEST_CASE("prediction depends on span length only") {
  LengthLogRegModel model;
  model.mean = 20.0;
  model.stddev = 10.0;
  model.weights[Index(B)] = 3.0;  // favours long spans
  Corpus corpus = MakeCorpus({{1, std::string(100, 'a')}, {2, std::string(100, 'b')}});
  AnnotationSet spans = testing::SiSet({{1, 0, 5}, {1, 10, 90}, {2, 3, 8}, {2, 40, 60}});
  const AnnotationSet out = PredictLengthLogReg(model, spans);
  CHECK(out.mode == Mode::kTc);
  REQUIRE(out.records.size() == 4);
  CHECK(out.records[1].technique == B);
  CHECK(out.records[0].technique == out.records[2].technique);

  AnnotationSet moved = spans;
  for (auto &r : moved.records) r.doc_id = r.doc_id == 1 ? 2 : 1;
  const AnnotationSet out2 = PredictLengthLogReg(model, moved);
  for (std::size_t i = 0; i < out.records.size(); ++i) {
    CHECK(out.records[i].technique == out2.records[i].technique);
  }
  // With all logits equal, the earliest class wins.
  CHECK(LengthLogRegModel{}.Predict(7.0) == Technique::kLoadedLanguage);
}

TEST_CASE("model JSON round trip") {
  std::mt19937_64 rng(6);
  TrainConfig cfg;
  cfg.epochs = 50;
  cfg.seed = 99;
  const FitResult fit = FitLengthLogReg(AllClassInstances(rng, 4), cfg);
  const std::string json = ModelToJson(fit.model);
  const LengthLogRegModel back = ModelFromJson(json);
  CHECK(back.Parameters() == fit.model.Parameters());
  CHECK(back.mean == fit.model.mean);
  CHECK(back.stddev == fit.model.stddev);
  CHECK(back.config.seed == 99);
  CHECK(ModelToJson(back) == json);
  CHECK_THROWS_AS(ModelFromJson("{\"classes\": []}"), ParseError);
}

}  // namespace
}  // namespace propeval
