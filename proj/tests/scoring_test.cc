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
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "oracles.h"
#include "propeval/error.h"
#include "propeval/parallel.h"
#include "propeval/scoring.h"
#include "propeval/validate.h"

namespace propeval {
namespace {

using testing::MakeCorpus;
using testing::SiSet;
using testing::TcSet;

constexpr Technique A = Technique::kLoadedLanguage;
constexpr Technique B = Technique::kNameCallingLabeling;
constexpr Technique C = Technique::kDoubt;

Corpus TwoDocs() {
  return MakeCorpus({{1, std::string(40, 'a')}, {2, std::string(40, 'b')}});
}

TEST_CASE("SI identity and empty predictions") {
  Corpus corpus = TwoDocs();
  AnnotationSet gold = SiSet({{1, 0, 10}, {1, 5, 20}, {2, 3, 9}});
  SiScore same = ScoreSi(gold, gold, corpus);
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f1 == 1.0);

  AnnotationSet none;
  SiScore empty = ScoreSi(gold, none, corpus);
  CHECK(empty.precision == 0.0);
  CHECK(empty.recall == 0.0);
  CHECK(empty.f1 == 0.0);
  CHECK(empty.gold_spans == 2);
  CHECK(empty.pred_spans == 0);

  SiScore no_gold = ScoreSi(none, gold, corpus);
  CHECK(no_gold.recall == 0.0);
  CHECK(no_gold.f1 == 0.0);
}

TEST_CASE("SI partial overlap under both conventions") {
  Corpus corpus = TwoDocs();
  AnnotationSet gold = SiSet({{1, 0, 10}});
  AnnotationSet pred = SiSet({{1, 0, 5}});
  SiScore corrected = ScoreSi(gold, pred, corpus, EqConvention::kCorrected);
  CHECK(corrected.precision == 1.0);
  CHECK(corrected.recall == 0.5);
  CHECK(corrected.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  SiScore literal = ScoreSi(gold, pred, corpus, EqConvention::kLiteralPaper);
  CHECK(literal.precision == 0.5);
  CHECK(literal.recall == 1.0);
  CHECK(literal.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(literal.convention == EqConvention::kLiteralPaper);
}

TEST_CASE("SI two documents, one unmatched gold") {
  Corpus corpus = TwoDocs();
  AnnotationSet gold = SiSet({{1, 2, 12}, {2, 5, 15}});
  AnnotationSet pred = SiSet({{1, 2, 12}});
  SiScore s = ScoreSi(gold, pred, corpus);
  CHECK(s.precision == 1.0);
  CHECK(s.recall == 0.5);
  CHECK(s.f1 == doctest::Approx(2.0 / 3.0));
  CHECK(s.per_document.at(1).f1 == 1.0);
  CHECK(s.per_document.at(2).recall == 0.0);
}

TEST_CASE("SI strict containment under the corrected convention") {
  Corpus corpus = TwoDocs();
  AnnotationSet outer = SiSet({{1, 5, 30}});
  AnnotationSet inner = SiSet({{1, 10, 20}});
  CHECK(ScoreSi(outer, inner, corpus).precision == 1.0);
  CHECK(ScoreSi(inner, outer, corpus).recall == 1.0);
}

TEST_CASE("SI merges overlapping gold of different techniques") {
  Corpus corpus = TwoDocs();
  AnnotationSet gold = TcSet({{1, A, 0, 10}, {1, B, 5, 15}});
  AnnotationSet pred = SiSet({{1, 0, 15}});
  SiScore s = ScoreSi(gold, pred, corpus);
  CHECK(s.gold_spans == 1);
  CHECK(s.f1 == 1.0);
}

TEST_CASE("SI rejects invalid input") {
  Corpus corpus = TwoDocs();
  AnnotationSet gold = SiSet({{1, 0, 10}});
  try {
    ScoreSi(gold, SiSet({{9, 0, 3}}), corpus);
    FAIL("expected InvalidInputError");
  } catch (const InvalidInputError &e) {
    CHECK_FALSE(e.report().ok());
    CHECK(e.report().errors[0].kind == "unknown-document");
  }
  CHECK_THROWS_AS(ScoreSi(gold, SiSet({{1, 0, 41}}), corpus), InvalidInputError);
}

TEST_CASE("SI matches the brute-force oracle and stays within [0, 1]") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> ndocs(1, 4);
  std::uniform_int_distribution<int> count(0, 8);
  for (int trial = 0; trial < 300; ++trial) {
    Corpus corpus = testing::RandomCorpus(rng, ndocs(rng), 1, 500);
    std::map<std::int64_t, std::vector<Span>> gold, pred;
    std::map<std::int64_t, std::int64_t> lengths;
    for (const auto &[id, doc] : corpus) {
      lengths[id] = doc.length();
      gold[id] = testing::RandomSpans(rng, doc.length(), count(rng), 60);
      pred[id] = testing::RandomSpans(rng, doc.length(), count(rng), 60);
    }
    for (EqConvention conv : {EqConvention::kCorrected, EqConvention::kLiteralPaper}) {
      const SiScore s = ScoreSiSpans(gold, pred, conv);
      const auto brute = testing::BruteForceSi(gold, pred, lengths, conv);
      CHECK(std::abs(s.precision - brute.precision) < 1e-9);
      CHECK(std::abs(s.recall - brute.recall) < 1e-9);
      CHECK(std::abs(s.f1 - brute.f1) < 1e-9);
      // The literal convention divides by the other side's length, so only
      // the corrected one is bounded by 1.
      if (conv == EqConvention::kCorrected) {
        CHECK(s.precision <= 1.0 + 1e-12);
        CHECK(s.recall <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("SI is invariant under record permutation and thread count") {
  std::mt19937_64 rng(5);
  Corpus corpus = testing::RandomCorpus(rng, 6, 50, 400);
  AnnotationSet gold, pred;
  for (const auto &[id, doc] : corpus) {
    for (const Span &s : testing::RandomSpans(rng, doc.length(), 6, 40)) {
      gold.records.push_back({id, s, {}, 0});
    }
    for (const Span &s : testing::RandomSpans(rng, doc.length(), 6, 40)) {
      pred.records.push_back({id, s, {}, 0});
    }
  }
  setenv("PROPEVAL_THREADS", "1", 1);
  const SiScore base = ScoreSi(gold, pred, corpus);
  for (const char *threads : {"4", "8"}) {
    setenv("PROPEVAL_THREADS", threads, 1);
    std::shuffle(gold.records.begin(), gold.records.end(), rng);
    std::shuffle(pred.records.begin(), pred.records.end(), rng);
    const SiScore s = ScoreSi(gold, pred, corpus);
    CHECK(std::abs(s.f1 - base.f1) < 1e-12);
    CHECK(std::abs(s.precision - base.precision) < 1e-12);
  }
  unsetenv("PROPEVAL_THREADS");
}

TEST_CASE("ResolveIdenticalSpans") {
  std::vector<Technique> g1{Technique::kRepetition, Technique::kDoubt};
  std::vector<Technique> p1{Technique::kDoubt, Technique::kRepetition};
  CHECK(ResolveIdenticalSpans(g1, p1) == 2);
  CHECK(ResolveIdenticalSpans(std::vector<Technique>{A}, std::vector<Technique>{B}) == 0);
  std::vector<Technique> g3{A, A, B};
  std::vector<Technique> p3{A, B, B};
  CHECK(ResolveIdenticalSpans(g3, p3) == 2);
  CHECK(testing::BruteForceBestMatch(g3, p3) == 2);
  CHECK_THROWS_AS(ResolveIdenticalSpans(g3, std::vector<Technique>{A}),
                  MissingPredictionError);
}

TEST_CASE("ResolveIdenticalSpans equals exhaustive search on small groups") {
  std::mt19937_64 rng(17);
  // Few distinct labels so collisions are common.
  std::uniform_int_distribution<int> label(0, 3);
  for (int size = 1; size <= 6; ++size) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Technique> g, p;
      for (int i = 0; i < size; ++i) {
        g.push_back(static_cast<Technique>(label(rng)));
        p.push_back(static_cast<Technique>(label(rng)));
      }
      CHECK(ResolveIdenticalSpans(g, p) == testing::BruteForceBestMatch(g, p));
    }
  }
}

TEST_CASE("TC identity") {
  AnnotationSet gold = TcSet({{1, A, 0, 5}, {1, B, 0, 5}, {2, C, 3, 9}});
  TcScore s = ScoreTc(gold, gold);
  CHECK(s.micro_f1 == 1.0);
  CHECK(s.matched == 3);
  CHECK(s.per_class[Index(A)].f1 == 1.0);
  CHECK(s.per_class[Index(B)].f1 == 1.0);
  CHECK(s.per_class[Index(C)].f1 == 1.0);
  CHECK(s.per_class[Index(Technique::kSlogans)].f1 == 0.0);
}

TEST_CASE("TC hand-counted per-class scores") {
  AnnotationSet gold = TcSet({{1, A, 0, 5}, {1, A, 6, 9}, {1, B, 10, 14}});
  AnnotationSet pred = TcSet({{1, A, 0, 5}, {1, B, 6, 9}, {1, B, 10, 14}});
  TcScore s = ScoreTc(gold, pred);
  CHECK(s.micro_f1 == doctest::Approx(2.0 / 3.0));
  // A: tp 1, fp 0, fn 1. B: tp 1, fp 1, fn 0.
  CHECK(s.per_class[Index(A)].tp == 1);
  CHECK(s.per_class[Index(A)].fn == 1);
  CHECK(s.per_class[Index(A)].f1 == doctest::Approx(2.0 / 3.0));
  CHECK(s.per_class[Index(B)].fp == 1);
  CHECK(s.per_class[Index(B)].f1 == doctest::Approx(2.0 / 3.0));
  std::int64_t tp = 0;
  for (const auto &c : s.per_class) tp += c.tp;
  CHECK(tp == s.matched);
}

TEST_CASE("TC ignores prediction order") {
  AnnotationSet gold = TcSet({{1, Technique::kRepetition, 0, 5},
                              {1, Technique::kDoubt, 0, 5},
                              {2, A, 1, 4}});
  AnnotationSet pred = TcSet({{2, A, 1, 4},
                              {1, Technique::kDoubt, 0, 5},
                              {1, Technique::kRepetition, 0, 5}});
  CHECK(ScoreTc(gold, pred).micro_f1 == 1.0);
}

TEST_CASE("TC requires the gold key multiset") {
  AnnotationSet gold = TcSet({{1, A, 0, 5}, {1, B, 0, 5}});
  AnnotationSet short_pred = TcSet({{1, A, 0, 5}});
  try {
    ScoreTc(gold, short_pred);
    FAIL("expected MissingPredictionError");
  } catch (const MissingPredictionError &e) {
    REQUIRE(e.offending_keys().size() == 1);
    CHECK(e.offending_keys()[0].find("1:0-5") == 0);
  }
  AnnotationSet extra = TcSet({{1, A, 0, 5}, {1, B, 0, 5}, {3, A, 0, 1}});
  CHECK_THROWS_AS(ScoreTc(gold, extra), MissingPredictionError);
}

TEST_CASE("TC micro-F1 equals accuracy when keys are unique") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> label(0, kNumTechniques - 1);
  for (int trial = 0; trial < 50; ++trial) {
    AnnotationSet gold, pred;
    gold.mode = pred.mode = Mode::kTc;
    int correct = 0;
    for (int i = 0; i < 40; ++i) {
      const auto g = static_cast<Technique>(label(rng));
      const auto p = static_cast<Technique>(label(rng));
      correct += g == p;
      gold.records.push_back({1, {i, i + 1}, g, 0});
      pred.records.push_back({1, {i, i + 1}, p, 0});
    }
    CHECK(ScoreTc(gold, pred).micro_f1 == doctest::Approx(correct / 40.0));
  }
}

TEST_CASE("score reports") {
  Corpus corpus = TwoDocs();
  SiScore s = ScoreSi(SiSet({{1, 0, 10}}), SiSet({{1, 0, 5}}), corpus);
  const std::string json = SiScoreToJson(s, true);
  auto j = nlohmann::json::parse(json);
  CHECK(j["precision"] == 1.0);
  CHECK(j["recall"] == 0.5);
  CHECK(j["f1"] == 0.66667);
  CHECK(j["convention"] == "corrected");
  CHECK(j["per_document"]["1"]["f1"] == 0.66667);
  CHECK(SiScoreToText(s) == "# convention: corrected\nF1=0.66667\nP=1.00000 R=0.50000\n");

  SiScore back = SiScoreFromJson(json);
  CHECK(back.precision == RoundReported(s.precision));
  CHECK(back.f1 == RoundReported(s.f1));
  CHECK(back.convention == s.convention);
  CHECK(SiScoreToJson(back) == SiScoreToJson(s));

  AnnotationSet gold = TcSet({{1, A, 0, 5}, {1, A, 6, 9}, {1, B, 10, 14}});
  AnnotationSet pred = TcSet({{1, A, 0, 5}, {1, B, 6, 9}, {1, B, 10, 14}});
  TcScore t = ScoreTc(gold, pred);
  const std::string tjson = TcScoreToJson(t);
  auto tj = nlohmann::json::parse(tjson);
  CHECK(tj["f1"] == 0.66667);
  CHECK(tj["per_class"]["Loaded_Language"]["tp"] == 1);
  CHECK(TcScoreToJson(TcScoreFromJson(tjson)) == tjson);
  CHECK_THROWS_AS(SiScoreFromJson("{"), ParseError);
}

TEST_CASE("convention names") {
  CHECK(ParseConvention("corrected") == EqConvention::kCorrected);
  CHECK(ParseConvention("literal-paper") == EqConvention::kLiteralPaper);
  CHECK_FALSE(ParseConvention("other").has_value());
  CHECK(HarmonicMean(0.0, 0.0) == 0.0);
}

}  // namespace
}  // namespace propeval
