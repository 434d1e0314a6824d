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

#include "propeval/scoring.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "propeval/error.h"
#include "propeval/parallel.h"
#include "propeval/validate.h"

namespace propeval {
namespace {

using Json = nlohmann::ordered_json;

// Sums of overlap terms between two sorted, pairwise-disjoint span lists.
void AccumulateOverlaps(const std::vector<Span> &gold,
                        const std::vector<Span> &pred, EqConvention conv,
                        SiDocumentScore &doc) {
  std::size_t g = 0;
  std::size_t p = 0;
  while (g < gold.size() && p < pred.size()) {
    const Span &t = gold[g];
    const Span &s = pred[p];
    const auto overlap = OverlapLength(s, t);
    if (overlap > 0) {
      const double by_pred = static_cast<double>(overlap) /
                             static_cast<double>(s.length());
      const double by_gold = static_cast<double>(overlap) /
                             static_cast<double>(t.length());
      if (conv == EqConvention::kCorrected) {
        doc.precision_sum += by_pred;
        doc.recall_sum += by_gold;
      } else {
        doc.precision_sum += by_gold;
        doc.recall_sum += by_pred;
      }
    }
    // Advance whichever span ends first; the other may overlap the next.
    if (t.end <= s.end) {
      ++g;
    } else {
      ++p;
    }
  }
}

double Ratio(double num, std::int64_t den) {
  return den == 0 ? 0.0 : num / static_cast<double>(den);
}

}  // namespace

std::string_view ConventionName(EqConvention c) {
  return c == EqConvention::kCorrected ? "corrected" : "literal-paper";
}

std::optional<EqConvention> ParseConvention(std::string_view name) {
  if (name == "corrected") return EqConvention::kCorrected;
  if (name == "literal-paper") return EqConvention::kLiteralPaper;
  return std::nullopt;
}

double HarmonicMean(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

SiScore ScoreSiSpans(const std::map<std::int64_t, std::vector<Span>> &gold,
                     const std::map<std::int64_t, std::vector<Span>> &pred,
                     EqConvention conv) {
  std::vector<std::int64_t> doc_ids;
  for (const auto &[id, spans] : gold) doc_ids.push_back(id);
  for (const auto &[id, spans] : pred) {
    if (!gold.contains(id)) doc_ids.push_back(id);
  }
  std::sort(doc_ids.begin(), doc_ids.end());

  static const std::vector<Span> kNone;
  auto lookup = [](const auto &map, std::int64_t id) -> const std::vector<Span> & {
    auto it = map.find(id);
    return it == map.end() ? kNone : it->second;
  };

  std::vector<SiDocumentScore> docs(doc_ids.size());
  ParallelFor(doc_ids.size(), [&](std::size_t i) {
    const auto merged_gold = MergeSpans(lookup(gold, doc_ids[i]));
    const auto merged_pred = MergeSpans(lookup(pred, doc_ids[i]));
    SiDocumentScore &d = docs[i];
    d.gold_spans = static_cast<std::int64_t>(merged_gold.size());
    d.pred_spans = static_cast<std::int64_t>(merged_pred.size());
    AccumulateOverlaps(merged_gold, merged_pred, conv, d);
    d.precision = Ratio(d.precision_sum, d.pred_spans);
    d.recall = Ratio(d.recall_sum, d.gold_spans);
    d.f1 = HarmonicMean(d.precision, d.recall);
  });

  // Reduction in document order keeps the result schedule independent.
  SiScore score;
  score.convention = conv;
  double precision_sum = 0.0;
  double recall_sum = 0.0;
  for (std::size_t i = 0; i < doc_ids.size(); ++i) {
    precision_sum += docs[i].precision_sum;
    recall_sum += docs[i].recall_sum;
    score.pred_spans += docs[i].pred_spans;
    score.gold_spans += docs[i].gold_spans;
    score.per_document.emplace(doc_ids[i], docs[i]);
  }
  score.precision = Ratio(precision_sum, score.pred_spans);
  score.recall = Ratio(recall_sum, score.gold_spans);
  score.f1 = HarmonicMean(score.precision, score.recall);
  return score;
}

SiScore ScoreSi(const AnnotationSet &gold, const AnnotationSet &pred,
                const Corpus &corpus, EqConvention conv) {
  RequireValid(corpus, gold, "gold");
  RequireValid(corpus, pred, "prediction");
  return ScoreSiSpans(SpansByDocument(gold), SpansByDocument(pred), conv);
}

std::size_t ResolveIdenticalSpans(std::span<const Technique> gold,
                                  std::span<const Technique> pred) {
  if (gold.size() != pred.size()) {
    throw MissingPredictionError(
        "identical-span group has " + std::to_string(gold.size()) +
            " gold and " + std::to_string(pred.size()) + " predicted records",
        {});
  }
  std::array<std::size_t, kNumTechniques> g{};
  std::array<std::size_t, kNumTechniques> p{};
  for (Technique t : gold) ++g[Index(t)];
  for (Technique t : pred) ++p[Index(t)];
  std::size_t matched = 0;
  for (std::size_t c = 0; c < kNumTechniques; ++c) matched += std::min(g[c], p[c]);
  return matched;
}

TcScore ScoreTc(const AnnotationSet &gold, const AnnotationSet &pred) {
  auto group = [](const AnnotationSet &set, const char *what) {
    std::map<SpanKey, std::vector<Technique>> groups;
    for (const Annotation &a : set.records) {
      if (!a.technique) {
        throw ParseError(std::string(what) + " record " +
                             FormatKey({a.doc_id, a.span}) +
                             " has no technique",
                         a.line);
      }
      groups[{a.doc_id, a.span}].push_back(*a.technique);
    }
    return groups;
  };
  const auto gold_groups = group(gold, "gold");
  const auto pred_groups = group(pred, "prediction");

  std::vector<std::string> offending;
  for (const auto &[key, labels] : gold_groups) {
    auto it = pred_groups.find(key);
    const std::size_t have = it == pred_groups.end() ? 0 : it->second.size();
    if (have != labels.size()) {
      offending.push_back(FormatKey(key) + " (gold " +
                          std::to_string(labels.size()) + ", predicted " +
                          std::to_string(have) + ")");
    }
  }
  for (const auto &[key, labels] : pred_groups) {
    if (!gold_groups.contains(key)) {
      offending.push_back(FormatKey(key) + " (gold 0, predicted " +
                          std::to_string(labels.size()) + ")");
    }
  }
  if (!offending.empty()) {
    std::string msg = "predictions do not match the gold span list at " +
                      std::to_string(offending.size()) + " key(s): ";
    for (std::size_t i = 0; i < offending.size() && i < 5; ++i) {
      if (i) msg += ", ";
      msg += offending[i];
    }
    if (offending.size() > 5) msg += ", ...";
    throw MissingPredictionError(msg, std::move(offending));
  }

  TcScore score;
  score.total = static_cast<std::int64_t>(gold.size());
  for (const auto &[key, labels] : gold_groups) {
    const auto &predicted = pred_groups.at(key);
    score.matched += static_cast<std::int64_t>(
        ResolveIdenticalSpans(labels, predicted));
    std::array<std::int64_t, kNumTechniques> g{};
    std::array<std::int64_t, kNumTechniques> p{};
    for (Technique t : labels) ++g[Index(t)];
    for (Technique t : predicted) ++p[Index(t)];
    for (std::size_t c = 0; c < kNumTechniques; ++c) {
      const auto both = std::min(g[c], p[c]);
      score.per_class[c].tp += both;
      score.per_class[c].fp += p[c] - both;
      score.per_class[c].fn += g[c] - both;
    }
  }
  for (ClassScore &c : score.per_class) {
    const auto den = 2 * c.tp + c.fp + c.fn;
    c.f1 = den == 0 ? 0.0
                    : 2.0 * static_cast<double>(c.tp) / static_cast<double>(den);
  }
  score.micro_f1 = score.total == 0 ? 0.0
                                    : static_cast<double>(score.matched) /
                                          static_cast<double>(score.total);
  return score;
}

double RoundReported(double value) {
  return std::round(value * 1e5) / 1e5;
}

std::string SiScoreToJson(const SiScore &score, bool per_document) {
  Json j;
  j["precision"] = RoundReported(score.precision);
  j["recall"] = RoundReported(score.recall);
  j["f1"] = RoundReported(score.f1);
  j["convention"] = ConventionName(score.convention);
  j["pred_spans"] = score.pred_spans;
  j["gold_spans"] = score.gold_spans;
  if (per_document) {
    Json docs = Json::object();
    for (const auto &[id, d] : score.per_document) {
      docs[std::to_string(id)] = {{"precision", RoundReported(d.precision)},
                                  {"recall", RoundReported(d.recall)},
                                  {"f1", RoundReported(d.f1)},
                                  {"pred_spans", d.pred_spans},
                                  {"gold_spans", d.gold_spans}};
    }
    j["per_document"] = std::move(docs);
  }
  return j.dump(2) + "\n";
}

std::string SiScoreToText(const SiScore &score) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "F1=%.5f\nP=%.5f R=%.5f\n", score.f1,
                score.precision, score.recall);
  return std::string("# convention: ") +
         std::string(ConventionName(score.convention)) + "\n" + buf;
}

std::string TcScoreToJson(const TcScore &score) {
  Json j;
  const double micro = RoundReported(score.micro_f1);
  j["precision"] = micro;
  j["recall"] = micro;
  j["f1"] = micro;
  j["micro_f1"] = micro;
  j["matched"] = score.matched;
  j["total"] = score.total;
  Json classes = Json::object();
  for (Technique t : AllTechniques()) {
    const ClassScore &c = score.per_class[Index(t)];
    classes[std::string(CanonicalToken(t))] = {
        {"tp", c.tp}, {"fp", c.fp}, {"fn", c.fn}, {"f1", RoundReported(c.f1)}};
  }
  j["per_class"] = std::move(classes);
  return j.dump(2) + "\n";
}

std::string TcScoreToText(const TcScore &score) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "F1=%.5f\nP=%.5f R=%.5f\n", score.micro_f1,
                score.micro_f1, score.micro_f1);
  return buf;
}

SiScore SiScoreFromJson(std::string_view text) {
  try {
    const auto j = Json::parse(text);
    SiScore s;
    s.precision = j.at("precision").get<double>();
    s.recall = j.at("recall").get<double>();
    s.f1 = j.at("f1").get<double>();
    auto conv = ParseConvention(j.at("convention").get<std::string>());
    if (!conv) throw ParseError("unknown convention in score report", 0);
    s.convention = *conv;
    s.pred_spans = j.at("pred_spans").get<std::int64_t>();
    s.gold_spans = j.at("gold_spans").get<std::int64_t>();
    return s;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed SI score report: ") + e.what(), 0);
  }
}

TcScore TcScoreFromJson(std::string_view text) {
  try {
    const auto j = Json::parse(text);
    TcScore s;
    s.micro_f1 = j.at("micro_f1").get<double>();
    s.matched = j.at("matched").get<std::int64_t>();
    s.total = j.at("total").get<std::int64_t>();
    for (const auto &[token, value] : j.at("per_class").items()) {
      auto t = ParseTechnique(token);
      if (!t) throw ParseError("unknown technique '" + token + "'", 0);
      ClassScore &c = s.per_class[Index(*t)];
      c.tp = value.at("tp").get<std::int64_t>();
      c.fp = value.at("fp").get<std::int64_t>();
      c.fn = value.at("fn").get<std::int64_t>();
      c.f1 = value.at("f1").get<double>();
    }
    return s;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed TC score report: ") + e.what(), 0);
  }
}

}  // namespace propeval
