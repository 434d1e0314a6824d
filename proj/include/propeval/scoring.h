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

#ifndef PROPEVAL_SCORING_H_
#define PROPEVAL_SCORING_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propeval/annotations.h"
#include "propeval/corpus.h"
#include "propeval/span.h"
#include "propeval/technique.h"

namespace propeval {

// Which span length normalizes each partial-overlap term.
//   kCorrected:    P divides by |s| (predicted), R divides by |t| (gold).
//   kLiteralPaper: the denominators exchanged, P by |t| and R by |s|.
enum class EqConvention { kCorrected, kLiteralPaper };

std::string_view ConventionName(EqConvention c);
std::optional<EqConvention> ParseConvention(std::string_view name);

struct SiDocumentScore {
  double precision_sum = 0.0;  // sum of overlap terms normalized for P
  double recall_sum = 0.0;     // sum of overlap terms normalized for R
  std::int64_t pred_spans = 0;  // after merging
  std::int64_t gold_spans = 0;  // after merging
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct SiScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  EqConvention convention = EqConvention::kCorrected;
  std::int64_t pred_spans = 0;  // |S| after merging
  std::int64_t gold_spans = 0;  // |T| after merging
  std::map<std::int64_t, SiDocumentScore> per_document;
};

// 2PR/(P+R), or 0 when P+R is 0.
double HarmonicMean(double p, double r);

// Span identification score. Spans are merged per document (techniques are
// ignored), then overlap terms are summed per document and normalized by
// the global merged span counts. Both sets are validated against the
// corpus first; failure throws InvalidInputError.
SiScore ScoreSi(const AnnotationSet &gold, const AnnotationSet &pred,
                const Corpus &corpus,
                EqConvention conv = EqConvention::kCorrected);

// Same measure on already-grouped spans without validation.
SiScore ScoreSiSpans(const std::map<std::int64_t, std::vector<Span>> &gold,
                     const std::map<std::int64_t, std::vector<Span>> &pred,
                     EqConvention conv = EqConvention::kCorrected);

// Best-match label agreement for one identical (doc, span) key: the size of
// the multiset intersection, which equals the best assignment between the
// gold and predicted copies. Throws MissingPredictionError on a size
// mismatch.
std::size_t ResolveIdenticalSpans(std::span<const Technique> gold,
                                  std::span<const Technique> pred);

struct ClassScore {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double f1 = 0.0;  // 2tp / (2tp + fp + fn), 0 when the denominator is 0
};

struct TcScore {
  double micro_f1 = 0.0;
  std::int64_t matched = 0;
  std::int64_t total = 0;  // gold records
  std::array<ClassScore, kNumTechniques> per_class{};
};

// Technique classification score. Predictions must carry exactly the gold
// (doc, span) key multiset; otherwise MissingPredictionError lists the
// offending keys. Independent of record order.
TcScore ScoreTc(const AnnotationSet &gold, const AnnotationSet &pred);

// Reports. Values are rounded to 5 decimals here and nowhere else.
std::string SiScoreToJson(const SiScore &score, bool per_document = false);
std::string SiScoreToText(const SiScore &score);
std::string TcScoreToJson(const TcScore &score);
std::string TcScoreToText(const TcScore &score);

// Inverse of the JSON writers (aggregate fields and per-class F1 only).
SiScore SiScoreFromJson(std::string_view json);
TcScore TcScoreFromJson(std::string_view json);

double RoundReported(double value);

}  // namespace propeval

#endif  // PROPEVAL_SCORING_H_
