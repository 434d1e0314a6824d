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

#ifndef PROPEVAL_COMBINER_H_
#define PROPEVAL_COMBINER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "propeval/annotations.h"
#include "propeval/corpus.h"
#include "propeval/scoring.h"
#include "propeval/technique.h"

namespace propeval {

// Character-level rule for combining SI systems. A character is flagged by
//   union:        at least one system,
//   intersection: every system,
//   majority:     strictly more than half of the systems.
enum class CombinationMethod { kUnion, kIntersection, kMajority };

std::string_view MethodName(CombinationMethod m);
std::optional<CombinationMethod> ParseMethod(std::string_view name);

// Flags a character with `votes` out of `systems` under the method.
bool Passes(CombinationMethod m, std::size_t votes, std::size_t systems);

// Training-set label frequencies used to break voting ties.
struct ClassPrior {
  std::array<std::int64_t, kNumTechniques> counts{};

  std::int64_t total() const;
  // False when every count is zero; ties then fall to canonical order.
  bool usable() const { return total() > 0; }
};

ClassPrior ComputeClassPrior(const AnnotationSet &train);

// Per document, flags characters covered by each system's merged spans,
// applies the method per character and emits maximal runs. Every system is
// validated against the corpus. Throws EmptyEnsembleError on no systems.
AnnotationSet CombineSi(std::span<const AnnotationSet> systems,
                        CombinationMethod method, const Corpus &corpus);

// Majority vote per (doc, span) key. For a key that appears m times, m
// labels are picked greedily: the label with the most remaining votes wins,
// ties go to the higher prior count and then to canonical order, and each
// pick consumes one full round of votes (the number of systems). With m = 1
// this is plain plurality voting. Output follows the first system's record
// order. Throws MisalignedEnsembleError when key multisets differ.
AnnotationSet CombineTc(std::span<const AnnotationSet> systems,
                        const ClassPrior &prior);

struct SiSweepRow {
  int k = 0;
  CombinationMethod method = CombinationMethod::kUnion;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t flagged_chars = 0;  // corpus total
};

struct TcSweepRow {
  int k = 0;
  double micro_f1 = 0.0;
  std::array<double, kNumTechniques> per_class_f1{};
};

struct SiSweepCurve {
  std::vector<SiSweepRow> rows;
  std::vector<std::string> warnings;
};

struct TcSweepCurve {
  std::vector<TcSweepRow> rows;
  std::vector<std::string> warnings;
};

// Combines the best k systems for k = 1..k_max (systems ranked best first)
// and scores each combination against gold. A k_max beyond the number of
// systems is truncated with a warning.
SiSweepCurve SweepTopKSi(std::span<const AnnotationSet> ranked,
                         std::span<const CombinationMethod> methods,
                         const AnnotationSet &gold, const Corpus &corpus,
                         int k_max,
                         EqConvention conv = EqConvention::kCorrected);

TcSweepCurve SweepTopKTc(std::span<const AnnotationSet> ranked,
                         const AnnotationSet &gold, const ClassPrior &prior,
                         int k_max);

std::string SweepToCsv(const SiSweepCurve &curve);
std::string SweepToCsv(const TcSweepCurve &curve);
std::string SweepToJson(const SiSweepCurve &curve);
std::string SweepToJson(const TcSweepCurve &curve);
std::string SweepToMarkdown(const SiSweepCurve &curve);
std::string SweepToMarkdown(const TcSweepCurve &curve);

// Line charts of the CSV columns against k; the CSV is embedded verbatim
// in the <desc> element.
std::string SweepToSvg(const SiSweepCurve &curve);
std::string SweepToSvg(const TcSweepCurve &curve);

// Total characters covered by (merged) spans.
std::int64_t FlaggedChars(const AnnotationSet &set);

}  // namespace propeval

#endif  // PROPEVAL_COMBINER_H_
