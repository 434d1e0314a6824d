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

#ifndef PROPEVAL_STATS_H_
#define PROPEVAL_STATS_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "propeval/annotations.h"
#include "propeval/corpus.h"
#include "propeval/technique.h"

namespace propeval {

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population standard deviation
};

struct ClassStats {
  std::int64_t instances = 0;
  double mean_length = 0.0;  // characters; 0 when there are no instances
};

// Corpus statistics for one partition (or the "all" aggregate).
struct PartitionStats {
  std::string partition;
  std::int64_t articles = 0;
  MeanStd chars;
  MeanStd tokens;
  std::int64_t snippets = 0;         // TC records
  std::int64_t merged_snippets = 0;  // after per-document span merging
  // Records sharing an exact (doc, span) with a record of a different
  // technique, divided by all records.
  double identical_span_rate = 0.0;
  std::array<ClassStats, kNumTechniques> per_class{};
};

struct StatsReport {
  std::vector<PartitionStats> partitions;
};

// Throws EmptyCorpusError for an empty corpus and Error if gold is not TC.
PartitionStats CorpusStats(const Corpus &corpus, const AnnotationSet &gold);

struct PartitionInput {
  const Corpus *corpus = nullptr;
  const AnnotationSet *gold = nullptr;
};

// One row per input; an extra "all" row pools every input when there is
// more than one.
StatsReport ComputeStats(std::span<const PartitionInput> inputs);

std::string StatsToJson(const StatsReport &report);
std::string StatsToCsv(const StatsReport &report);
std::string StatsToMarkdown(const StatsReport &report);

struct DuplicatePair {
  std::int64_t first = 0;  // first < second
  std::int64_t second = 0;
  double similarity = 0.0;

  friend bool operator==(const DuplicatePair &,
                         const DuplicatePair &) = default;
};

// Jaccard similarity between the sets of word n-grams (whitespace tokens)
// of two documents. A document with fewer than n tokens contributes its
// whole token sequence as one n-gram; an empty document has no n-grams and
// never matches.
double NgramJaccard(std::u32string_view a, std::u32string_view b, int n);

// All unordered pairs with similarity >= threshold, sorted by descending
// similarity, then by ids. Throws Error if n < 1.
std::vector<DuplicatePair> FindNearDuplicates(const Corpus &corpus, int n = 4,
                                              double threshold = 0.8);

}  // namespace propeval

#endif  // PROPEVAL_STATS_H_
