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

#include "propeval/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "propeval/error.h"
#include "propeval/parallel.h"
#include "propeval/span.h"
#include "propeval/utf8.h"

namespace propeval {
namespace {

MeanStd Moments(const std::vector<double> &values) {
  MeanStd m;
  if (values.empty()) return m;
  double sum = 0.0;
  for (double v : values) sum += v;
  m.mean = sum / static_cast<double>(values.size());
  double sq = 0.0;
  for (double v : values) sq += (v - m.mean) * (v - m.mean);
  m.stddev = std::sqrt(sq / static_cast<double>(values.size()));
  return m;
}

// Raw per-partition material; the "all" row is computed from the union.
struct Material {
  std::vector<double> chars;
  std::vector<double> tokens;
  std::int64_t snippets = 0;
  std::int64_t merged = 0;
  std::int64_t identical = 0;
  std::array<std::int64_t, kNumTechniques> count{};
  std::array<double, kNumTechniques> length_sum{};
};

Material Collect(const Corpus &corpus, const AnnotationSet &gold) {
  if (corpus.empty()) throw EmptyCorpusError("corpus has no documents");
  if (gold.mode != Mode::kTc) {
    throw Error("corpus statistics need TC-mode gold annotations");
  }
  Material m;
  std::vector<const Document *> docs;
  for (const auto &[id, doc] : corpus) docs.push_back(&doc);
  m.chars.resize(docs.size());
  m.tokens.resize(docs.size());
  ParallelFor(docs.size(), [&](std::size_t i) {
    m.chars[i] = static_cast<double>(docs[i]->length());
    m.tokens[i] = static_cast<double>(WhitespaceTokens(docs[i]->text).size());
  });

  m.snippets = static_cast<std::int64_t>(gold.size());
  std::map<SpanKey, std::set<Technique>> labels_at;
  for (const Annotation &a : gold.records) {
    const auto c = Index(*a.technique);
    ++m.count[c];
    m.length_sum[c] += static_cast<double>(a.span.length());
    labels_at[{a.doc_id, a.span}].insert(*a.technique);
  }
  for (const Annotation &a : gold.records) {
    if (labels_at[{a.doc_id, a.span}].size() > 1) ++m.identical;
  }
  for (const auto &[doc_id, spans] : SpansByDocument(gold)) {
    m.merged += static_cast<std::int64_t>(MergeSpans(spans).size());
  }
  return m;
}

PartitionStats Summarize(const std::string &name, const Material &m) {
  PartitionStats s;
  s.partition = name;
  s.articles = static_cast<std::int64_t>(m.chars.size());
  s.chars = Moments(m.chars);
  s.tokens = Moments(m.tokens);
  s.snippets = m.snippets;
  s.merged_snippets = m.merged;
  s.identical_span_rate =
      m.snippets == 0 ? 0.0
                      : static_cast<double>(m.identical) /
                            static_cast<double>(m.snippets);
  for (std::size_t c = 0; c < kNumTechniques; ++c) {
    s.per_class[c].instances = m.count[c];
    s.per_class[c].mean_length =
        m.count[c] == 0 ? 0.0
                        : m.length_sum[c] / static_cast<double>(m.count[c]);
  }
  return s;
}

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

double Round(double v, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(v * scale) / scale;
}

}  // namespace

PartitionStats CorpusStats(const Corpus &corpus, const AnnotationSet &gold) {
  return Summarize(std::string(PartitionName(corpus.partition())),
                   Collect(corpus, gold));
}

StatsReport ComputeStats(std::span<const PartitionInput> inputs) {
  StatsReport report;
  Material all;
  for (const PartitionInput &in : inputs) {
    Material m = Collect(*in.corpus, *in.gold);
    report.partitions.push_back(
        Summarize(std::string(PartitionName(in.corpus->partition())), m));
    all.chars.insert(all.chars.end(), m.chars.begin(), m.chars.end());
    all.tokens.insert(all.tokens.end(), m.tokens.begin(), m.tokens.end());
    all.snippets += m.snippets;
    all.merged += m.merged;
    all.identical += m.identical;
    for (std::size_t c = 0; c < kNumTechniques; ++c) {
      all.count[c] += m.count[c];
      all.length_sum[c] += m.length_sum[c];
    }
  }
  if (inputs.size() > 1) report.partitions.push_back(Summarize("all", all));
  return report;
}

std::string StatsToJson(const StatsReport &report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const PartitionStats &p : report.partitions) {
    nlohmann::ordered_json row;
    row["partition"] = p.partition;
    row["articles"] = p.articles;
    row["chars_mean"] = Round(p.chars.mean, 5);
    row["chars_stddev"] = Round(p.chars.stddev, 5);
    row["tokens_mean"] = Round(p.tokens.mean, 5);
    row["tokens_stddev"] = Round(p.tokens.stddev, 5);
    row["snippets"] = p.snippets;
    row["merged_snippets"] = p.merged_snippets;
    row["identical_span_rate"] = Round(p.identical_span_rate, 5);
    nlohmann::ordered_json classes;
    for (Technique t : AllTechniques()) {
      classes[std::string(CanonicalToken(t))] = {
          {"instances", p.per_class[Index(t)].instances},
          {"mean_length", Round(p.per_class[Index(t)].mean_length, 5)}};
    }
    row["per_class"] = std::move(classes);
    rows.push_back(std::move(row));
  }
  nlohmann::ordered_json doc;
  doc["partitions"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string StatsToCsv(const StatsReport &report) {
  std::ostringstream out;
  out << "partition,articles,chars_mean,chars_stddev,tokens_mean,"
         "tokens_stddev,snippets,merged_snippets,identical_span_rate";
  for (Technique t : AllTechniques()) {
    out << ",\"" << CanonicalToken(t) << "\",\"" << CanonicalToken(t)
        << ":mean_length\"";
  }
  out << "\n";
  for (const PartitionStats &p : report.partitions) {
    out << p.partition << ',' << p.articles << ',' << Fixed(p.chars.mean, 5)
        << ',' << Fixed(p.chars.stddev, 5) << ',' << Fixed(p.tokens.mean, 5)
        << ',' << Fixed(p.tokens.stddev, 5) << ',' << p.snippets << ','
        << p.merged_snippets << ',' << Fixed(p.identical_span_rate, 5);
    for (const ClassStats &c : p.per_class) {
      out << ',' << c.instances << ',' << Fixed(c.mean_length, 5);
    }
    out << "\n";
  }
  return out.str();
}

std::string StatsToMarkdown(const StatsReport &report) {
  std::ostringstream out;
  out << "| partition | articles | chars | tokens | snippets | merged | "
         "identical-span rate |\n";
  out << "|---|---:|---:|---:|---:|---:|---:|\n";
  for (const PartitionStats &p : report.partitions) {
    out << "| " << p.partition << " | " << p.articles << " | "
        << Fixed(p.chars.mean, 0) << " ± " << Fixed(p.chars.stddev, 0)
        << " | " << Fixed(p.tokens.mean, 0) << " ± "
        << Fixed(p.tokens.stddev, 0) << " | " << p.snippets << " | "
        << p.merged_snippets << " | "
        << Fixed(100.0 * p.identical_span_rate, 2) << "% |\n";
  }
  out << "\n| # | technique |";
  for (const PartitionStats &p : report.partitions) {
    out << ' ' << p.partition << " (n) | " << p.partition << " (len) |";
  }
  out << "\n|---:|---|";
  for (std::size_t i = 0; i < report.partitions.size(); ++i) out << "---:|---:|";
  out << "\n";
  for (Technique t : AllTechniques()) {
    out << "| " << Index(t) + 1 << " | " << DisplayName(t) << " |";
    for (const PartitionStats &p : report.partitions) {
      out << ' ' << p.per_class[Index(t)].instances << " | "
          << Fixed(p.per_class[Index(t)].mean_length, 1) << " |";
    }
    out << "\n";
  }
  return out.str();
}

double NgramJaccard(std::u32string_view a, std::u32string_view b, int n) {
  if (n < 1) throw Error("n-gram order must be >= 1");
  auto grams = [n](std::u32string_view text) {
    auto tokens = WhitespaceTokens(text);
    std::set<std::vector<std::u32string_view>> out;
    if (tokens.empty()) return out;
    const std::size_t order = std::min<std::size_t>(n, tokens.size());
    for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
      out.emplace(tokens.begin() + i, tokens.begin() + i + order);
    }
    return out;
  };
  auto ga = grams(a);
  auto gb = grams(b);
  if (ga.empty() || gb.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto &g : ga) common += gb.count(g);
  const std::size_t total = ga.size() + gb.size() - common;
  return static_cast<double>(common) / static_cast<double>(total);
}

std::vector<DuplicatePair> FindNearDuplicates(const Corpus &corpus, int n,
                                              double threshold) {
  if (n < 1) throw Error("n-gram order must be >= 1");
  // Intern every n-gram so documents become sorted id vectors.
  std::vector<std::int64_t> ids;
  std::vector<std::vector<std::int64_t>> sets;
  std::map<std::vector<std::u32string_view>, std::int64_t> intern;
  for (const auto &[id, doc] : corpus) {
    auto tokens = WhitespaceTokens(doc.text);
    std::vector<std::int64_t> set;
    if (!tokens.empty()) {
      const std::size_t order = std::min<std::size_t>(n, tokens.size());
      for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
        std::vector<std::u32string_view> gram(tokens.begin() + i,
                                              tokens.begin() + i + order);
        auto [it, inserted] =
            intern.emplace(std::move(gram), static_cast<std::int64_t>(intern.size()));
        set.push_back(it->second);
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    ids.push_back(id);
    sets.push_back(std::move(set));
  }

  std::vector<std::vector<DuplicatePair>> per_row(ids.size());
  ParallelFor(ids.size(), [&](std::size_t i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const auto &a = sets[i];
      const auto &b = sets[j];
      if (a.empty() || b.empty()) continue;
      std::size_t common = 0;
      for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
        if (a[x] < b[y]) {
          ++x;
        } else if (b[y] < a[x]) {
          ++y;
        } else {
          ++common, ++x, ++y;
        }
      }
      if (common == 0) continue;
      const double sim = static_cast<double>(common) /
                         static_cast<double>(a.size() + b.size() - common);
      if (sim >= threshold) per_row[i].push_back({ids[i], ids[j], sim});
    }
  });

  std::vector<DuplicatePair> pairs;
  for (auto &row : per_row) pairs.insert(pairs.end(), row.begin(), row.end());
  std::sort(pairs.begin(), pairs.end(),
            [](const DuplicatePair &x, const DuplicatePair &y) {
              if (x.similarity != y.similarity) {
                return x.similarity > y.similarity;
              }
              if (x.first != y.first) return x.first < y.first;
              return x.second < y.second;
            });
  return pairs;
}

}  // namespace propeval
