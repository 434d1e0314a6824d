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

#include "propeval/combiner.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "propeval/error.h"
#include "propeval/parallel.h"
#include "propeval/span.h"
#include "propeval/validate.h"

namespace propeval {
namespace {

using SpanMap = std::map<std::int64_t, std::vector<Span>>;

AnnotationSet CombineGrouped(const std::vector<SpanMap> &systems,
                             CombinationMethod method, const Corpus &corpus) {
  std::set<std::int64_t> ids;
  for (const SpanMap &s : systems) {
    for (const auto &[id, spans] : s) ids.insert(id);
  }
  const std::vector<std::int64_t> doc_ids(ids.begin(), ids.end());
  std::vector<std::vector<Span>> runs(doc_ids.size());

  ParallelFor(doc_ids.size(), [&](std::size_t i) {
    const std::int64_t id = doc_ids[i];
    const Document *doc = corpus.Find(id);
    std::int64_t length = doc != nullptr ? doc->length() : 0;
    std::vector<std::vector<Span>> merged;
    for (const SpanMap &s : systems) {
      auto it = s.find(id);
      merged.push_back(it == s.end() ? std::vector<Span>{}
                                     : MergeSpans(it->second));
      if (!merged.back().empty()) {
        length = std::max(length, merged.back().back().end);
      }
    }
    std::vector<std::uint32_t> votes(static_cast<std::size_t>(length), 0);
    for (const auto &spans : merged) {
      for (const Span &sp : spans) {
        for (auto c = sp.start; c < sp.end; ++c) ++votes[c];
      }
    }
    std::int64_t run_start = -1;
    for (std::int64_t c = 0; c <= length; ++c) {
      const bool on = c < length && Passes(method, votes[c], systems.size());
      if (on && run_start < 0) run_start = c;
      if (!on && run_start >= 0) {
        runs[i].push_back({run_start, c});
        run_start = -1;
      }
    }
  });

  AnnotationSet out;
  out.mode = Mode::kSi;
  for (std::size_t i = 0; i < doc_ids.size(); ++i) {
    for (const Span &s : runs[i]) out.records.push_back({doc_ids[i], s, {}, 0});
  }
  return out;
}

std::map<SpanKey, std::size_t> KeyCounts(const AnnotationSet &set) {
  std::map<SpanKey, std::size_t> counts;
  for (const Annotation &a : set.records) ++counts[{a.doc_id, a.span}];
  return counts;
}

void RequireAligned(std::span<const AnnotationSet> systems) {
  const auto reference = KeyCounts(systems[0]);
  for (std::size_t i = 1; i < systems.size(); ++i) {
    if (KeyCounts(systems[i]) != reference) {
      throw MisalignedEnsembleError(
          "system " + std::to_string(i + 1) +
          " does not cover the same (document, span) list as system 1");
    }
  }
  for (const AnnotationSet &s : systems) {
    for (const Annotation &a : s.records) {
      if (!a.technique) {
        throw MisalignedEnsembleError("TC system record " +
                                      FormatKey({a.doc_id, a.span}) +
                                      " has no technique");
      }
    }
  }
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.5f", v);
  return buf;
}

std::string CsvField(std::string_view s) {
  if (s.find(',') == std::string_view::npos) return std::string(s);
  return "\"" + std::string(s) + "\"";
}

int Truncate(int k_max, std::size_t available, std::vector<std::string> &warnings) {
  if (k_max < 1) throw Error("k_max must be >= 1");
  if (static_cast<std::size_t>(k_max) > available) {
    warnings.push_back("k_max " + std::to_string(k_max) + " exceeds the " +
                       std::to_string(available) +
                       " available systems; truncated");
    return static_cast<int>(available);
  }
  return k_max;
}

struct Series {
  std::string name;
  std::vector<std::pair<int, double>> points;
};

std::string LineChart(const std::string &title, const std::vector<Series> &series,
                      int k_max, const std::string &csv) {
  constexpr double kWidth = 640, kHeight = 400, kLeft = 50, kRight = 180,
                   kTop = 30, kBottom = 40;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto x_of = [&](int k) {
    return k_max <= 1 ? kLeft + plot_w / 2
                      : kLeft + plot_w * (k - 1) / (k_max - 1);
  };
  auto y_of = [&](double v) { return kTop + plot_h * (1.0 - v); };
  static const char *kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                  "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                  "#bcbd22", "#17becf"};
  char buf[256];
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\">\n";
  svg << "<title>" << title << "</title>\n<desc>\n" << csv << "</desc>\n";
  std::snprintf(buf, sizeof(buf),
                "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" "
                "fill=\"none\" stroke=\"#000\"/>\n",
                kLeft, kTop, plot_w, plot_h);
  svg << buf;
  for (int k = 1; k <= k_max; ++k) {
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"10\" "
                  "text-anchor=\"middle\">%d</text>\n",
                  x_of(k), kHeight - kBottom + 14, k);
    svg << buf;
  }
  for (int tick = 0; tick <= 4; ++tick) {
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"10\" "
                  "text-anchor=\"end\">%.2f</text>\n",
                  kLeft - 4, y_of(tick / 4.0) + 3, tick / 4.0);
    svg << buf;
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char *color = kColors[i % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" data-series=\""
        << series[i].name << "\" points=\"";
    for (std::size_t j = 0; j < series[i].points.size(); ++j) {
      const auto &[k, v] = series[i].points[j];
      std::snprintf(buf, sizeof(buf), "%s%.2f,%.2f", j ? " " : "", x_of(k),
                    y_of(v));
      svg << buf;
    }
    svg << "\"/>\n";
    for (const auto &[k, v] : series[i].points) {
      std::snprintf(buf, sizeof(buf),
                    "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"2\" fill=\"%s\" "
                    "data-k=\"%d\" data-value=\"%.5f\"/>\n",
                    x_of(k), y_of(v), color, k, v);
      svg << buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.1f\" y=\"%.1f\" font-size=\"10\" "
                  "fill=\"%s\">",
                  kWidth - kRight + 8, kTop + 12.0 * (i + 1), color);
    svg << buf << series[i].name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string_view MethodName(CombinationMethod m) {
  switch (m) {
    case CombinationMethod::kUnion: return "union";
    case CombinationMethod::kIntersection: return "intersection";
    case CombinationMethod::kMajority: return "majority";
  }
  return "union";
}

std::optional<CombinationMethod> ParseMethod(std::string_view name) {
  if (name == "union") return CombinationMethod::kUnion;
  if (name == "intersection") return CombinationMethod::kIntersection;
  if (name == "majority") return CombinationMethod::kMajority;
  return std::nullopt;
}

bool Passes(CombinationMethod m, std::size_t votes, std::size_t systems) {
  switch (m) {
    case CombinationMethod::kUnion: return votes >= 1;
    case CombinationMethod::kIntersection: return votes == systems && votes > 0;
    case CombinationMethod::kMajority: return 2 * votes > systems;
  }
  return false;
}

std::int64_t ClassPrior::total() const {
  std::int64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

ClassPrior ComputeClassPrior(const AnnotationSet &train) {
  ClassPrior prior;
  for (const Annotation &a : train.records) {
    if (a.technique) ++prior.counts[Index(*a.technique)];
  }
  return prior;
}

AnnotationSet CombineSi(std::span<const AnnotationSet> systems,
                        CombinationMethod method, const Corpus &corpus) {
  if (systems.empty()) throw EmptyEnsembleError("no systems to combine");
  std::vector<SpanMap> grouped;
  for (std::size_t i = 0; i < systems.size(); ++i) {
    RequireValid(corpus, systems[i], "system " + std::to_string(i + 1));
    grouped.push_back(SpansByDocument(systems[i]));
  }
  return CombineGrouped(grouped, method, corpus);
}

AnnotationSet CombineTc(std::span<const AnnotationSet> systems,
                        const ClassPrior &prior) {
  if (systems.empty()) throw EmptyEnsembleError("no systems to combine");
  RequireAligned(systems);

  std::map<SpanKey, std::array<std::int64_t, kNumTechniques>> votes;
  for (const AnnotationSet &s : systems) {
    for (const Annotation &a : s.records) {
      ++votes[{a.doc_id, a.span}][Index(*a.technique)];
    }
  }
  const auto round = static_cast<std::int64_t>(systems.size());
  const bool use_prior = prior.usable();
  auto better = [&](std::size_t a, std::size_t b,
                    const std::array<std::int64_t, kNumTechniques> &v) {
    if (v[a] != v[b]) return v[a] > v[b];
    if (use_prior && prior.counts[a] != prior.counts[b]) {
      return prior.counts[a] > prior.counts[b];
    }
    return a < b;
  };

  // Picks are handed out to the key's occurrences in file order.
  std::map<SpanKey, std::vector<Technique>> picks;
  const auto counts = KeyCounts(systems[0]);
  for (auto &[key, v] : votes) {
    auto remaining = v;
    auto &chosen = picks[key];
    for (std::size_t n = 0; n < counts.at(key); ++n) {
      std::size_t best = 0;
      for (std::size_t c = 1; c < kNumTechniques; ++c) {
        if (better(c, best, remaining)) best = c;
      }
      chosen.push_back(static_cast<Technique>(best));
      remaining[best] -= round;
    }
  }

  AnnotationSet out;
  out.mode = Mode::kTc;
  std::map<SpanKey, std::size_t> used;
  for (const Annotation &a : systems[0].records) {
    const SpanKey key{a.doc_id, a.span};
    Annotation rec{a.doc_id, a.span, picks[key][used[key]++], 0};
    out.records.push_back(rec);
  }
  return out;
}

std::int64_t FlaggedChars(const AnnotationSet &set) {
  std::int64_t total = 0;
  for (const auto &[id, spans] : SpansByDocument(set)) {
    for (const Span &s : MergeSpans(spans)) total += s.length();
  }
  return total;
}

SiSweepCurve SweepTopKSi(std::span<const AnnotationSet> ranked,
                         std::span<const CombinationMethod> methods,
                         const AnnotationSet &gold, const Corpus &corpus,
                         int k_max, EqConvention conv) {
  if (ranked.empty()) throw EmptyEnsembleError("no systems to sweep");
  SiSweepCurve curve;
  const int k_end = Truncate(k_max, ranked.size(), curve.warnings);
  RequireValid(corpus, gold, "gold");
  std::vector<SpanMap> grouped;
  for (int i = 0; i < k_end; ++i) {
    RequireValid(corpus, ranked[i], "system " + std::to_string(i + 1));
    grouped.push_back(SpansByDocument(ranked[i]));
  }
  const SpanMap gold_spans = SpansByDocument(gold);
  for (int k = 1; k <= k_end; ++k) {
    const std::vector<SpanMap> top(grouped.begin(), grouped.begin() + k);
    for (CombinationMethod m : methods) {
      const AnnotationSet combined = CombineGrouped(top, m, corpus);
      const SiScore s = ScoreSiSpans(gold_spans, SpansByDocument(combined), conv);
      curve.rows.push_back(
          {k, m, s.precision, s.recall, s.f1, FlaggedChars(combined)});
    }
  }
  return curve;
}

TcSweepCurve SweepTopKTc(std::span<const AnnotationSet> ranked,
                         const AnnotationSet &gold, const ClassPrior &prior,
                         int k_max) {
  if (ranked.empty()) throw EmptyEnsembleError("no systems to sweep");
  TcSweepCurve curve;
  const int k_end = Truncate(k_max, ranked.size(), curve.warnings);
  for (int k = 1; k <= k_end; ++k) {
    const AnnotationSet combined = CombineTc(ranked.first(k), prior);
    const TcScore s = ScoreTc(gold, combined);
    TcSweepRow row;
    row.k = k;
    row.micro_f1 = s.micro_f1;
    for (std::size_t c = 0; c < kNumTechniques; ++c) {
      row.per_class_f1[c] = s.per_class[c].f1;
    }
    curve.rows.push_back(row);
  }
  return curve;
}

std::string SweepToCsv(const SiSweepCurve &curve) {
  std::string out = "k,method,precision,recall,f1,flagged_chars\n";
  for (const SiSweepRow &r : curve.rows) {
    out += std::to_string(r.k) + "," + std::string(MethodName(r.method)) +
           "," + Fixed(r.precision) + "," + Fixed(r.recall) + "," +
           Fixed(r.f1) + "," + std::to_string(r.flagged_chars) + "\n";
  }
  return out;
}

std::string SweepToCsv(const TcSweepCurve &curve) {
  std::string out = "k,micro_f1";
  for (Technique t : AllTechniques()) out += "," + CsvField(CanonicalToken(t));
  out += "\n";
  for (const TcSweepRow &r : curve.rows) {
    out += std::to_string(r.k) + "," + Fixed(r.micro_f1);
    for (double f : r.per_class_f1) out += "," + Fixed(f);
    out += "\n";
  }
  return out;
}

std::string SweepToJson(const SiSweepCurve &curve) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SiSweepRow &r : curve.rows) {
    rows.push_back({{"k", r.k},
                    {"method", MethodName(r.method)},
                    {"precision", RoundReported(r.precision)},
                    {"recall", RoundReported(r.recall)},
                    {"f1", RoundReported(r.f1)},
                    {"flagged_chars", r.flagged_chars}});
  }
  return rows.dump(2) + "\n";
}

std::string SweepToJson(const TcSweepCurve &curve) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TcSweepRow &r : curve.rows) {
    nlohmann::ordered_json row;
    row["k"] = r.k;
    row["micro_f1"] = RoundReported(r.micro_f1);
    nlohmann::ordered_json classes;
    for (Technique t : AllTechniques()) {
      classes[std::string(CanonicalToken(t))] =
          RoundReported(r.per_class_f1[Index(t)]);
    }
    row["per_class"] = std::move(classes);
    rows.push_back(std::move(row));
  }
  return rows.dump(2) + "\n";
}

std::string SweepToMarkdown(const SiSweepCurve &curve) {
  std::string out =
      "| k | method | P | R | F1 | flagged chars |\n|---:|---|---:|---:|---:|---:|\n";
  for (const SiSweepRow &r : curve.rows) {
    out += "| " + std::to_string(r.k) + " | " + std::string(MethodName(r.method)) +
           " | " + Fixed(r.precision) + " | " + Fixed(r.recall) + " | " +
           Fixed(r.f1) + " | " + std::to_string(r.flagged_chars) + " |\n";
  }
  return out;
}

std::string SweepToMarkdown(const TcSweepCurve &curve) {
  std::string out = "| k | micro-F1 |";
  std::string rule = "|---:|---:|";
  for (std::size_t c = 1; c <= kNumTechniques; ++c) {
    out += " " + std::to_string(c) + " |";
    rule += "---:|";
  }
  out += "\n" + rule + "\n";
  for (const TcSweepRow &r : curve.rows) {
    out += "| " + std::to_string(r.k) + " | " + Fixed(r.micro_f1) + " |";
    for (double f : r.per_class_f1) out += " " + Fixed(f) + " |";
    out += "\n";
  }
  return out;
}

std::string SweepToSvg(const SiSweepCurve &curve) {
  std::vector<Series> series;
  int k_max = 0;
  std::vector<CombinationMethod> methods;
  for (const SiSweepRow &r : curve.rows) {
    k_max = std::max(k_max, r.k);
    if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
      methods.push_back(r.method);
    }
  }
  for (CombinationMethod m : methods) {
    for (const char *metric : {"precision", "recall", "f1"}) {
      Series s{std::string(MethodName(m)) + " " + metric, {}};
      for (const SiSweepRow &r : curve.rows) {
        if (r.method != m) continue;
        const double v = metric[0] == 'p' ? r.precision
                         : metric[0] == 'r' ? r.recall
                                            : r.f1;
        s.points.emplace_back(r.k, RoundReported(v));
      }
      series.push_back(std::move(s));
    }
  }
  return LineChart("SI system combination", series, k_max, SweepToCsv(curve));
}

std::string SweepToSvg(const TcSweepCurve &curve) {
  std::vector<Series> series;
  int k_max = 0;
  Series micro{"micro_f1", {}};
  for (const TcSweepRow &r : curve.rows) {
    k_max = std::max(k_max, r.k);
    micro.points.emplace_back(r.k, RoundReported(r.micro_f1));
  }
  series.push_back(std::move(micro));
  for (Technique t : AllTechniques()) {
    Series s{std::string(CanonicalToken(t)), {}};
    for (const TcSweepRow &r : curve.rows) {
      s.points.emplace_back(r.k, RoundReported(r.per_class_f1[Index(t)]));
    }
    series.push_back(std::move(s));
  }
  return LineChart("TC majority voting", series, k_max, SweepToCsv(curve));
}

}  // namespace propeval
