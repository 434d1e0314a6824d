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

#include "propeval/validate.h"

#include <algorithm>
#include <map>
#include <set>

namespace propeval {

ValidationReport Validate(const Corpus &corpus, const AnnotationSet &ann) {
  ValidationReport report;
  std::set<SpanKey> seen;
  std::map<std::int64_t, std::vector<std::pair<Span, std::size_t>>> by_doc;

  for (const Annotation &a : ann.records) {
    if (ann.mode == Mode::kSi && a.technique) {
      report.errors.push_back(
          {a.line, "unexpected-technique", "SI record carries a technique"});
    } else if (ann.mode == Mode::kTc && !a.technique) {
      report.errors.push_back(
          {a.line, "missing-technique", "TC record has no technique"});
    }
    if (a.span.start < 0 || a.span.start >= a.span.end) {
      report.errors.push_back({a.line, "empty-span",
                               "span " + FormatKey({a.doc_id, a.span}) +
                                   " is empty or negative"});
    }

    const Document *doc = corpus.Find(a.doc_id);
    if (doc == nullptr) {
      report.errors.push_back(
          {a.line, "unknown-document",
           "unknown document id " + std::to_string(a.doc_id)});
      continue;
    }
    if (a.span.end > doc->length()) {
      report.errors.push_back(
          {a.line, "span-out-of-bounds",
           "span exceeds document length: " + FormatKey({a.doc_id, a.span}) +
               " in a document of " + std::to_string(doc->length()) +
               " characters"});
    }
    if (ann.mode == Mode::kSi) {
      if (!seen.insert({a.doc_id, a.span}).second) {
        report.warnings.push_back({a.line, "duplicate-record",
                                   "duplicate record " +
                                       FormatKey({a.doc_id, a.span})});
        continue;
      }
      by_doc[a.doc_id].emplace_back(a.span, a.line);
    }
  }

  for (auto &[doc_id, spans] : by_doc) {
    std::sort(spans.begin(), spans.end());
    std::int64_t reach = -1;
    for (const auto &[span, line] : spans) {
      if (span.start < reach) {
        report.warnings.push_back(
            {line, "overlapping-spans",
             "span " + FormatKey({doc_id, span}) +
                 " overlaps an earlier span; spans are merged before "
                 "scoring"});
      }
      reach = std::max(reach, span.end);
    }
  }
  return report;
}

void RequireValid(const Corpus &corpus, const AnnotationSet &ann,
                  const std::string &what) {
  ValidationReport report = Validate(corpus, ann);
  if (report.ok()) return;
  const ValidationIssue &first = report.errors.front();
  std::string msg = what + " failed validation (" +
                    std::to_string(report.errors.size()) + " error(s))";
  if (first.line != 0) msg += "; line " + std::to_string(first.line);
  msg += ": " + first.message;
  throw InvalidInputError(msg, std::move(report));
}

}  // namespace propeval
