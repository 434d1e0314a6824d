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

#ifndef PROPEVAL_ANNOTATIONS_H_
#define PROPEVAL_ANNOTATIONS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "propeval/span.h"
#include "propeval/technique.h"

namespace propeval {

// SI files carry doc<TAB>start<TAB>end, TC files doc<TAB>technique<TAB>
// start<TAB>end.
enum class Mode { kSi, kTc };

std::string_view ModeName(Mode mode);

struct Annotation {
  std::int64_t doc_id = 0;
  Span span;
  std::optional<Technique> technique;
  // 1-based source line; 0 for records not read from a file.
  std::size_t line = 0;

  // Identity ignores the source line.
  friend bool operator==(const Annotation &a, const Annotation &b) {
    return a.doc_id == b.doc_id && a.span == b.span &&
           a.technique == b.technique;
  }
};

// Records keep file order so serialization round-trips.
struct AnnotationSet {
  Mode mode = Mode::kSi;
  std::vector<Annotation> records;

  std::size_t size() const { return records.size(); }
  bool empty() const { return records.empty(); }
};

// (doc, span) identity of a record, used to group identical spans.
struct SpanKey {
  std::int64_t doc_id = 0;
  Span span;
  friend auto operator<=>(const SpanKey &, const SpanKey &) = default;
};

std::string FormatKey(const SpanKey &key);

// Parses annotation text. Blank lines are skipped, a trailing CR is
// tolerated. Throws ParseError naming the offending line.
AnnotationSet ParseSpanText(std::string_view text, Mode mode,
                            const AliasTable *aliases = nullptr,
                            std::string_view source = "<input>");

AnnotationSet ParseSpanFile(const std::filesystem::path &path, Mode mode,
                            const AliasTable *aliases = nullptr);

// Reads unlabeled TC input (the span list given to systems): either
// doc<TAB>start<TAB>end or doc<TAB>?<TAB>start<TAB>end. Any real label is a
// ParseError, so gold labels cannot leak through this path. Result is in
// SI mode.
AnnotationSet ParseSpanTemplate(const std::filesystem::path &path);
AnnotationSet ParseSpanTemplateText(std::string_view text,
                                    std::string_view source = "<input>");

// Canonical LF-terminated serialization in record order.
std::string SerializeSpans(const AnnotationSet &set);

// Writes SerializeSpans(set); throws IoError.
void WriteSpanFile(const std::filesystem::path &path,
                   const AnnotationSet &set);

// Spans grouped per document, in record order.
std::map<std::int64_t, std::vector<Span>> SpansByDocument(
    const AnnotationSet &set);

}  // namespace propeval

#endif  // PROPEVAL_ANNOTATIONS_H_
