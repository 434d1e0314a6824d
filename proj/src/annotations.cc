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

#include "propeval/annotations.h"

#include <charconv>
#include <fstream>

#include "propeval/corpus.h"
#include "propeval/error.h"
#include "propeval/utf8.h"

namespace propeval {
namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    auto tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

bool IsBlank(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t') return false;
  }
  return true;
}

class LineParser {
 public:
  LineParser(std::string_view source, std::size_t line)
      : source_(source), line_(line) {}

  [[noreturn]] void Fail(const std::string &why) const {
    throw ParseError(std::string(source_) + ":" + std::to_string(line_) +
                         ": " + why,
                     line_);
  }

  std::int64_t Integer(std::string_view field, const char *what) const {
    std::int64_t value = 0;
    const char *first = field.data();
    const char *last = first + field.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (field.empty() || ec != std::errc() || ptr != last || value < 0 ||
        field[0] == '-') {
      Fail(std::string("non-integer ") + what + " '" + std::string(field) +
           "'");
    }
    return value;
  }

  Annotation Record(std::string_view doc, std::string_view start,
                    std::string_view end) const {
    Annotation a;
    a.doc_id = Integer(doc, "document id");
    a.span.start = Integer(start, "start offset");
    a.span.end = Integer(end, "end offset");
    a.line = line_;
    if (a.span.start >= a.span.end) {
      Fail("start " + std::to_string(a.span.start) + " >= end " +
           std::to_string(a.span.end));
    }
    return a;
  }

 private:
  std::string_view source_;
  std::size_t line_;
};

template <typename Fn>
void ForEachLine(std::string_view text, std::string_view source, Fn &&fn) {
  try {
    DecodeUtf8(text);
  } catch (const EncodingError &e) {
    throw ParseError(std::string(source) + ": " + e.what(), 0);
  }
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (IsBlank(line)) continue;
    fn(line, LineParser(source, line_no));
  }
}

}  // namespace

std::string_view ModeName(Mode mode) {
  return mode == Mode::kSi ? "si" : "tc";
}

std::string FormatKey(const SpanKey &key) {
  return std::to_string(key.doc_id) + ":" + std::to_string(key.span.start) +
         "-" + std::to_string(key.span.end);
}

AnnotationSet ParseSpanText(std::string_view text, Mode mode,
                            const AliasTable *aliases,
                            std::string_view source) {
  AnnotationSet set;
  set.mode = mode;
  const std::size_t expected = mode == Mode::kSi ? 3 : 4;
  ForEachLine(text, source, [&](std::string_view line, const LineParser &p) {
    auto f = SplitTabs(line);
    if (f.size() != expected) {
      p.Fail("expected " + std::to_string(expected) + " tab-separated fields, got " +
             std::to_string(f.size()));
    }
    if (mode == Mode::kSi) {
      set.records.push_back(p.Record(f[0], f[1], f[2]));
    } else {
      Annotation a = p.Record(f[0], f[2], f[3]);
      a.technique = ParseTechnique(f[1], aliases);
      if (!a.technique) p.Fail("unknown technique '" + std::string(f[1]) + "'");
      set.records.push_back(a);
    }
  });
  return set;
}

AnnotationSet ParseSpanFile(const std::filesystem::path &path, Mode mode,
                            const AliasTable *aliases) {
  return ParseSpanText(ReadFile(path), mode, aliases, path.string());
}

AnnotationSet ParseSpanTemplateText(std::string_view text,
                                    std::string_view source) {
  AnnotationSet set;
  set.mode = Mode::kSi;
  ForEachLine(text, source, [&](std::string_view line, const LineParser &p) {
    auto f = SplitTabs(line);
    if (f.size() == 3) {
      set.records.push_back(p.Record(f[0], f[1], f[2]));
    } else if (f.size() == 4) {
      if (f[1] != "?") {
        p.Fail("technique label '" + std::string(f[1]) +
               "' present in unlabeled input");
      }
      set.records.push_back(p.Record(f[0], f[2], f[3]));
    } else {
      p.Fail("expected 3 or 4 tab-separated fields, got " +
             std::to_string(f.size()));
    }
  });
  return set;
}

AnnotationSet ParseSpanTemplate(const std::filesystem::path &path) {
  return ParseSpanTemplateText(ReadFile(path), path.string());
}

std::string SerializeSpans(const AnnotationSet &set) {
  std::string out;
  for (const Annotation &a : set.records) {
    out += std::to_string(a.doc_id);
    out += '\t';
    if (set.mode == Mode::kTc) {
      out += a.technique ? CanonicalToken(*a.technique) : "?";
      out += '\t';
    }
    out += std::to_string(a.span.start);
    out += '\t';
    out += std::to_string(a.span.end);
    out += '\n';
  }
  return out;
}

void WriteSpanFile(const std::filesystem::path &path,
                   const AnnotationSet &set) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path.string() + ": cannot open for writing");
  out << SerializeSpans(set);
  if (!out) throw IoError(path.string() + ": write error");
}

std::map<std::int64_t, std::vector<Span>> SpansByDocument(
    const AnnotationSet &set) {
  std::map<std::int64_t, std::vector<Span>> by_doc;
  for (const Annotation &a : set.records) by_doc[a.doc_id].push_back(a.span);
  return by_doc;
}

}  // namespace propeval
