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

#ifndef PROPEVAL_SPAN_H_
#define PROPEVAL_SPAN_H_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace propeval {

// Half-open character interval [start, end) in Unicode scalar values.
// An inclusive index set [a, b] corresponds to Span{a, b + 1}.
struct Span {
  std::int64_t start = 0;
  std::int64_t end = 0;

  std::int64_t length() const { return end - start; }
  bool empty() const { return end <= start; }

  friend auto operator<=>(const Span &, const Span &) = default;
};

// Number of characters shared by two spans.
inline std::int64_t OverlapLength(const Span &a, const Span &b) {
  return std::max<std::int64_t>(
      0, std::min(a.end, b.end) - std::max(a.start, b.start));
}

// Replaces every group of spans sharing at least one character with their
// interval union. Touching spans such as [0,5) and [5,9) stay separate.
// The result is sorted by start and independent of input order.
std::vector<Span> MergeSpans(std::span<const Span> spans);

}  // namespace propeval

#endif  // PROPEVAL_SPAN_H_
