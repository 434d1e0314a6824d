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

#ifndef PROPEVAL_VALIDATE_H_
#define PROPEVAL_VALIDATE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "propeval/annotations.h"
#include "propeval/corpus.h"
#include "propeval/error.h"

namespace propeval {

struct ValidationIssue {
  std::size_t line = 0;  // 1-based, 0 when not tied to a line
  std::string kind;      // e.g. "unknown-document"
  std::string message;

  friend bool operator==(const ValidationIssue &,
                         const ValidationIssue &) = default;
};

// Empty errors means the input is accepted by scoring.
struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
};

// Scoring refused its input. Carries the full report.
class InvalidInputError : public Error {
 public:
  InvalidInputError(const std::string &what, ValidationReport report)
      : Error(what), report_(std::move(report)) {}
  const ValidationReport &report() const { return report_; }

 private:
  ValidationReport report_;
};

// Checks annotations against the corpus. Errors: unknown document, span
// beyond the document end, a mode/technique mismatch. Warnings: repeated
// identical SI records, overlapping SI spans within a document.
ValidationReport Validate(const Corpus &corpus, const AnnotationSet &ann);

// Validate(), throwing InvalidInputError on any error. `what` names the
// input in the message, e.g. "gold".
void RequireValid(const Corpus &corpus, const AnnotationSet &ann,
                  const std::string &what);

}  // namespace propeval

#endif  // PROPEVAL_VALIDATE_H_
