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

#include "cli_cases.h"

#include "oracles.h"

namespace propeval::testing {

std::vector<std::vector<std::string>> FixtureInvocations() {
  const std::string articles = Fixture("mini/articles").string();
  const std::string gold_tc = Fixture("mini/gold_tc.tsv").string();
  const std::string gold_si = Fixture("mini/gold_si.tsv").string();
  const std::string pred_si = Fixture("mini/pred_si.tsv").string();
  const std::string tmpl = Fixture("mini/template_tc.tsv").string();
  const std::string prior = Fixture("prior_train.tsv").string();
  return {
      {"propeval", "validate", "--articles", articles, "--spans", gold_tc,
       "--task", "tc"},
      {"propeval", "validate", "--articles", articles, "--spans", tmpl,
       "--task", "tc", "--phase", "test", "--format", "md"},
      {"propeval", "score-si", "--articles", articles, "--gold", gold_si,
       "--pred", pred_si, "--per-document"},
      {"propeval", "score-si", "--articles", articles, "--gold", gold_si,
       "--pred", pred_si, "--eq-convention", "literal-paper", "--format",
       "text"},
      {"propeval", "score-tc", "--gold", gold_tc, "--pred", gold_tc},
      {"propeval", "baseline-si", "--articles", articles, "--seed", "7",
       "--spans-per-doc", "6"},
      {"propeval", "baseline-tc", "--train", gold_tc, "--input", tmpl,
       "--epochs", "200"},
      {"propeval", "combine", "--task", "si", "--method", "majority", "--pred",
       gold_si, "--pred", pred_si, "--pred", pred_si, "--articles", articles},
      {"propeval", "combine", "--task", "tc", "--pred", gold_tc, "--pred",
       gold_tc, "--train", prior},
      {"propeval", "sweep", "--task", "si", "--pred", pred_si, "--pred",
       gold_si, "--gold", gold_si, "--articles", articles, "--format", "csv"},
      {"propeval", "sweep", "--task", "tc", "--pred", gold_tc, "--pred",
       gold_tc, "--gold", gold_tc},
      {"propeval", "stats", "--articles", articles, "--gold", gold_tc,
       "--partition", "train", "--duplicates", "--format", "md"},
      {"propeval", "leaderboard", "--task", "si", "--scores",
       Fixture("errata_si.csv").string()},
      {"propeval", "leaderboard", "--task", "si", "--system", "a=" + pred_si,
       "--system", "b=" + gold_si, "--gold", gold_si, "--articles", articles,
       "--format", "csv"},
  };
}

}  // namespace propeval::testing
