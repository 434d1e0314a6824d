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

#include "doctest.h"
#include "json.hpp"
#include "oracles.h"
#include "propeval/error.h"
#include "propeval/leaderboard.h"

namespace propeval {
namespace {

TEST_CASE("SI score table from the fixture") {
  const auto entries =
      ReadScoreTableFile(testing::Fixture("errata_si.csv"), Mode::kSi);
  CHECK(entries.size() == 36);
  const Leaderboard board = BuildLeaderboard(Mode::kSi, entries);
  REQUIRE(board.rows.size() == 36);
  CHECK(board.columns == std::vector<std::string>{"f1", "precision", "recall"});
  const LeaderboardRow &top = board.rows[0];
  CHECK(top.rank == 1);
  CHECK(top.entry.system == "Hitachi");
  CHECK(top.entry.values == std::vector<double>{51.74, 55.76, 48.27});

  // The tied pair shares a rank and is listed by name.
  int found = 0;
  for (std::size_t i = 0; i + 1 < board.rows.size(); ++i) {
    if (board.rows[i].entry.system == "NTUAAILS") {
      CHECK(board.rows[i + 1].entry.system == "SkoltechNLP");
      CHECK(board.rows[i].rank == board.rows[i + 1].rank);
      CHECK(board.rows[i + 2].rank == board.rows[i].rank + 2);
      ++found;
    }
  }
  CHECK(found == 1);
  for (std::size_t i = 1; i < board.rows.size(); ++i) {
    CHECK(board.rows[i - 1].entry.values[0] >= board.rows[i].entry.values[0]);
  }

  const std::string md = LeaderboardToMarkdown(board);
  CHECK(md.find("| 1 | Hitachi | 51.74 | 55.76 | 48.27 |") != std::string::npos);
  auto j = nlohmann::json::parse(LeaderboardToJson(board));
  CHECK(j[0]["system"] == "Hitachi");
}

TEST_CASE("TC score table from the fixture") {
  const auto entries =
      ReadScoreTableFile(testing::Fixture("errata_tc.csv"), Mode::kTc);
  CHECK(entries.size() == 32);
  const Leaderboard board = BuildLeaderboard(Mode::kTc, entries);
  CHECK(board.columns.size() == 15);
  CHECK(board.columns[0] == "micro_f1");
  CHECK(board.rows[0].entry.system == "ApplicaAI");
  CHECK(board.rows[0].entry.values[0] == 63.74);
  // Columns come back in canonical order regardless of the file's order.
  CHECK(board.columns[1] == "Loaded_Language");
  CHECK(board.rows[0].entry.values[1] == 78.27);
}

TEST_CASE("CSV output reads back") {
  std::vector<LeaderboardEntry> entries{{"b, inc", {40.0, 50.0, 33.5}},
                                        {"a", {40.0, 41.0, 39.0}},
                                        {"c", {45.5, 40.0, 52.0}}};
  const Leaderboard board = BuildLeaderboard(Mode::kSi, entries);
  CHECK(board.rows[0].entry.system == "c");
  CHECK(board.rows[1].rank == 2);
  CHECK(board.rows[2].rank == 2);
  CHECK(board.rows[1].entry.system == "a");
  const std::string csv = LeaderboardToCsv(board);
  const auto back = ReadScoreTable(csv, Mode::kSi);
  REQUIRE(back.size() == 3);
  CHECK(back[2].system == "b, inc");
  CHECK(LeaderboardToCsv(BuildLeaderboard(Mode::kSi, back)) == csv);
}

TEST_CASE("score table errors") {
  CHECK_THROWS_AS(ReadScoreTable("system,f1,precision\nx,1,2\n", Mode::kSi), ParseError);
  CHECK_THROWS_AS(ReadScoreTable("system,f1,precision,recall\nx,1,two,3\n", Mode::kSi),
                  ParseError);
  CHECK_THROWS_AS(BuildLeaderboard(Mode::kSi, {{"x", {1.0}}}), Error);
  CHECK(SplitCsvRecord("a,\"b,c\",\"d\"\"e\"") ==
        std::vector<std::string>{"a", "b,c", "d\"e"});
}

}  // namespace
}  // namespace propeval
