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

#ifndef PROPEVAL_LEADERBOARD_H_
#define PROPEVAL_LEADERBOARD_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "propeval/annotations.h"

namespace propeval {

// One system's scores, in percent. SI: {F1, P, R}; TC: {micro-F1, then one
// F1 per technique in canonical order}.
struct LeaderboardEntry {
  std::string system;
  std::vector<double> values;
};

struct LeaderboardRow {
  int rank = 0;
  LeaderboardEntry entry;
};

struct Leaderboard {
  Mode task = Mode::kSi;
  std::vector<std::string> columns;  // value column names
  std::vector<LeaderboardRow> rows;
};

// Value column names for a task, e.g. {"f1", "precision", "recall"}.
std::vector<std::string> LeaderboardColumns(Mode task);

// Sorts by the first value, descending. Equal scores share the smaller
// rank and are listed by name.
Leaderboard BuildLeaderboard(Mode task, std::vector<LeaderboardEntry> entries);

// Reads a score table with a header row. SI needs columns system, f1,
// precision, recall; TC needs system, micro_f1 and one column per canonical
// technique token. Column order is free; fields may be double-quoted.
std::vector<LeaderboardEntry> ReadScoreTable(std::string_view csv, Mode task,
                                             std::string_view source = "<input>");
std::vector<LeaderboardEntry> ReadScoreTableFile(
    const std::filesystem::path &path, Mode task);

std::string LeaderboardToMarkdown(const Leaderboard &board);
std::string LeaderboardToCsv(const Leaderboard &board);
std::string LeaderboardToJson(const Leaderboard &board);

// Splits one CSV record honoring double quotes.
std::vector<std::string> SplitCsvRecord(std::string_view line);

}  // namespace propeval

#endif  // PROPEVAL_LEADERBOARD_H_
