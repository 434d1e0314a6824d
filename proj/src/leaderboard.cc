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

#include "propeval/leaderboard.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>

#include "json.hpp"
#include "propeval/corpus.h"
#include "propeval/error.h"
#include "propeval/technique.h"

namespace propeval {
namespace {

std::string Fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string Quote(std::string_view s) {
  if (s.find_first_of(",\"") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<std::string> LeaderboardColumns(Mode task) {
  if (task == Mode::kSi) return {"f1", "precision", "recall"};
  std::vector<std::string> cols{"micro_f1"};
  for (Technique t : AllTechniques()) cols.emplace_back(CanonicalToken(t));
  return cols;
}

std::vector<std::string> SplitCsvRecord(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::vector<LeaderboardEntry> ReadScoreTable(std::string_view csv, Mode task,
                                             std::string_view source) {
  const std::string where(source);
  std::vector<std::vector<std::string>> records;
  std::vector<std::size_t> line_numbers;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < csv.size()) {
    auto nl = csv.find('\n', pos);
    if (nl == std::string_view::npos) nl = csv.size();
    std::string_view line = csv.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    records.push_back(SplitCsvRecord(line));
    line_numbers.push_back(line_no);
  }
  if (records.empty()) throw ParseError(where + ": empty score table", 0);

  std::map<std::string, std::size_t> header;
  for (std::size_t i = 0; i < records[0].size(); ++i) header[records[0][i]] = i;
  std::vector<std::string> wanted = LeaderboardColumns(task);
  wanted.insert(wanted.begin(), "system");
  std::vector<std::size_t> index;
  for (const std::string &col : wanted) {
    auto it = header.find(col);
    if (it == header.end()) {
      throw ParseError(where + ":1: missing column '" + col + "'", 1);
    }
    index.push_back(it->second);
  }

  std::vector<LeaderboardEntry> entries;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto &rec = records[r];
    const std::size_t ln = line_numbers[r];
    if (rec.size() != records[0].size()) {
      throw ParseError(where + ":" + std::to_string(ln) + ": expected " +
                           std::to_string(records[0].size()) + " fields, got " +
                           std::to_string(rec.size()),
                       ln);
    }
    LeaderboardEntry e;
    e.system = rec[index[0]];
    for (std::size_t i = 1; i < index.size(); ++i) {
      const std::string &field = rec[index[i]];
      double v = 0.0;
      auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() ||
          ptr != field.data() + field.size()) {
        throw ParseError(where + ":" + std::to_string(ln) + ": non-numeric " +
                             wanted[i] + " '" + field + "'",
                         ln);
      }
      e.values.push_back(v);
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<LeaderboardEntry> ReadScoreTableFile(
    const std::filesystem::path &path, Mode task) {
  return ReadScoreTable(ReadFile(path), task, path.string());
}

Leaderboard BuildLeaderboard(Mode task, std::vector<LeaderboardEntry> entries) {
  const std::size_t width = LeaderboardColumns(task).size();
  for (const LeaderboardEntry &e : entries) {
    if (e.values.size() != width) {
      throw Error("leaderboard entry " + e.system + " has " +
                  std::to_string(e.values.size()) + " values, expected " +
                  std::to_string(width));
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const LeaderboardEntry &a, const LeaderboardEntry &b) {
              if (a.values[0] != b.values[0]) return a.values[0] > b.values[0];
              return a.system < b.system;
            });
  Leaderboard board;
  board.task = task;
  board.columns = LeaderboardColumns(task);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    int rank = static_cast<int>(i) + 1;
    if (!board.rows.empty() &&
        entries[i].values[0] == board.rows.back().entry.values[0]) {
      rank = board.rows.back().rank;
    }
    board.rows.push_back({rank, std::move(entries[i])});
  }
  return board;
}

std::string LeaderboardToMarkdown(const Leaderboard &board) {
  std::string out = "| Rank | System |";
  std::string rule = "|---:|---|";
  if (board.task == Mode::kSi) {
    out += " F1 | P | R |";
    rule += "---:|---:|---:|";
  } else {
    out += " micro-F1 |";
    rule += "---:|";
    for (std::size_t c = 1; c <= kNumTechniques; ++c) {
      out += " " + std::to_string(c) + " |";
      rule += "---:|";
    }
  }
  out += "\n" + rule + "\n";
  for (const LeaderboardRow &row : board.rows) {
    out += "| " + std::to_string(row.rank) + " | " + row.entry.system + " |";
    for (double v : row.entry.values) out += " " + Fixed2(v) + " |";
    out += "\n";
  }
  return out;
}

std::string LeaderboardToCsv(const Leaderboard &board) {
  std::string out = "rank,system";
  for (const std::string &c : board.columns) out += "," + Quote(c);
  out += "\n";
  for (const LeaderboardRow &row : board.rows) {
    out += std::to_string(row.rank) + "," + Quote(row.entry.system);
    for (double v : row.entry.values) out += "," + Fixed2(v);
    out += "\n";
  }
  return out;
}

std::string LeaderboardToJson(const Leaderboard &board) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const LeaderboardRow &row : board.rows) {
    nlohmann::ordered_json r;
    r["rank"] = row.rank;
    r["system"] = row.entry.system;
    for (std::size_t i = 0; i < board.columns.size(); ++i) {
      r[board.columns[i]] = row.entry.values[i];
    }
    rows.push_back(std::move(r));
  }
  return rows.dump(2) + "\n";
}

}  // namespace propeval
