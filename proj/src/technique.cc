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

#include "propeval/technique.h"

#include <fstream>
#include <sstream>

#include "propeval/error.h"

namespace propeval {
namespace {

struct TechniqueInfo {
  std::string_view token;
  std::string_view name;
};

constexpr std::array<TechniqueInfo, kNumTechniques> kInfo = {{
    {"Loaded_Language", "Loaded language"},
    {"Name_Calling,Labeling", "Name calling or labeling"},
    {"Repetition", "Repetition"},
    {"Exaggeration,Minimisation", "Exaggeration or minimization"},
    {"Doubt", "Doubt"},
    {"Appeal_to_fear-prejudice", "Appeal to fear/prejudice"},
    {"Flag-Waving", "Flag-waving"},
    {"Causal_Oversimplification", "Causal oversimplification"},
    {"Slogans", "Slogans"},
    {"Appeal_to_Authority", "Appeal to authority"},
    {"Black-and-White_Fallacy", "Black-and-white fallacy, dictatorship"},
    {"Thought-terminating_Cliches", "Thought-terminating cliche"},
    {"Whataboutism,Straw_Men,Red_Herring",
     "Whataboutism, straw man, red herring"},
    {"Bandwagon,Reductio_ad_hitlerum", "Bandwagon, reductio ad hitlerum"},
}};

}  // namespace

const std::array<Technique, kNumTechniques> &AllTechniques() {
  static const std::array<Technique, kNumTechniques> all = [] {
    std::array<Technique, kNumTechniques> a{};
    for (std::size_t i = 0; i < kNumTechniques; ++i) {
      a[i] = static_cast<Technique>(i);
    }
    return a;
  }();
  return all;
}

std::string_view CanonicalToken(Technique t) { return kInfo[Index(t)].token; }

std::string_view DisplayName(Technique t) { return kInfo[Index(t)].name; }

void AliasTable::Add(std::string alias, Technique technique) {
  aliases_.insert_or_assign(std::move(alias), technique);
}

std::optional<Technique> AliasTable::Lookup(std::string_view alias) const {
  auto it = aliases_.find(alias);
  if (it == aliases_.end()) return std::nullopt;
  return it->second;
}

AliasTable AliasTable::FromFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string() + ": no such file");
  AliasTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": expected alias<TAB>technique",
                       line_no);
    }
    auto target = ParseTechnique(std::string_view(line).substr(tab + 1));
    if (!target) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) +
                           ": unknown canonical technique '" +
                           line.substr(tab + 1) + "'",
                       line_no);
    }
    table.Add(line.substr(0, tab), *target);
  }
  return table;
}

std::optional<Technique> ParseTechnique(std::string_view token,
                                        const AliasTable *aliases) {
  for (std::size_t i = 0; i < kNumTechniques; ++i) {
    if (kInfo[i].token == token) return static_cast<Technique>(i);
  }
  if (aliases != nullptr) return aliases->Lookup(token);
  return std::nullopt;
}

}  // namespace propeval
