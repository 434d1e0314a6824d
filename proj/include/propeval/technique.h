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

#ifndef PROPEVAL_TECHNIQUE_H_
#define PROPEVAL_TECHNIQUE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace propeval {

// The fourteen propaganda techniques, in taxonomy order. The numeric value
// is also the canonical class order used for every deterministic tie-break.
enum class Technique : std::uint8_t {
  kLoadedLanguage = 0,
  kNameCallingLabeling,
  kRepetition,
  kExaggerationMinimisation,
  kDoubt,
  kAppealToFearPrejudice,
  kFlagWaving,
  kCausalOversimplification,
  kSlogans,
  kAppealToAuthority,
  kBlackAndWhiteFallacy,
  kThoughtTerminatingCliches,
  kWhataboutismStrawMenRedHerring,
  kBandwagonReductioAdHitlerum,
};

inline constexpr std::size_t kNumTechniques = 14;

inline constexpr std::size_t Index(Technique t) {
  return static_cast<std::size_t>(t);
}

const std::array<Technique, kNumTechniques> &AllTechniques();

// Token used in annotation files, e.g. "Name_Calling,Labeling".
std::string_view CanonicalToken(Technique t);

// Human-readable name, e.g. "Name calling or labeling".
std::string_view DisplayName(Technique t);

// Maps alternative spellings onto canonical techniques. Serialization never
// emits an alias.
class AliasTable {
 public:
  void Add(std::string alias, Technique technique);
  std::optional<Technique> Lookup(std::string_view alias) const;
  std::size_t size() const { return aliases_.size(); }

  // Reads "alias<TAB>canonical-token" lines; blank lines and lines starting
  // with '#' are skipped. Throws ParseError / IoError.
  static AliasTable FromFile(const std::filesystem::path &path);

 private:
  std::map<std::string, Technique, std::less<>> aliases_;
};

// Exact match on the canonical token, then on the alias table if given.
std::optional<Technique> ParseTechnique(std::string_view token,
                                        const AliasTable *aliases = nullptr);

}  // namespace propeval

#endif  // PROPEVAL_TECHNIQUE_H_
