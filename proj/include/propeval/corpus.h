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

#ifndef PROPEVAL_CORPUS_H_
#define PROPEVAL_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace propeval {

enum class Partition { kTraining, kDevelopment, kTest, kUnlabeled };

std::string_view PartitionName(Partition p);
std::optional<Partition> ParsePartition(std::string_view name);

// One news article. Character offsets index into text, which holds
// Unicode scalar values.
struct Document {
  std::int64_t id = 0;
  std::u32string text;

  std::int64_t length() const { return static_cast<std::int64_t>(text.size()); }
};

class Corpus {
 public:
  using Map = std::map<std::int64_t, Document>;

  Corpus() = default;
  explicit Corpus(Partition partition) : partition_(partition) {}

  // Throws Error on a duplicate id.
  void Add(Document doc);

  const Document *Find(std::int64_t id) const;
  std::size_t size() const { return documents_.size(); }
  bool empty() const { return documents_.empty(); }
  Partition partition() const { return partition_; }

  Map::const_iterator begin() const { return documents_.begin(); }
  Map::const_iterator end() const { return documents_.end(); }

 private:
  Map documents_;
  Partition partition_ = Partition::kUnlabeled;
};

// Builds a Document from an "article<digits>.txt" file. Throws NameError or
// EncodingError.
Document ParseArticle(std::string_view file_name, std::string_view bytes);

// Loads every article<digits>.txt in dir; other files are ignored. Throws
// IoError when dir is not a readable directory.
Corpus LoadCorpus(const std::filesystem::path &dir,
                  Partition partition = Partition::kUnlabeled);

std::string ReadFile(const std::filesystem::path &path);

}  // namespace propeval

#endif  // PROPEVAL_CORPUS_H_
