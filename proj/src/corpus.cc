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

#include "propeval/corpus.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <vector>

#include "propeval/error.h"
#include "propeval/parallel.h"
#include "propeval/utf8.h"

namespace propeval {
namespace {

constexpr std::string_view kPrefix = "article";
constexpr std::string_view kSuffix = ".txt";

std::optional<std::int64_t> ArticleId(std::string_view name) {
  if (name.size() <= kPrefix.size() + kSuffix.size()) return std::nullopt;
  if (!name.starts_with(kPrefix) || !name.ends_with(kSuffix)) {
    return std::nullopt;
  }
  std::string_view digits = name.substr(
      kPrefix.size(), name.size() - kPrefix.size() - kSuffix.size());
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  std::int64_t id = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), id);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return id;
}

}  // namespace

std::string_view PartitionName(Partition p) {
  switch (p) {
    case Partition::kTraining: return "training";
    case Partition::kDevelopment: return "development";
    case Partition::kTest: return "test";
    case Partition::kUnlabeled: return "unlabeled";
  }
  return "unlabeled";
}

std::optional<Partition> ParsePartition(std::string_view name) {
  if (name == "training" || name == "train") return Partition::kTraining;
  if (name == "development" || name == "dev") return Partition::kDevelopment;
  if (name == "test") return Partition::kTest;
  if (name == "unlabeled") return Partition::kUnlabeled;
  return std::nullopt;
}

void Corpus::Add(Document doc) {
  const auto id = doc.id;
  auto [it, inserted] = documents_.emplace(id, std::move(doc));
  if (!inserted) throw Error("duplicate document id " + std::to_string(id));
}

const Document *Corpus::Find(std::int64_t id) const {
  auto it = documents_.find(id);
  return it == documents_.end() ? nullptr : &it->second;
}

Document ParseArticle(std::string_view file_name, std::string_view bytes) {
  auto id = ArticleId(file_name);
  if (!id) {
    throw NameError("'" + std::string(file_name) +
                    "' does not match article<digits>.txt");
  }
  Document doc;
  doc.id = *id;
  try {
    doc.text = DecodeUtf8(bytes);
  } catch (const EncodingError &e) {
    throw EncodingError(std::string(file_name) + ": " + e.what(),
                        e.byte_offset());
  }
  return doc;
}

std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string() + ": no such file");
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(path.string() + ": read error");
  return bytes;
}

Corpus LoadCorpus(const std::filesystem::path &dir, Partition partition) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError(dir.string() + ": no such directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto &entry : std::filesystem::directory_iterator(dir, ec)) {
    if (!entry.is_regular_file()) continue;
    if (ArticleId(entry.path().filename().string())) {
      files.push_back(entry.path());
    }
  }
  if (ec) throw IoError(dir.string() + ": " + ec.message());
  std::sort(files.begin(), files.end());

  std::vector<Document> docs(files.size());
  ParallelFor(files.size(), [&](std::size_t i) {
    docs[i] = ParseArticle(files[i].filename().string(), ReadFile(files[i]));
  });

  Corpus corpus(partition);
  for (auto &doc : docs) corpus.Add(std::move(doc));
  return corpus;
}

}  // namespace propeval
