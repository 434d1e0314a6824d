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

#ifndef PROPEVAL_ERROR_H_
#define PROPEVAL_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace propeval {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Article file name does not match article<digits>.txt.
class NameError : public Error {
 public:
  using Error::Error;
};

// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  EncodingError(const std::string &what, std::size_t byte_offset)
      : Error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// Malformed annotation or score file. line() is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line)
      : Error(what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// File could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

// TC predictions do not cover the gold key multiset.
class MissingPredictionError : public Error {
 public:
  MissingPredictionError(const std::string &what,
                         std::vector<std::string> offending_keys)
      : Error(what), offending_keys_(std::move(offending_keys)) {}
  const std::vector<std::string> &offending_keys() const {
    return offending_keys_;
  }

 private:
  std::vector<std::string> offending_keys_;
};

class DegenerateFeatureError : public Error {
 public:
  using Error::Error;
};

class EmptyEnsembleError : public Error {
 public:
  using Error::Error;
};

class MisalignedEnsembleError : public Error {
 public:
  using Error::Error;
};

}  // namespace propeval

#endif  // PROPEVAL_ERROR_H_
