//
// Copyright 2026 ExtraPhrase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef EXTRAPHRASE_TYPES_HPP_
#define EXTRAPHRASE_TYPES_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace extraphrase {

// One word of a parsed sentence. Indices are 1-based; head 0 marks the
// syntactic root.
struct Token {
  int index = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  int head = 0;
  std::string deprel;
};

struct Sentence {
  std::vector<Token> tokens;
  std::string raw_text;  // whitespace join of forms unless overridden

  std::size_t size() const { return tokens.size(); }
};

struct Document {
  std::string id;
  std::vector<Sentence> sentences;
};

enum class PairOrigin { kGenuine, kPseudo };

// A (source text, summary text) training instance.
struct ParallelPair {
  std::string id;
  std::string source;
  std::string target;
  PairOrigin origin = PairOrigin::kGenuine;

  bool operator==(const ParallelPair&) const = default;
};

// Error hierarchy. Exit-code mapping lives in the CLI: usage/config errors
// exit 1, data errors 2, backend errors 3.
class ToolkitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public ToolkitError {
 public:
  using ToolkitError::ToolkitError;
};

class ArgumentError : public UsageError {
 public:
  using UsageError::UsageError;
};

class DataError : public ToolkitError {
 public:
  using ToolkitError::ToolkitError;
};

class MalformedLine : public DataError {
 public:
  MalformedLine(std::size_t line_number, const std::string& what)
      : DataError("line " + std::to_string(line_number) + ": " + what),
        line_number_(line_number) {}
  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

class InvalidTree : public DataError {
 public:
  using DataError::DataError;
};

class MalformedRecord : public DataError {
 public:
  MalformedRecord(std::size_t line_number, const std::string& what)
      : DataError("record at line " + std::to_string(line_number) + ": " +
                  what),
        line_number_(line_number) {}
  std::size_t line_number() const { return line_number_; }

 private:
  std::size_t line_number_;
};

class DegenerateInput : public DataError {
 public:
  using DataError::DataError;
};

class BackendError : public ToolkitError {
 public:
  using ToolkitError::ToolkitError;
};

class BackendUnavailable : public BackendError {
 public:
  using BackendError::BackendError;
};

class LengthMismatch : public BackendError {
 public:
  using BackendError::BackendError;
};

}  // namespace extraphrase

#endif  // EXTRAPHRASE_TYPES_HPP_
