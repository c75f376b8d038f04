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

#ifndef EXTRAPHRASE_CORPUS_IO_HPP_
#define EXTRAPHRASE_CORPUS_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "extraphrase/types.hpp"

namespace extraphrase::corpus_io {

// How sentences lacking `# newdoc id` markers are grouped into documents.
enum class DocGrouping {
  kPerSentence,  // one single-sentence document per sentence (default)
  kPerSentId,    // group consecutive sentences sharing a sent_id prefix
};

struct ConlluOptions {
  bool strict = false;  // strict: abort on first invalid sentence
  DocGrouping grouping = DocGrouping::kPerSentence;
};

struct ConlluResult {
  std::vector<Document> documents;
  std::size_t skipped_sentences = 0;
  std::vector<std::string> skip_reasons;  // one message per skipped sentence
};

// Reads CoNLL-U. Multiword-token ranges (i-j) and empty nodes (i.j) are
// skipped. `# text =` overrides raw_text; `# newdoc id` and `# sent_id`
// comments are honored.
ConlluResult parse_conllu(std::istream& in, const ConlluOptions& opts = {});

// Validates Sentence invariants: contiguous 1..n indices, single root,
// in-range heads, no cycles. Throws InvalidTree on violation.
void validate_sentence(const Sentence& sentence);

// JSONL pair corpus: one object per line with id/source/target and
// optional origin ("genuine"/"pseudo", default genuine).
struct PairReadResult {
  std::vector<ParallelPair> pairs;
  std::size_t rejected_records = 0;
};

PairReadResult read_pairs(std::istream& in, bool strict = false);

// Deterministic writer: fixed key order (id, source, target, origin),
// byte-identical output for identical input.
void write_pairs(const std::vector<ParallelPair>& pairs, std::ostream& out);

std::string origin_name(PairOrigin origin);

}  // namespace extraphrase::corpus_io

#endif  // EXTRAPHRASE_CORPUS_IO_HPP_
