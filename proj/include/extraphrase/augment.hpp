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

#ifndef EXTRAPHRASE_AUGMENT_HPP_
#define EXTRAPHRASE_AUGMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "extraphrase/deptree.hpp"
#include "extraphrase/paraphrase.hpp"
#include "extraphrase/types.hpp"

namespace extraphrase::augment {

struct AugmentConfig {
  deptree::CompressionConfig compression;
  // nullopt = compression-only ablation (no paraphrasing)
  std::optional<paraphrase::RoundTripConfig> roundtrip;
  int doc_sentence_limit = 3;
  std::string pseudo_tag = "<Pseudo>";
  bool tag_enabled = true;
  // Pseudo-pair sources keep the full original document by default; set to
  // store only the first doc_sentence_limit sentences instead.
  bool truncate_source = false;
  bool strict = false;
};

// Generates a pseudo summary for one sentence: round-trip translation of
// the compressed sentence, or the compression alone in ablation mode.
std::string extraphrase_sentence(const Sentence& sentence,
                                 const AugmentConfig& config);

// Applies extraphrase_sentence to the first doc_sentence_limit sentences
// and concatenates the outputs in original order.
std::string extraphrase_document(const Document& document,
                                 const AugmentConfig& config);

struct PseudoCorpusResult {
  std::vector<ParallelPair> pairs;
  std::size_t skipped_documents = 0;
  std::vector<std::string> skipped_ids;
};

// One pseudo pair per document, output order = input order. Paraphrase
// batching crosses document boundaries for throughput.
PseudoCorpusResult build_pseudo_corpus(const std::vector<Document>& documents,
                                       const AugmentConfig& config);

// Original pairs followed by (target_count - |pairs|) pairs sampled
// uniformly with replacement. Deterministic for a fixed seed.
std::vector<ParallelPair> oversample(const std::vector<ParallelPair>& pairs,
                                     std::size_t target_count,
                                     std::uint64_t seed);

// Concatenates genuine and pseudo pairs, optionally shuffling with the
// seeded generator. When pseudo_tag is non-empty, validates the tag
// discipline: every pseudo source starts with tag + space, no genuine
// source does.
std::vector<ParallelPair> mix(const std::vector<ParallelPair>& genuine,
                              const std::vector<ParallelPair>& pseudo,
                              std::uint64_t seed, bool shuffle,
                              const std::string& pseudo_tag = "<Pseudo>");

// Whitespace join of a document's sentence texts.
std::string document_text(const Document& document, int sentence_limit = 0);

}  // namespace extraphrase::augment

#endif  // EXTRAPHRASE_AUGMENT_HPP_
