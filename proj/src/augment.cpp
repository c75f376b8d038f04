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

#include "extraphrase/augment.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace extraphrase::augment {

namespace {

// explicit index draw so shuffles and samples are reproducible across
// standard library implementations
std::size_t draw_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

std::string join_spaced(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

bool starts_with_tag(const std::string& text, const std::string& tag) {
  return text.rfind(tag + " ", 0) == 0;
}

}  // namespace

std::string document_text(const Document& document, int sentence_limit) {
  std::vector<std::string> parts;
  std::size_t limit = sentence_limit > 0
                          ? std::min<std::size_t>(sentence_limit,
                                                  document.sentences.size())
                          : document.sentences.size();
  for (std::size_t i = 0; i < limit; ++i)
    parts.push_back(document.sentences[i].raw_text);
  return join_spaced(parts);
}

std::string extraphrase_sentence(const Sentence& sentence,
                                 const AugmentConfig& config) {
  std::string compressed = deptree::compress(sentence, config.compression);
  if (!config.roundtrip) return compressed;
  return paraphrase::round_trip({compressed}, *config.roundtrip)[0];
}

std::string extraphrase_document(const Document& document,
                                 const AugmentConfig& config) {
  std::size_t limit = std::min<std::size_t>(config.doc_sentence_limit,
                                            document.sentences.size());
  std::vector<std::string> compressed;
  compressed.reserve(limit);
  for (std::size_t i = 0; i < limit; ++i)
    compressed.push_back(
        deptree::compress(document.sentences[i], config.compression));
  if (config.roundtrip)
    compressed = paraphrase::round_trip(compressed, *config.roundtrip);
  return join_spaced(compressed);
}

PseudoCorpusResult build_pseudo_corpus(const std::vector<Document>& documents,
                                       const AugmentConfig& config) {
  PseudoCorpusResult result;

  // Step 1 over every needed sentence, flattened so paraphrase batching
  // crosses document boundaries.
  std::vector<Sentence> flat;
  std::vector<std::pair<std::size_t, std::size_t>> doc_ranges;  // [begin, end)
  for (const Document& doc : documents) {
    std::size_t limit =
        std::min<std::size_t>(config.doc_sentence_limit, doc.sentences.size());
    std::size_t begin = flat.size();
    for (std::size_t i = 0; i < limit; ++i) flat.push_back(doc.sentences[i]);
    doc_ranges.emplace_back(begin, flat.size());
  }
  std::vector<std::string> compressed =
      deptree::compress_corpus(flat, config.compression);

  std::vector<std::string> targets = compressed;
  std::vector<bool> doc_failed(documents.size(), false);
  if (config.roundtrip) {
    try {
      targets = paraphrase::round_trip(compressed, *config.roundtrip);
    } catch (const BackendError&) {
      if (config.strict) throw;
      // retry per document so one bad batch only skips the documents in it
      for (std::size_t d = 0; d < documents.size(); ++d) {
        auto [begin, end] = doc_ranges[d];
        std::vector<std::string> chunk(compressed.begin() + begin,
                                       compressed.begin() + end);
        try {
          std::vector<std::string> rt =
              paraphrase::round_trip(chunk, *config.roundtrip);
          std::copy(rt.begin(), rt.end(), targets.begin() + begin);
        } catch (const BackendError&) {
          doc_failed[d] = true;
        }
      }
    }
  }

  for (std::size_t d = 0; d < documents.size(); ++d) {
    const Document& doc = documents[d];
    if (doc_failed[d]) {
      ++result.skipped_documents;
      result.skipped_ids.push_back(doc.id);
      continue;
    }
    auto [begin, end] = doc_ranges[d];
    std::vector<std::string> parts(targets.begin() + begin,
                                   targets.begin() + end);
    ParallelPair pair;
    pair.id = doc.id;
    std::string src = document_text(
        doc, config.truncate_source ? config.doc_sentence_limit : 0);
    pair.source = config.tag_enabled ? config.pseudo_tag + " " + src : src;
    pair.target = join_spaced(parts);
    pair.origin = PairOrigin::kPseudo;
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

std::vector<ParallelPair> oversample(const std::vector<ParallelPair>& pairs,
                                     std::size_t target_count,
                                     std::uint64_t seed) {
  if (pairs.empty()) throw ArgumentError("oversample: empty pair list");
  if (target_count < pairs.size())
    throw ArgumentError("oversample: target_count " +
                        std::to_string(target_count) + " < corpus size " +
                        std::to_string(pairs.size()));
  std::vector<ParallelPair> out = pairs;
  out.reserve(target_count);
  std::mt19937_64 rng(seed);
  while (out.size() < target_count)
    out.push_back(pairs[draw_index(rng, pairs.size())]);
  return out;
}

std::vector<ParallelPair> mix(const std::vector<ParallelPair>& genuine,
                              const std::vector<ParallelPair>& pseudo,
                              std::uint64_t seed, bool shuffle,
                              const std::string& pseudo_tag) {
  if (!pseudo_tag.empty()) {
    for (const ParallelPair& p : genuine)
      if (starts_with_tag(p.source, pseudo_tag))
        throw DataError("genuine pair '" + p.id + "' carries the pseudo tag");
    for (const ParallelPair& p : pseudo)
      if (!starts_with_tag(p.source, pseudo_tag))
        throw DataError("pseudo pair '" + p.id + "' lacks the pseudo tag");
  }
  std::vector<ParallelPair> out;
  out.reserve(genuine.size() + pseudo.size());
  out.insert(out.end(), genuine.begin(), genuine.end());
  out.insert(out.end(), pseudo.begin(), pseudo.end());
  if (shuffle && out.size() > 1) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = out.size() - 1; i > 0; --i)
      std::swap(out[i], out[draw_index(rng, i + 1)]);
  }
  return out;
}

}  // namespace extraphrase::augment
