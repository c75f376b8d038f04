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

#ifndef EXTRAPHRASE_METRICS_HPP_
#define EXTRAPHRASE_METRICS_HPP_

#include <string>
#include <vector>

#include "extraphrase/types.hpp"

namespace extraphrase::metrics {

struct Score {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

Score make_score(double precision, double recall);

struct LengthStats {
  double ratio = 0.0;       // mean candidate length / mean reference length
  double difference = 0.0;  // mean per-pair candidate - reference token count
};

// Shared preprocessing for all metrics: lowercase, split ASCII punctuation
// off word edges, split on whitespace. No stemming.
std::vector<std::string> eval_tokenize(const std::string& text);

// Clipped n-gram overlap F1 on a single pair.
Score rouge_n(const std::string& candidate, const std::string& reference, int n);

// LCS-based F1 on a single pair, computed over whole texts.
Score rouge_l(const std::string& candidate, const std::string& reference);

struct CorpusRouge {
  Score rouge1;
  Score rouge2;
  Score rougeL;
};

// Macro average of per-pair P/R/F1. Parallel per-pair scoring with a fixed
// reduction order; the serial version is the reference for tests.
CorpusRouge corpus_rouge(const std::vector<std::string>& candidates,
                         const std::vector<std::string>& references);
CorpusRouge corpus_rouge_serial(const std::vector<std::string>& candidates,
                                const std::vector<std::string>& references);

// Corpus-level IBM BLEU: clipped n-gram precision counts summed over pairs,
// geometric mean over n = 1..max_n, brevity penalty min(1, e^(1-r/c)).
// smoothing adds one to numerator and denominator of zero-count orders
// (useful for short headline corpora that zero out).
double corpus_bleu(const std::vector<std::string>& candidates,
                   const std::vector<std::string>& references, int max_n = 4,
                   bool smoothing = false);
double corpus_bleu_serial(const std::vector<std::string>& candidates,
                          const std::vector<std::string>& references,
                          int max_n = 4, bool smoothing = false);

LengthStats length_stats(const std::vector<std::string>& candidates,
                         const std::vector<std::string>& references);

}  // namespace extraphrase::metrics

#endif  // EXTRAPHRASE_METRICS_HPP_
