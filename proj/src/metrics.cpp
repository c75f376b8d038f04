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

#include "extraphrase/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace extraphrase::metrics {

namespace {

bool is_punct(char c) {
  return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

using TokenList = std::vector<std::string>;
using NgramCounts = std::map<std::vector<std::string>, long>;

NgramCounts count_ngrams(const TokenList& tokens, int n) {
  NgramCounts counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i)
    ++counts[std::vector<std::string>(tokens.begin() + i, tokens.begin() + i + n)];
  return counts;
}

long clipped_overlap(const NgramCounts& cand, const NgramCounts& ref) {
  long overlap = 0;
  for (const auto& [gram, count] : cand) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

std::size_t lcs_length(const TokenList& a, const TokenList& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1, 0), cur(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

Score rouge_n_tokens(const TokenList& cand, const TokenList& ref, int n) {
  NgramCounts cgrams = count_ngrams(cand, n);
  NgramCounts rgrams = count_ngrams(ref, n);
  long ctotal = 0, rtotal = 0;
  for (const auto& [g, c] : cgrams) ctotal += c;
  for (const auto& [g, c] : rgrams) rtotal += c;
  long overlap = clipped_overlap(cgrams, rgrams);
  double p = ctotal > 0 ? static_cast<double>(overlap) / ctotal : 0.0;
  double r = rtotal > 0 ? static_cast<double>(overlap) / rtotal : 0.0;
  return make_score(p, r);
}

Score rouge_l_tokens(const TokenList& cand, const TokenList& ref) {
  if (cand.empty() || ref.empty()) return {};
  double lcs = static_cast<double>(lcs_length(cand, ref));
  return make_score(lcs / cand.size(), lcs / ref.size());
}

struct BleuCounts {
  std::vector<long> matched;  // per n, clipped matches
  std::vector<long> total;    // per n, candidate n-gram counts
  long cand_len = 0;
  long ref_len = 0;
};

BleuCounts pair_bleu_counts(const std::string& candidate,
                            const std::string& reference, int max_n) {
  TokenList cand = eval_tokenize(candidate);
  TokenList ref = eval_tokenize(reference);
  BleuCounts counts;
  counts.matched.assign(max_n, 0);
  counts.total.assign(max_n, 0);
  counts.cand_len = static_cast<long>(cand.size());
  counts.ref_len = static_cast<long>(ref.size());
  for (int n = 1; n <= max_n; ++n) {
    NgramCounts cgrams = count_ngrams(cand, n);
    NgramCounts rgrams = count_ngrams(ref, n);
    for (const auto& [g, c] : cgrams) counts.total[n - 1] += c;
    counts.matched[n - 1] = clipped_overlap(cgrams, rgrams);
  }
  return counts;
}

double bleu_from_counts(const std::vector<BleuCounts>& per_pair, int max_n,
                        bool smoothing) {
  std::vector<long> matched(max_n, 0), total(max_n, 0);
  long cand_len = 0, ref_len = 0;
  for (const BleuCounts& c : per_pair) {
    for (int n = 0; n < max_n; ++n) {
      matched[n] += c.matched[n];
      total[n] += c.total[n];
    }
    cand_len += c.cand_len;
    ref_len += c.ref_len;
  }
  if (cand_len == 0) return 0.0;
  double log_precision = 0.0;
  for (int n = 0; n < max_n; ++n) {
    double num = static_cast<double>(matched[n]);
    double den = static_cast<double>(total[n]);
    if (smoothing && (num == 0.0 || den == 0.0)) {
      num += 1.0;
      den += 1.0;
    }
    if (num == 0.0 || den == 0.0) return 0.0;
    log_precision += std::log(num / den);
  }
  double bp = cand_len < ref_len
                  ? std::exp(1.0 - static_cast<double>(ref_len) / cand_len)
                  : 1.0;
  return bp * std::exp(log_precision / max_n);
}

void check_aligned(const std::vector<std::string>& candidates,
                   const std::vector<std::string>& references) {
  if (candidates.size() != references.size())
    throw ArgumentError("candidate/reference list lengths differ (" +
                        std::to_string(candidates.size()) + " vs " +
                        std::to_string(references.size()) + ")");
  if (candidates.empty()) throw ArgumentError("empty corpus");
}

CorpusRouge reduce_rouge(const std::vector<CorpusRouge>& per_pair) {
  CorpusRouge sum;
  auto add = [](Score& acc, const Score& s) {
    acc.precision += s.precision;
    acc.recall += s.recall;
    acc.f1 += s.f1;
  };
  for (const CorpusRouge& p : per_pair) {
    add(sum.rouge1, p.rouge1);
    add(sum.rouge2, p.rouge2);
    add(sum.rougeL, p.rougeL);
  }
  double n = static_cast<double>(per_pair.size());
  auto avg = [n](Score& s) {
    s.precision /= n;
    s.recall /= n;
    s.f1 /= n;
  };
  avg(sum.rouge1);
  avg(sum.rouge2);
  avg(sum.rougeL);
  return sum;
}

CorpusRouge pair_rouge(const std::string& candidate,
                       const std::string& reference) {
  TokenList cand = eval_tokenize(candidate);
  TokenList ref = eval_tokenize(reference);
  CorpusRouge r;
  r.rouge1 = rouge_n_tokens(cand, ref, 1);
  r.rouge2 = rouge_n_tokens(cand, ref, 2);
  r.rougeL = rouge_l_tokens(cand, ref);
  return r;
}

}  // namespace

Score make_score(double precision, double recall) {
  Score s;
  s.precision = precision;
  s.recall = recall;
  s.f1 = precision + recall > 0.0
             ? 2.0 * precision * recall / (precision + recall)
             : 0.0;
  return s;
}

std::vector<std::string> eval_tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string word;
  auto flush_word = [&]() {
    if (word.empty()) return;
    // peel punctuation off both edges, each character its own token
    std::size_t begin = 0, end = word.size();
    while (begin < end && is_punct(word[begin])) ++begin;
    while (end > begin && is_punct(word[end - 1])) --end;
    for (std::size_t i = 0; i < begin; ++i) tokens.push_back(std::string(1, word[i]));
    if (begin < end) tokens.push_back(word.substr(begin, end - begin));
    for (std::size_t i = end; i < word.size(); ++i)
      tokens.push_back(std::string(1, word[i]));
    word.clear();
  };
  for (char raw : text) {
    unsigned char c = static_cast<unsigned char>(raw);
    if (std::isspace(c)) {
      flush_word();
    } else {
      word += static_cast<char>(std::tolower(c));
    }
  }
  flush_word();
  return tokens;
}

Score rouge_n(const std::string& candidate, const std::string& reference, int n) {
  if (n < 1) throw ArgumentError("rouge_n requires n >= 1");
  return rouge_n_tokens(eval_tokenize(candidate), eval_tokenize(reference), n);
}

Score rouge_l(const std::string& candidate, const std::string& reference) {
  return rouge_l_tokens(eval_tokenize(candidate), eval_tokenize(reference));
}

CorpusRouge corpus_rouge_serial(const std::vector<std::string>& candidates,
                                const std::vector<std::string>& references) {
  check_aligned(candidates, references);
  std::vector<CorpusRouge> per_pair(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    per_pair[i] = pair_rouge(candidates[i], references[i]);
  return reduce_rouge(per_pair);
}

CorpusRouge corpus_rouge(const std::vector<std::string>& candidates,
                         const std::vector<std::string>& references) {
  check_aligned(candidates, references);
  std::vector<CorpusRouge> per_pair(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < static_cast<long>(candidates.size()); ++i)
    per_pair[i] = pair_rouge(candidates[i], references[i]);
  return reduce_rouge(per_pair);  // fixed reduction order
}

double corpus_bleu_serial(const std::vector<std::string>& candidates,
                          const std::vector<std::string>& references, int max_n,
                          bool smoothing) {
  check_aligned(candidates, references);
  std::vector<BleuCounts> per_pair(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    per_pair[i] = pair_bleu_counts(candidates[i], references[i], max_n);
  return bleu_from_counts(per_pair, max_n, smoothing);
}

double corpus_bleu(const std::vector<std::string>& candidates,
                   const std::vector<std::string>& references, int max_n,
                   bool smoothing) {
  check_aligned(candidates, references);
  std::vector<BleuCounts> per_pair(candidates.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < static_cast<long>(candidates.size()); ++i)
    per_pair[i] = pair_bleu_counts(candidates[i], references[i], max_n);
  return bleu_from_counts(per_pair, max_n, smoothing);
}

LengthStats length_stats(const std::vector<std::string>& candidates,
                         const std::vector<std::string>& references) {
  check_aligned(candidates, references);
  double cand_sum = 0.0, ref_sum = 0.0, diff_sum = 0.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double c = static_cast<double>(eval_tokenize(candidates[i]).size());
    double r = static_cast<double>(eval_tokenize(references[i]).size());
    cand_sum += c;
    ref_sum += r;
    diff_sum += c - r;
  }
  if (ref_sum == 0.0)
    throw DegenerateInput("zero mean reference length");
  LengthStats stats;
  stats.ratio = cand_sum / ref_sum;
  stats.difference = diff_sum / static_cast<double>(candidates.size());
  return stats;
}

}  // namespace extraphrase::metrics
