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
// Benchmark comparing the OpenMP corpus kernels against the serial
// reference implementations on a synthetic corpus.

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "extraphrase/deptree.hpp"
#include "extraphrase/metrics.hpp"
#include "extraphrase/types.hpp"

using namespace extraphrase;

namespace {

Sentence random_sentence(std::mt19937_64& rng, int max_tokens) {
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_tokens));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  for (int i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
  static const std::vector<std::string> labels = {
      "det", "case", "aux", "punct", "cc", "mark", "nsubj", "obj", "obl",
      "amod", "advmod", "nmod", "conj"};
  Sentence s;
  std::vector<Token> tokens(n);
  for (int k = 0; k < n; ++k) {
    int idx = order[k];
    Token& t = tokens[idx - 1];
    t.index = idx;
    t.form = "w" + std::to_string(rng() % 500);
    t.lemma = t.form;
    t.upos = "X";
    if (k == 0) {
      t.head = 0;
      t.deprel = "root";
    } else {
      t.head = order[rng() % static_cast<std::uint64_t>(k)];
      t.deprel = labels[rng() % labels.size()];
    }
  }
  s.tokens = tokens;
  for (const Token& t : s.tokens) {
    if (!s.raw_text.empty()) s.raw_text += ' ';
    s.raw_text += t.form;
  }
  return s;
}

template <typename F>
double time_it(F&& f) {
  auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int corpus_size = argc > 1 ? std::atoi(argv[1]) : 50000;
  std::mt19937_64 rng(12345);

  std::vector<Sentence> corpus;
  corpus.reserve(corpus_size);
  for (int i = 0; i < corpus_size; ++i)
    corpus.push_back(random_sentence(rng, 30));

#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without OpenMP; parallel kernels run serially\n";
#endif
  std::cout << "corpus: " << corpus_size << " sentences\n\n";

  deptree::CompressionConfig cfg;
  std::vector<std::string> serial_out, parallel_out;
  double t_serial = time_it(
      [&] { serial_out = deptree::compress_corpus_serial(corpus, cfg); });
  double t_parallel =
      time_it([&] { parallel_out = deptree::compress_corpus(corpus, cfg); });
  std::cout << "compress  serial " << t_serial << " s, parallel " << t_parallel
            << " s, speedup " << t_serial / t_parallel
            << (serial_out == parallel_out ? "  [outputs match]"
                                           : "  [MISMATCH]")
            << "\n";

  std::vector<std::string> cands = serial_out;
  std::vector<std::string> refs;
  for (const Sentence& s : corpus) refs.push_back(s.raw_text);

  metrics::CorpusRouge rs, rp;
  double tr_serial = time_it([&] { rs = metrics::corpus_rouge_serial(cands, refs); });
  double tr_parallel = time_it([&] { rp = metrics::corpus_rouge(cands, refs); });
  std::cout << "rouge     serial " << tr_serial << " s, parallel " << tr_parallel
            << " s, speedup " << tr_serial / tr_parallel
            << (rs.rouge1.f1 == rp.rouge1.f1 && rs.rougeL.f1 == rp.rougeL.f1
                    ? "  [outputs match]"
                    : "  [MISMATCH]")
            << "\n";

  double bs = 0, bp = 0;
  double tb_serial = time_it([&] { bs = metrics::corpus_bleu_serial(cands, refs); });
  double tb_parallel = time_it([&] { bp = metrics::corpus_bleu(cands, refs); });
  std::cout << "bleu      serial " << tb_serial << " s, parallel " << tb_parallel
            << " s, speedup " << tb_serial / tb_parallel
            << (bs == bp ? "  [outputs match]" : "  [MISMATCH]") << "\n";
  return 0;
}
