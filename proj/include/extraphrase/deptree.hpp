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

#ifndef EXTRAPHRASE_DEPTREE_HPP_
#define EXTRAPHRASE_DEPTREE_HPP_

#include <set>
#include <string>
#include <vector>

#include "extraphrase/types.hpp"

namespace extraphrase::deptree {

enum class DepthRounding { kCeil, kFloor };

struct CompressionConfig {
  // UD closed-class attachment relations, matched on the label prefix
  // before any ':' subtype. punct is merged so punctuation never survives
  // as an isolated chunk.
  std::set<std::string> functional_deprels = {
      "case", "det", "aux", "aux:pass", "cop",
      "mark", "cc",  "clf", "neg",      "punct"};
  DepthRounding depth_rounding = DepthRounding::kCeil;
  int keep_threshold_override = 0;  // 0 = none

  bool is_functional(const std::string& deprel) const;
};

// Dependency tree over a sentence's tokens; children ordered by token index.
struct DepTree {
  const Sentence* sentence = nullptr;
  std::vector<std::vector<int>> children;  // children[i] for token index i
  int root = 0;
};

// A content-headed node of the coarsened tree: the head token plus the
// functional tokens merged into it.
struct Chunk {
  int head_token = 0;
  std::vector<int> member_tokens;  // sorted
  int parent = -1;                 // index into ChunkTree::chunks, -1 = root
  int depth = 0;                   // root chunk depth = 1
};

struct ChunkTree {
  const Sentence* sentence = nullptr;
  std::vector<Chunk> chunks;
  int root = 0;       // index into chunks
  int max_depth = 0;  // maximum chunk depth
};

DepTree build_tree(const Sentence& sentence);

ChunkTree merge_functional(const DepTree& tree, const CompressionConfig& config);

// Depth threshold for pruning: half of max_depth, rounded per config,
// never below 1.
int keep_depth(int max_depth, const CompressionConfig& config);

// Keeps exactly the chunks with depth <= keep; result is a rooted subtree.
ChunkTree prune(const ChunkTree& ctree, int keep);

// Surface forms of all retained member tokens in original sentence order.
std::string linearize(const ChunkTree& ctree);

// Step-1 pipeline: linearize(prune(merge_functional(build_tree(s)), keep)).
std::string compress(const Sentence& sentence, const CompressionConfig& config);

// Corpus kernels. The OpenMP version parallelizes over sentences; the
// serial version is the reference kept for testing and benchmarking.
std::vector<std::string> compress_corpus(const std::vector<Sentence>& sentences,
                                         const CompressionConfig& config);
std::vector<std::string> compress_corpus_serial(
    const std::vector<Sentence>& sentences, const CompressionConfig& config);

}  // namespace extraphrase::deptree

#endif  // EXTRAPHRASE_DEPTREE_HPP_
