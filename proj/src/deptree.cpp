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

#include "extraphrase/deptree.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace extraphrase::deptree {

bool CompressionConfig::is_functional(const std::string& deprel) const {
  if (functional_deprels.count(deprel)) return true;
  std::size_t colon = deprel.find(':');
  if (colon != std::string::npos)
    return functional_deprels.count(deprel.substr(0, colon)) > 0;
  return false;
}

DepTree build_tree(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  DepTree tree;
  tree.sentence = &sentence;
  tree.children.assign(n + 1, {});
  for (const Token& t : sentence.tokens) {
    if (t.head == 0) {
      tree.root = t.index;
    } else {
      tree.children[t.head].push_back(t.index);
    }
  }
  return tree;
}

ChunkTree merge_functional(const DepTree& tree, const CompressionConfig& config) {
  const Sentence& sentence = *tree.sentence;
  const int n = static_cast<int>(sentence.tokens.size());

  std::vector<bool> functional(n + 1, false);
  for (const Token& t : sentence.tokens)
    functional[t.index] = config.is_functional(t.deprel);

  // A functional token with a non-functional descendant must keep its own
  // chunk, otherwise its content subtree would be orphaned.
  std::vector<bool> has_content_desc(n + 1, false);
  // tokens in reverse BFS order give a valid bottom-up sweep
  std::vector<int> order;
  order.reserve(n);
  order.push_back(tree.root);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int c : tree.children[order[i]]) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int c : tree.children[v])
      if (!functional[c] || has_content_desc[c]) has_content_desc[v] = true;
  }

  std::vector<bool> merged(n + 1, false);
  for (int i = 1; i <= n; ++i)
    merged[i] = functional[i] && !has_content_desc[i] && i != tree.root;

  // A merged token joins the chunk of its nearest unmerged ancestor; chains
  // of functional tokens collapse into the same chunk.
  std::vector<int> chunk_head(n + 1, 0);
  for (int i : order) {
    if (!merged[i]) {
      chunk_head[i] = i;
    } else {
      int parent = sentence.tokens[i - 1].head;
      chunk_head[i] = chunk_head[parent];  // parent precedes i in BFS order
    }
  }

  ChunkTree ctree;
  ctree.sentence = &sentence;
  std::vector<int> chunk_of(n + 1, -1);  // token index -> chunk index
  for (int i = 1; i <= n; ++i) {
    if (merged[i]) continue;
    Chunk chunk;
    chunk.head_token = i;
    chunk_of[i] = static_cast<int>(ctree.chunks.size());
    ctree.chunks.push_back(std::move(chunk));
  }
  for (int i = 1; i <= n; ++i)
    ctree.chunks[chunk_of[chunk_head[i]]].member_tokens.push_back(i);
  for (Chunk& c : ctree.chunks)
    std::sort(c.member_tokens.begin(), c.member_tokens.end());

  ctree.root = chunk_of[tree.root];
  for (Chunk& c : ctree.chunks) {
    if (c.head_token == tree.root) continue;
    int parent_token = sentence.tokens[c.head_token - 1].head;
    c.parent = chunk_of[chunk_head[parent_token]];
  }

  // depths top-down; chunk order follows head-token order so a parent may
  // come after its child, iterate in BFS order over chunks instead
  ctree.chunks[ctree.root].depth = 1;
  ctree.max_depth = 1;
  std::vector<int> queue = {ctree.root};
  std::vector<std::vector<int>> chunk_children(ctree.chunks.size());
  for (int ci = 0; ci < static_cast<int>(ctree.chunks.size()); ++ci)
    if (ctree.chunks[ci].parent >= 0)
      chunk_children[ctree.chunks[ci].parent].push_back(ci);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int ci = queue[qi];
    for (int child : chunk_children[ci]) {
      ctree.chunks[child].depth = ctree.chunks[ci].depth + 1;
      ctree.max_depth = std::max(ctree.max_depth, ctree.chunks[child].depth);
      queue.push_back(child);
    }
  }
  return ctree;
}

int keep_depth(int max_depth, const CompressionConfig& config) {
  if (config.keep_threshold_override > 0) return config.keep_threshold_override;
  if (config.depth_rounding == DepthRounding::kCeil)
    return (max_depth + 1) / 2;
  return std::max(1, max_depth / 2);
}

ChunkTree prune(const ChunkTree& ctree, int keep) {
  ChunkTree out;
  out.sentence = ctree.sentence;
  std::vector<int> remap(ctree.chunks.size(), -1);
  for (int ci = 0; ci < static_cast<int>(ctree.chunks.size()); ++ci) {
    if (ctree.chunks[ci].depth > keep) continue;
    remap[ci] = static_cast<int>(out.chunks.size());
    out.chunks.push_back(ctree.chunks[ci]);
  }
  for (Chunk& c : out.chunks) {
    if (c.parent >= 0) c.parent = remap[c.parent];  // parent is shallower, kept
    out.max_depth = std::max(out.max_depth, c.depth);
  }
  out.root = remap[ctree.root];
  return out;
}

std::string linearize(const ChunkTree& ctree) {
  std::vector<int> retained;
  for (const Chunk& c : ctree.chunks)
    retained.insert(retained.end(), c.member_tokens.begin(),
                    c.member_tokens.end());
  std::sort(retained.begin(), retained.end());
  std::string out;
  for (int idx : retained) {
    if (!out.empty()) out += ' ';
    out += ctree.sentence->tokens[idx - 1].form;
  }
  return out;
}

std::string compress(const Sentence& sentence, const CompressionConfig& config) {
  ChunkTree ctree = merge_functional(build_tree(sentence), config);
  return linearize(prune(ctree, keep_depth(ctree.max_depth, config)));
}

std::vector<std::string> compress_corpus_serial(
    const std::vector<Sentence>& sentences, const CompressionConfig& config) {
  std::vector<std::string> out(sentences.size());
  for (std::size_t i = 0; i < sentences.size(); ++i)
    out[i] = compress(sentences[i], config);
  return out;
}

std::vector<std::string> compress_corpus(const std::vector<Sentence>& sentences,
                                         const CompressionConfig& config) {
  std::vector<std::string> out(sentences.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < static_cast<long>(sentences.size()); ++i)
    out[i] = compress(sentences[i], config);
  return out;
}

}  // namespace extraphrase::deptree
