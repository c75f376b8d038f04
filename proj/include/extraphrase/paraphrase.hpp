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

#ifndef EXTRAPHRASE_PARAPHRASE_HPP_
#define EXTRAPHRASE_PARAPHRASE_HPP_

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "extraphrase/types.hpp"

namespace extraphrase::paraphrase {

// Contract for a text-to-text translator. Implementations must be
// deterministic for a fixed identifier and input, and must return one
// output per input, order-aligned.
class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string identifier() const = 0;
  virtual std::vector<std::string> translate(
      const std::vector<std::string>& texts) = 0;
};

using BackendPtr = std::shared_ptr<TranslationBackend>;

// Passes texts through unchanged; makes the paraphrase stage the identity.
class IdentityBackend : public TranslationBackend {
 public:
  std::string identifier() const override { return "identity"; }
  std::vector<std::string> translate(
      const std::vector<std::string>& texts) override {
    return texts;
  }
};

struct RoundTripConfig {
  BackendPtr forward;   // source -> pivot
  BackendPtr backward;  // pivot -> source
  int batch_size = 32;
  int max_in_flight = 4;  // concurrent batches
};

// result[i] = backward(forward(texts[i])); batching is internal and has no
// observable effect on outputs. Each element is one sentence; callers must
// not concatenate sentences before translation.
std::vector<std::string> round_trip(const std::vector<std::string>& texts,
                                    const RoundTripConfig& config);

// Persistent key-value store backing the translation cache: a single-file
// append-only log of JSON lines {"k": backend_id, "i": input, "o": output}.
// Corrupt lines are skipped on load. Survives process restarts.
class CacheStore {
 public:
  explicit CacheStore(const std::string& path);

  bool lookup(const std::string& backend_id, const std::string& input,
              std::string& output) const;
  void insert(const std::string& backend_id, const std::string& input,
              const std::string& output);

  std::size_t size() const { return entries_.size(); }

 private:
  std::string path_;
  std::map<std::pair<std::string, std::string>, std::string> entries_;
  mutable std::mutex mutex_;
};

// Wraps a backend so cache hits bypass it. Semantics are identical to the
// uncached backend.
BackendPtr with_cache(BackendPtr backend, std::shared_ptr<CacheStore> store);

struct RetryPolicy {
  int max_attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  double backoff_factor = 2.0;
};

// Backend speaking the wire protocol:
//   POST JSON {"model": string, "texts": [string,...]}
//   -> 200 JSON {"translations": [string,...]} (same length)
BackendPtr http_backend(const std::string& endpoint, const std::string& model_id,
                        std::chrono::milliseconds timeout = std::chrono::milliseconds(30000),
                        const RetryPolicy& retry = {});

}  // namespace extraphrase::paraphrase

#endif  // EXTRAPHRASE_PARAPHRASE_HPP_
