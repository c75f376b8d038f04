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

#ifndef EXTRAPHRASE_CONFIG_HPP_
#define EXTRAPHRASE_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "extraphrase/augment.hpp"
#include "extraphrase/corpus_io.hpp"
#include "extraphrase/deptree.hpp"

namespace extraphrase::config {

// Round-trip backend settings as read from the config file; backends are
// constructed from these by the CLI.
struct BackendSettings {
  std::string kind = "http";  // "http" or "identity"
  std::string endpoint;       // http only; EXTRAPHRASE_ENDPOINT overrides
  std::string forward_model;  // e.g. en-de
  std::string backward_model; // e.g. de-en
  int batch_size = 32;
  int max_in_flight = 4;
  int timeout_ms = 30000;
  int max_attempts = 3;
  std::string cache_path;  // empty = no cache
};

struct MetricsOptions {
  bool bleu_smoothing = false;
  // reserved for the summary-level union-LCS variant; only "whole-text"
  // is implemented
  std::string rouge_l_variant = "whole-text";
};

struct Seeds {
  std::uint64_t oversample = 1;
  std::uint64_t shuffle = 1;
};

struct ToolkitConfig {
  deptree::CompressionConfig compression;
  std::optional<BackendSettings> roundtrip;
  augment::AugmentConfig augment;  // roundtrip member left empty here
  MetricsOptions metrics;
  corpus_io::ConlluOptions io;
  Seeds seeds;
  int workers = 0;  // 0 = all available cores
};

// Parses the declarative JSON config file. Unknown keys are rejected.
ToolkitConfig load_config(const std::string& path);
ToolkitConfig parse_config(const std::string& json_text);

// FNV-1a hash of the canonicalized config, recorded in run manifests.
std::string config_hash(const ToolkitConfig& cfg);

}  // namespace extraphrase::config

#endif  // EXTRAPHRASE_CONFIG_HPP_
