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

#include "extraphrase/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

namespace extraphrase::config {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& section) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!known.count(it.key()))
      throw UsageError("config: unknown key '" + it.key() + "' in " + section);
  }
}

template <typename T>
void read_field(const json& obj, const std::string& key, T& out) {
  if (obj.contains(key)) out = obj.at(key).get<T>();
}

void parse_compression(const json& obj, deptree::CompressionConfig& cfg) {
  reject_unknown_keys(obj,
                      {"functional_deprels", "depth_rounding",
                       "keep_threshold_override"},
                      "compression");
  if (obj.contains("functional_deprels")) {
    cfg.functional_deprels.clear();
    for (const auto& item : obj.at("functional_deprels"))
      cfg.functional_deprels.insert(item.get<std::string>());
    if (cfg.functional_deprels.empty())
      throw UsageError("config: functional_deprels must be non-empty");
  }
  if (obj.contains("depth_rounding")) {
    std::string r = obj.at("depth_rounding").get<std::string>();
    if (r == "ceil") {
      cfg.depth_rounding = deptree::DepthRounding::kCeil;
    } else if (r == "floor") {
      cfg.depth_rounding = deptree::DepthRounding::kFloor;
    } else {
      throw UsageError("config: depth_rounding must be 'ceil' or 'floor'");
    }
  }
  read_field(obj, "keep_threshold_override", cfg.keep_threshold_override);
  if (cfg.keep_threshold_override < 0)
    throw UsageError("config: keep_threshold_override must be positive");
}

void parse_roundtrip(const json& obj, BackendSettings& s) {
  reject_unknown_keys(obj,
                      {"backend", "endpoint", "forward_model", "backward_model",
                       "batch_size", "max_in_flight", "timeout_ms",
                       "max_attempts", "cache_path"},
                      "roundtrip");
  read_field(obj, "backend", s.kind);
  if (s.kind != "http" && s.kind != "identity")
    throw UsageError("config: roundtrip.backend must be 'http' or 'identity'");
  read_field(obj, "endpoint", s.endpoint);
  read_field(obj, "forward_model", s.forward_model);
  read_field(obj, "backward_model", s.backward_model);
  read_field(obj, "batch_size", s.batch_size);
  read_field(obj, "max_in_flight", s.max_in_flight);
  read_field(obj, "timeout_ms", s.timeout_ms);
  read_field(obj, "max_attempts", s.max_attempts);
  read_field(obj, "cache_path", s.cache_path);
  if (s.batch_size < 1) throw UsageError("config: batch_size must be >= 1");
  if (s.kind == "http" && s.endpoint.empty())
    throw UsageError("config: roundtrip.endpoint required for http backend");
}

void parse_augment(const json& obj, augment::AugmentConfig& cfg) {
  reject_unknown_keys(obj,
                      {"doc_sentence_limit", "pseudo_tag", "tag_enabled",
                       "truncate_source"},
                      "augment");
  read_field(obj, "doc_sentence_limit", cfg.doc_sentence_limit);
  read_field(obj, "pseudo_tag", cfg.pseudo_tag);
  read_field(obj, "tag_enabled", cfg.tag_enabled);
  read_field(obj, "truncate_source", cfg.truncate_source);
  if (cfg.doc_sentence_limit < 1)
    throw UsageError("config: doc_sentence_limit must be >= 1");
  if (cfg.pseudo_tag.find_first_of(" \t\n") != std::string::npos)
    throw UsageError("config: pseudo_tag must contain no whitespace");
}

}  // namespace

ToolkitConfig parse_config(const std::string& json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded() || !root.is_object())
    throw UsageError("config: not a JSON object");
  reject_unknown_keys(root,
                      {"compression", "roundtrip", "augment", "metrics", "io",
                       "seeds", "workers"},
                      "top level");
  ToolkitConfig cfg;
  if (root.contains("compression"))
    parse_compression(root.at("compression"), cfg.compression);
  if (root.contains("roundtrip") && !root.at("roundtrip").is_null()) {
    BackendSettings s;
    parse_roundtrip(root.at("roundtrip"), s);
    cfg.roundtrip = s;
  }
  if (root.contains("augment")) parse_augment(root.at("augment"), cfg.augment);
  if (root.contains("metrics")) {
    const json& m = root.at("metrics");
    reject_unknown_keys(m, {"bleu_smoothing", "rouge_l_variant"}, "metrics");
    read_field(m, "bleu_smoothing", cfg.metrics.bleu_smoothing);
    read_field(m, "rouge_l_variant", cfg.metrics.rouge_l_variant);
    if (cfg.metrics.rouge_l_variant != "whole-text")
      throw UsageError("config: only rouge_l_variant 'whole-text' is implemented");
  }
  if (root.contains("io")) {
    const json& io = root.at("io");
    reject_unknown_keys(io, {"strict", "grouping"}, "io");
    read_field(io, "strict", cfg.io.strict);
    if (io.contains("grouping")) {
      std::string g = io.at("grouping").get<std::string>();
      if (g == "per-sentence") {
        cfg.io.grouping = corpus_io::DocGrouping::kPerSentence;
      } else if (g == "per-sent-id") {
        cfg.io.grouping = corpus_io::DocGrouping::kPerSentId;
      } else {
        throw UsageError("config: grouping must be 'per-sentence' or 'per-sent-id'");
      }
    }
  }
  if (root.contains("seeds")) {
    const json& s = root.at("seeds");
    reject_unknown_keys(s, {"oversample", "shuffle"}, "seeds");
    read_field(s, "oversample", cfg.seeds.oversample);
    read_field(s, "shuffle", cfg.seeds.shuffle);
  }
  read_field(root, "workers", cfg.workers);
  cfg.augment.compression = cfg.compression;
  cfg.augment.strict = cfg.io.strict;
  return cfg;
}

ToolkitConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_hash(const ToolkitConfig& cfg) {
  // canonical dump, then FNV-1a 64
  nlohmann::ordered_json j;
  for (const auto& d : cfg.compression.functional_deprels)
    j["compression"]["functional_deprels"].push_back(d);
  j["compression"]["depth_rounding"] =
      cfg.compression.depth_rounding == deptree::DepthRounding::kCeil ? "ceil"
                                                                      : "floor";
  j["compression"]["keep_threshold_override"] =
      cfg.compression.keep_threshold_override;
  if (cfg.roundtrip) {
    j["roundtrip"]["backend"] = cfg.roundtrip->kind;
    j["roundtrip"]["endpoint"] = cfg.roundtrip->endpoint;
    j["roundtrip"]["forward_model"] = cfg.roundtrip->forward_model;
    j["roundtrip"]["backward_model"] = cfg.roundtrip->backward_model;
    j["roundtrip"]["batch_size"] = cfg.roundtrip->batch_size;
  }
  j["augment"]["doc_sentence_limit"] = cfg.augment.doc_sentence_limit;
  j["augment"]["pseudo_tag"] = cfg.augment.pseudo_tag;
  j["augment"]["tag_enabled"] = cfg.augment.tag_enabled;
  j["augment"]["truncate_source"] = cfg.augment.truncate_source;
  j["metrics"]["bleu_smoothing"] = cfg.metrics.bleu_smoothing;
  j["io"]["strict"] = cfg.io.strict;
  j["seeds"]["oversample"] = cfg.seeds.oversample;
  j["seeds"]["shuffle"] = cfg.seeds.shuffle;
  std::string dump = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : dump) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace extraphrase::config
