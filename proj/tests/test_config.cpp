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

#include <doctest.h>

#include "extraphrase/config.hpp"

using namespace extraphrase;
using namespace extraphrase::config;

TEST_CASE("parse_config defaults") {
  ToolkitConfig cfg = parse_config("{}");
  CHECK(cfg.compression.functional_deprels.count("det") == 1);
  CHECK(cfg.augment.doc_sentence_limit == 3);
  CHECK(cfg.augment.pseudo_tag == "<Pseudo>");
  CHECK(cfg.augment.tag_enabled);
  CHECK_FALSE(cfg.roundtrip.has_value());
  CHECK_FALSE(cfg.io.strict);
}

TEST_CASE("parse_config full file") {
  ToolkitConfig cfg = parse_config(R"({
    "compression": {
      "functional_deprels": ["det", "case"],
      "depth_rounding": "floor",
      "keep_threshold_override": 2
    },
    "roundtrip": {
      "backend": "http",
      "endpoint": "http://localhost:9000/translate",
      "forward_model": "en-de",
      "backward_model": "de-en",
      "batch_size": 16,
      "cache_path": "/tmp/cache.jsonl"
    },
    "augment": {"doc_sentence_limit": 1, "tag_enabled": false},
    "metrics": {"bleu_smoothing": true},
    "io": {"strict": true, "grouping": "per-sent-id"},
    "seeds": {"oversample": 11, "shuffle": 22},
    "workers": 2
  })");
  CHECK(cfg.compression.functional_deprels.size() == 2);
  CHECK(cfg.compression.depth_rounding == deptree::DepthRounding::kFloor);
  CHECK(cfg.compression.keep_threshold_override == 2);
  REQUIRE(cfg.roundtrip.has_value());
  CHECK(cfg.roundtrip->endpoint == "http://localhost:9000/translate");
  CHECK(cfg.roundtrip->batch_size == 16);
  CHECK(cfg.augment.doc_sentence_limit == 1);
  CHECK_FALSE(cfg.augment.tag_enabled);
  CHECK(cfg.metrics.bleu_smoothing);
  CHECK(cfg.io.strict);
  CHECK(cfg.augment.strict);  // io policy propagates to the pipeline
  CHECK(cfg.seeds.oversample == 11);
  CHECK(cfg.workers == 2);
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(parse_config(R"({"no_such_key": 1})"), UsageError);
  CHECK_THROWS_AS(parse_config(R"({"compression": {"typo": 1}})"), UsageError);
  CHECK_THROWS_AS(parse_config(R"({"seeds": {"extra": 1}})"), UsageError);
}

TEST_CASE("invalid values are rejected") {
  CHECK_THROWS_AS(parse_config(R"({"compression": {"depth_rounding": "up"}})"),
                  UsageError);
  CHECK_THROWS_AS(parse_config(R"({"compression": {"functional_deprels": []}})"),
                  UsageError);
  CHECK_THROWS_AS(parse_config(R"({"augment": {"pseudo_tag": "a b"}})"),
                  UsageError);
  CHECK_THROWS_AS(parse_config(R"({"augment": {"doc_sentence_limit": 0}})"),
                  UsageError);
  CHECK_THROWS_AS(parse_config(R"({"roundtrip": {"backend": "http"}})"),
                  UsageError);
  CHECK_THROWS_AS(parse_config("not json"), UsageError);
}

TEST_CASE("config_hash is stable and sensitive") {
  ToolkitConfig a = parse_config("{}");
  ToolkitConfig b = parse_config("{}");
  CHECK(config_hash(a) == config_hash(b));
  ToolkitConfig c = parse_config(R"({"augment": {"doc_sentence_limit": 5}})");
  CHECK(config_hash(a) != config_hash(c));
  CHECK(config_hash(a).size() == 16);
}
