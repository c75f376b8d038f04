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

#include <map>
#include <memory>
#include <sstream>

#include "extraphrase/augment.hpp"
#include "test_support.hpp"

using namespace extraphrase;
using namespace extraphrase::augment;
using test_support::make_sentence;
using test_support::red_mat_sentence;

namespace {

// word-substitution stub shared with the paraphrase tests in spirit;
// duplicated here to keep the suites independent
class DictionaryBackend : public paraphrase::TranslationBackend {
 public:
  DictionaryBackend(std::string id, std::map<std::string, std::string> table)
      : id_(std::move(id)), table_(std::move(table)) {}
  std::string identifier() const override { return id_; }
  std::vector<std::string> translate(
      const std::vector<std::string>& texts) override {
    std::vector<std::string> out;
    for (const std::string& text : texts) {
      std::istringstream iss(text);
      std::string word, result;
      while (iss >> word) {
        auto it = table_.find(word);
        if (!result.empty()) result += ' ';
        result += it == table_.end() ? word : it->second;
      }
      out.push_back(result);
    }
    return out;
  }

 private:
  std::string id_;
  std::map<std::string, std::string> table_;
};

AugmentConfig identity_config() {
  AugmentConfig cfg;
  paraphrase::RoundTripConfig rt;
  rt.forward = std::make_shared<paraphrase::IdentityBackend>();
  rt.backward = std::make_shared<paraphrase::IdentityBackend>();
  cfg.roundtrip = rt;
  return cfg;
}

AugmentConfig dictionary_config() {
  AugmentConfig cfg;
  paraphrase::RoundTripConfig rt;
  rt.forward = std::make_shared<DictionaryBackend>(
      "en-de", std::map<std::string, std::string>{{"cat", "Katze"}});
  rt.backward = std::make_shared<DictionaryBackend>(
      "de-en", std::map<std::string, std::string>{{"Katze", "feline"}});
  cfg.roundtrip = rt;
  return cfg;
}

Document three_sentence_doc() {
  Document doc;
  doc.id = "d1";
  doc.sentences = {red_mat_sentence(),
                   make_sentence({"dogs", "bark"}, {2, 0}, {"nsubj", "root"}),
                   make_sentence({"birds", "sing"}, {2, 0}, {"nsubj", "root"})};
  return doc;
}

}  // namespace

TEST_CASE("extraphrase_sentence") {
  SUBCASE("identity backends equal the compression") {
    CHECK(extraphrase_sentence(red_mat_sentence(), identity_config()) ==
          "the cat sat on the mat");
  }
  SUBCASE("dictionary stub paraphrases the compressed sentence") {
    CHECK(extraphrase_sentence(red_mat_sentence(), dictionary_config()) ==
          "the feline sat on the mat");
  }
  SUBCASE("ablation mode returns the compression exactly") {
    AugmentConfig cfg;  // no roundtrip
    CHECK(extraphrase_sentence(red_mat_sentence(), cfg) ==
          "the cat sat on the mat");
  }
}

TEST_CASE("extraphrase_document") {
  SUBCASE("one-sentence document equals extraphrase_sentence") {
    Document doc;
    doc.id = "d";
    doc.sentences = {red_mat_sentence()};
    AugmentConfig cfg = identity_config();
    CHECK(extraphrase_document(doc, cfg) ==
          extraphrase_sentence(red_mat_sentence(), cfg));
  }
  SUBCASE("doc_sentence_limit truncates") {
    Document doc = three_sentence_doc();
    doc.sentences.push_back(make_sentence({"x"}, {0}, {"root"}));
    doc.sentences.push_back(make_sentence({"y"}, {0}, {"root"}));
    AugmentConfig cfg = identity_config();
    cfg.doc_sentence_limit = 3;
    CHECK(extraphrase_document(doc, cfg) ==
          "the cat sat on the mat bark sing");
  }
  SUBCASE("three sentences concatenated in order") {
    AugmentConfig cfg = identity_config();
    CHECK(extraphrase_document(three_sentence_doc(), cfg) ==
          "the cat sat on the mat bark sing");
  }
}

TEST_CASE("build_pseudo_corpus") {
  std::vector<Document> docs = {three_sentence_doc()};
  SUBCASE("tagged source keeps the full original text") {
    AugmentConfig cfg = identity_config();
    PseudoCorpusResult r = build_pseudo_corpus(docs, cfg);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].id == "d1");
    CHECK(r.pairs[0].source ==
          "<Pseudo> the cat sat on the red mat dogs bark birds sing");
    CHECK(r.pairs[0].target == "the cat sat on the mat bark sing");
    CHECK(r.pairs[0].origin == PairOrigin::kPseudo);
  }
  SUBCASE("tag disabled keeps the untagged source") {
    AugmentConfig cfg = identity_config();
    cfg.tag_enabled = false;
    PseudoCorpusResult r = build_pseudo_corpus(docs, cfg);
    CHECK(r.pairs[0].source == "the cat sat on the red mat dogs bark birds sing");
  }
  SUBCASE("truncate_source stores the first doc_sentence_limit sentences") {
    AugmentConfig cfg = identity_config();
    cfg.doc_sentence_limit = 2;
    cfg.truncate_source = true;
    PseudoCorpusResult r = build_pseudo_corpus(docs, cfg);
    CHECK(r.pairs[0].source == "<Pseudo> the cat sat on the red mat dogs bark");
  }
  SUBCASE("N documents in, N pairs out, ids preserved") {
    std::vector<Document> many;
    for (int i = 0; i < 10; ++i) {
      Document d = three_sentence_doc();
      d.id = "doc" + std::to_string(i);
      many.push_back(d);
    }
    PseudoCorpusResult r = build_pseudo_corpus(many, identity_config());
    REQUIRE(r.pairs.size() == 10);
    for (int i = 0; i < 10; ++i) CHECK(r.pairs[i].id == "doc" + std::to_string(i));
  }
  SUBCASE("ablation equals the identity-backend run") {
    AugmentConfig ablation;  // no roundtrip
    PseudoCorpusResult a = build_pseudo_corpus(docs, ablation);
    PseudoCorpusResult b = build_pseudo_corpus(docs, identity_config());
    CHECK(a.pairs == b.pairs);
  }
}

TEST_CASE("oversample") {
  std::vector<ParallelPair> pairs = {
      {"1", "s1", "t1", PairOrigin::kGenuine},
      {"2", "s2", "t2", PairOrigin::kGenuine},
      {"3", "s3", "t3", PairOrigin::kGenuine},
  };
  SUBCASE("target equal to size is the identity") {
    CHECK(oversample(pairs, 3, 7) == pairs);
  }
  SUBCASE("deterministic for a fixed seed") {
    CHECK(oversample(pairs, 9, 123) == oversample(pairs, 9, 123));
  }
  SUBCASE("doubling keeps every original and hits the exact count") {
    std::vector<ParallelPair> out = oversample(pairs, 6, 5);
    REQUIRE(out.size() == 6);
    for (const ParallelPair& p : pairs) {
      std::size_t count = 0;
      for (const ParallelPair& q : out)
        if (q == p) ++count;
      CHECK(count >= 1);
    }
    for (const ParallelPair& q : out) CHECK(q.origin == PairOrigin::kGenuine);
  }
  SUBCASE("target below size throws") {
    CHECK_THROWS_AS(oversample(pairs, 2, 1), ArgumentError);
  }
}

TEST_CASE("mix") {
  std::vector<ParallelPair> genuine = {
      {"g1", "a b", "t", PairOrigin::kGenuine},
      {"g2", "c d", "t", PairOrigin::kGenuine},
  };
  std::vector<ParallelPair> pseudo = {
      {"p1", "<Pseudo> a b", "t", PairOrigin::kPseudo},
      {"p2", "<Pseudo> c d", "t", PairOrigin::kPseudo},
  };
  SUBCASE("shuffle off concatenates in order") {
    std::vector<ParallelPair> out = mix(genuine, pseudo, 1, false);
    REQUIRE(out.size() == 4);
    CHECK(out[0].id == "g1");
    CHECK(out[3].id == "p2");
  }
  SUBCASE("counts preserved under shuffle") {
    std::vector<ParallelPair> out = mix(genuine, pseudo, 9, true);
    std::size_t n_genuine = 0, n_pseudo = 0;
    for (const ParallelPair& p : out)
      (p.origin == PairOrigin::kGenuine ? n_genuine : n_pseudo)++;
    CHECK(n_genuine == 2);
    CHECK(n_pseudo == 2);
  }
  SUBCASE("same seed gives the same permutation") {
    CHECK(mix(genuine, pseudo, 42, true) == mix(genuine, pseudo, 42, true));
  }
  SUBCASE("tag discipline is validated") {
    std::vector<ParallelPair> bad_pseudo = {
        {"p1", "untagged", "t", PairOrigin::kPseudo}};
    CHECK_THROWS_AS(mix(genuine, bad_pseudo, 1, false), DataError);
    std::vector<ParallelPair> bad_genuine = {
        {"g1", "<Pseudo> oops", "t", PairOrigin::kGenuine}};
    CHECK_THROWS_AS(mix(bad_genuine, pseudo, 1, false), DataError);
  }
}
