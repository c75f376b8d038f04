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

#include <random>
#include <sstream>

#include <json.hpp>

#include "extraphrase/corpus_io.hpp"
#include "test_support.hpp"

using namespace extraphrase;
using namespace extraphrase::corpus_io;

namespace {

const char* kHelloWorld =
    "1\tHello\thello\tINTJ\t_\t_\t2\tdiscourse\t_\t_\n"
    "2\tworld\tworld\tNOUN\t_\t_\t0\troot\t_\t_\n"
    "\n";

}  // namespace

TEST_CASE("parse_conllu minimal sentence") {
  std::istringstream in(kHelloWorld);
  ConlluResult r = parse_conllu(in);
  REQUIRE(r.documents.size() == 1);
  REQUIRE(r.documents[0].sentences.size() == 1);
  const Sentence& s = r.documents[0].sentences[0];
  REQUIRE(s.tokens.size() == 2);
  CHECK(s.tokens[0].form == "Hello");
  CHECK(s.tokens[0].head == 2);
  CHECK(s.tokens[1].form == "world");
  CHECK(s.tokens[1].head == 0);
  CHECK(s.raw_text == "Hello world");
}

TEST_CASE("parse_conllu self-loop head is rejected") {
  std::string text =
      "# sent_id = bad-1\n"
      "1\ta\t_\tX\t_\t_\t2\tdep\t_\t_\n"
      "2\tb\t_\tX\t_\t_\t0\troot\t_\t_\n"
      "3\tc\t_\tX\t_\t_\t3\tdep\t_\t_\n"
      "\n";
  SUBCASE("lenient: skipped with a named reason") {
    std::istringstream in(text);
    ConlluResult r = parse_conllu(in);
    CHECK(r.documents.empty());
    CHECK(r.skipped_sentences == 1);
    REQUIRE(r.skip_reasons.size() == 1);
    CHECK(r.skip_reasons[0].find("bad-1") != std::string::npos);
  }
  SUBCASE("strict: throws InvalidTree") {
    std::istringstream in(text);
    ConlluOptions opts;
    opts.strict = true;
    CHECK_THROWS_AS(parse_conllu(in, opts), InvalidTree);
  }
}

TEST_CASE("parse_conllu red mat parse passes all invariants") {
  std::istringstream in(test_support::to_conllu(test_support::red_mat_sentence()));
  ConlluResult r = parse_conllu(in);
  REQUIRE(r.documents.size() == 1);
  const Sentence& s = r.documents[0].sentences[0];
  REQUIRE(s.tokens.size() == 7);
  CHECK(s.tokens[2].head == 0);
  CHECK(s.tokens[6].deprel == "obl");
  CHECK_NOTHROW(validate_sentence(s));
}

TEST_CASE("parse_conllu skips multiword ranges and empty nodes") {
  std::string text =
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\t_\t_\t2\taux\t_\t_\n"
      "1.1\tghost\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "2\tnot\tnot\tPART\t_\t_\t0\troot\t_\t_\n"
      "\n";
  std::istringstream in(text);
  ConlluResult r = parse_conllu(in);
  REQUIRE(r.documents.size() == 1);
  CHECK(r.documents[0].sentences[0].tokens.size() == 2);
}

TEST_CASE("parse_conllu malformed column count names the line") {
  std::istringstream in("1\tonly\tthree\n");
  try {
    parse_conllu(in);
    FAIL("expected MalformedLine");
  } catch (const MalformedLine& e) {
    CHECK(e.line_number() == 1);
  }
}

TEST_CASE("parse_conllu honors newdoc and text comments") {
  std::string text =
      "# newdoc id = d1\n"
      "# sent_id = d1-s1\n"
      "# text = Hello, world!\n" +
      std::string(kHelloWorld) +
      "# newdoc id = d2\n"
      "1\tbye\tbye\tINTJ\t_\t_\t0\troot\t_\t_\n"
      "\n";
  std::istringstream in(text);
  ConlluResult r = parse_conllu(in);
  REQUIRE(r.documents.size() == 2);
  CHECK(r.documents[0].id == "d1");
  CHECK(r.documents[0].sentences[0].raw_text == "Hello, world!");
  CHECK(r.documents[1].id == "d2");
}

TEST_CASE("grouping: without newdoc, one document per sentence by default") {
  std::string two = std::string(kHelloWorld) + kHelloWorld;
  std::istringstream in(two);
  ConlluResult r = parse_conllu(in);
  CHECK(r.documents.size() == 2);
}

TEST_CASE("grouping: per-sent-id groups consecutive shared prefixes") {
  std::string text;
  for (const char* sid : {"doc1-s1", "doc1-s2", "doc2-s1"}) {
    text += std::string("# sent_id = ") + sid + "\n" + kHelloWorld;
  }
  std::istringstream in(text);
  ConlluOptions opts;
  opts.grouping = DocGrouping::kPerSentId;
  ConlluResult r = parse_conllu(in, opts);
  REQUIRE(r.documents.size() == 2);
  CHECK(r.documents[0].sentences.size() == 2);
  CHECK(r.documents[1].sentences.size() == 1);
}

TEST_CASE("conllu round-trip on random sentences") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 100; ++iter) {
    Sentence s = test_support::random_sentence(rng, 10);
    std::istringstream in(test_support::to_conllu(s));
    ConlluResult r = parse_conllu(in);
    REQUIRE(r.documents.size() == 1);
    const Sentence& back = r.documents[0].sentences[0];
    REQUIRE(back.tokens.size() == s.tokens.size());
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      CHECK(back.tokens[i].index == s.tokens[i].index);
      CHECK(back.tokens[i].form == s.tokens[i].form);
      CHECK(back.tokens[i].upos == s.tokens[i].upos);
      CHECK(back.tokens[i].head == s.tokens[i].head);
      CHECK(back.tokens[i].deprel == s.tokens[i].deprel);
    }
  }
}

TEST_CASE("read_pairs") {
  SUBCASE("one genuine pair") {
    std::istringstream in(R"({"id":"1","source":"a b","target":"a"})" "\n");
    PairReadResult r = read_pairs(in);
    REQUIRE(r.pairs.size() == 1);
    CHECK(r.pairs[0].origin == PairOrigin::kGenuine);
  }
  SUBCASE("empty source is rejected and counted") {
    std::istringstream in(R"({"id":"1","source":"","target":"a"})" "\n");
    PairReadResult r = read_pairs(in);
    CHECK(r.pairs.empty());
    CHECK(r.rejected_records == 1);
  }
  SUBCASE("strict mode throws MalformedRecord") {
    std::istringstream in(R"({"id":"1","source":"","target":"a"})" "\n");
    CHECK_THROWS_AS(read_pairs(in, true), MalformedRecord);
  }
  SUBCASE("order preserved") {
    std::istringstream in(
        R"({"id":"1","source":"a","target":"b"})" "\n"
        R"({"id":"2","source":"c","target":"d","origin":"pseudo"})" "\n");
    PairReadResult r = read_pairs(in);
    REQUIRE(r.pairs.size() == 2);
    CHECK(r.pairs[0].id == "1");
    CHECK(r.pairs[1].origin == PairOrigin::kPseudo);
  }
}

TEST_CASE("write_pairs round-trips and escapes") {
  std::vector<ParallelPair> pairs = {
      {"p1", "say \"hi\"\tnow", "short", PairOrigin::kGenuine},
      {"p2", "<Pseudo> text", "t", PairOrigin::kPseudo},
  };
  std::ostringstream out;
  write_pairs(pairs, out);

  // re-readable via our reader
  std::istringstream back(out.str());
  PairReadResult r = read_pairs(back);
  CHECK(r.pairs == pairs);

  // and by an independent JSON reader, line by line
  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  nlohmann::json j = nlohmann::json::parse(line);
  CHECK(j["source"] == "say \"hi\"\tnow");

  // deterministic: byte-identical on a second write
  std::ostringstream out2;
  write_pairs(pairs, out2);
  CHECK(out.str() == out2.str());
}

TEST_CASE("write_pairs of empty list writes nothing") {
  std::ostringstream out;
  write_pairs({}, out);
  CHECK(out.str().empty());
}
