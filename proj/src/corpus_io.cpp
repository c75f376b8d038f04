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

#include "extraphrase/corpus_io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace extraphrase::corpus_io {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  int value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
    if (value > 1'000'000) return false;
  }
  out = value;
  return true;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string join_forms(const Sentence& sentence) {
  std::string out;
  for (const Token& t : sentence.tokens) {
    if (!out.empty()) out += ' ';
    out += t.form;
  }
  return out;
}

struct PendingSentence {
  Sentence sentence;
  std::string sent_id;
  std::string explicit_text;
};

}  // namespace

void validate_sentence(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  if (n == 0) throw InvalidTree("empty sentence");
  int root_count = 0;
  for (int i = 0; i < n; ++i) {
    const Token& t = sentence.tokens[i];
    if (t.index != i + 1) throw InvalidTree("token indices not contiguous");
    if (t.head == t.index) throw InvalidTree("token " + std::to_string(t.index) + " is its own head");
    if (t.head < 0 || t.head > n) throw InvalidTree("head out of range for token " + std::to_string(t.index));
    if (t.head == 0) ++root_count;
    if (t.form.empty() || t.form.find_first_of(" \t\n") != std::string::npos)
      throw InvalidTree("token " + std::to_string(t.index) + " has empty or whitespace form");
  }
  if (root_count != 1)
    throw InvalidTree(root_count == 0 ? "no root token" : "multiple root tokens");
  // Cycle check: walk every head chain to the root.
  for (int i = 1; i <= n; ++i) {
    int cur = i;
    int steps = 0;
    while (cur != 0) {
      cur = sentence.tokens[cur - 1].head;
      if (++steps > n) throw InvalidTree("head cycle involving token " + std::to_string(i));
    }
  }
}

ConlluResult parse_conllu(std::istream& in, const ConlluOptions& opts) {
  ConlluResult result;
  std::vector<PendingSentence> pending;  // sentences of the current document
  std::string current_doc_id;
  bool in_newdoc = false;
  std::size_t doc_counter = 0;

  PendingSentence current;
  bool have_tokens = false;
  std::string line;
  std::size_t line_number = 0;
  std::size_t sentence_start_line = 0;

  auto flush_document = [&](std::vector<PendingSentence>&& sents, const std::string& doc_id) {
    if (sents.empty()) return;
    Document doc;
    doc.id = doc_id.empty() ? ("doc" + std::to_string(doc_counter)) : doc_id;
    ++doc_counter;
    for (auto& ps : sents) doc.sentences.push_back(std::move(ps.sentence));
    result.documents.push_back(std::move(doc));
  };

  auto emit_pending = [&]() {
    if (pending.empty()) return;
    if (in_newdoc) {
      flush_document(std::move(pending), current_doc_id);
    } else if (opts.grouping == DocGrouping::kPerSentId) {
      // group consecutive sentences whose sent_id shares the prefix before
      // the last '-' (UD convention: doc-name-s1, doc-name-s2, ...)
      std::size_t i = 0;
      while (i < pending.size()) {
        auto group_key = [](const std::string& sid) {
          std::size_t dash = sid.find_last_of('-');
          return dash == std::string::npos ? sid : sid.substr(0, dash);
        };
        std::string key = group_key(pending[i].sent_id);
        std::vector<PendingSentence> group;
        while (i < pending.size() && group_key(pending[i].sent_id) == key) {
          group.push_back(std::move(pending[i]));
          ++i;
        }
        flush_document(std::move(group), key);
      }
    } else {
      for (auto& ps : pending) {
        std::vector<PendingSentence> one;
        std::string id = ps.sent_id;
        one.push_back(std::move(ps));
        flush_document(std::move(one), id);
      }
    }
    pending.clear();
  };

  auto finish_sentence = [&]() {
    if (!have_tokens) {
      current = PendingSentence{};
      return;
    }
    try {
      validate_sentence(current.sentence);
      current.sentence.raw_text = current.explicit_text.empty()
                                      ? join_forms(current.sentence)
                                      : current.explicit_text;
      pending.push_back(std::move(current));
    } catch (const InvalidTree& e) {
      std::string name = current.sent_id.empty()
                             ? ("sentence at line " + std::to_string(sentence_start_line))
                             : ("sentence " + current.sent_id);
      std::string msg = name + ": " + e.what();
      if (opts.strict) throw InvalidTree(msg);
      ++result.skipped_sentences;
      result.skip_reasons.push_back(msg);
    }
    current = PendingSentence{};
    have_tokens = false;
  };

  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finish_sentence();
      continue;
    }
    if (line[0] == '#') {
      std::string comment = trim(line.substr(1));
      if (comment.rfind("newdoc", 0) == 0) {
        finish_sentence();
        emit_pending();
        in_newdoc = true;
        std::size_t eq = comment.find('=');
        current_doc_id = eq == std::string::npos ? "" : trim(comment.substr(eq + 1));
      } else if (comment.rfind("sent_id", 0) == 0) {
        std::size_t eq = comment.find('=');
        if (eq != std::string::npos) current.sent_id = trim(comment.substr(eq + 1));
      } else if (comment.rfind("text", 0) == 0 && comment.find('=') != std::string::npos) {
        // only a bare "text =" comment, not "text_en" etc.
        std::size_t eq = comment.find('=');
        if (trim(comment.substr(0, eq)) == "text")
          current.explicit_text = trim(comment.substr(eq + 1));
      }
      continue;
    }

    if (!have_tokens) sentence_start_line = line_number;
    std::vector<std::string> fields = split_tabs(line);
    if (fields.size() != 10)
      throw MalformedLine(line_number, "expected 10 tab-separated columns, got " +
                                           std::to_string(fields.size()));
    const std::string& id_field = fields[0];
    if (id_field.find('-') != std::string::npos ||
        id_field.find('.') != std::string::npos) {
      // multiword-token range or empty node
      continue;
    }
    Token token;
    if (!parse_int(id_field, token.index) || token.index < 1)
      throw MalformedLine(line_number, "non-integer token index '" + id_field + "'");
    token.form = fields[1];
    token.lemma = fields[2] == "_" ? fields[1] : fields[2];
    token.upos = fields[3];
    if (fields[6] == "_") {
      // underscore head: treat as malformed, the tree is unusable
      throw MalformedLine(line_number, "missing head");
    }
    if (!parse_int(fields[6], token.head))
      throw MalformedLine(line_number, "non-integer head '" + fields[6] + "'");
    token.deprel = fields[7];
    current.sentence.tokens.push_back(std::move(token));
    have_tokens = true;
  }
  finish_sentence();
  emit_pending();
  return result;
}

std::string origin_name(PairOrigin origin) {
  return origin == PairOrigin::kGenuine ? "genuine" : "pseudo";
}

PairReadResult read_pairs(std::istream& in, bool strict) {
  PairReadResult result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    auto reject = [&](const std::string& why) {
      if (strict) throw MalformedRecord(line_number, why);
      ++result.rejected_records;
    };
    if (j.is_discarded() || !j.is_object()) {
      reject("not a JSON object");
      continue;
    }
    if (!j.contains("id") || !j["id"].is_string() || !j.contains("source") ||
        !j["source"].is_string() || !j.contains("target") ||
        !j["target"].is_string()) {
      reject("missing or non-string id/source/target");
      continue;
    }
    ParallelPair pair;
    pair.id = j["id"].get<std::string>();
    pair.source = j["source"].get<std::string>();
    pair.target = j["target"].get<std::string>();
    if (trim(pair.source).empty() || trim(pair.target).empty()) {
      reject("empty source or target");
      continue;
    }
    if (j.contains("origin")) {
      std::string o = j["origin"].is_string() ? j["origin"].get<std::string>() : "";
      if (o == "pseudo") {
        pair.origin = PairOrigin::kPseudo;
      } else if (o == "genuine") {
        pair.origin = PairOrigin::kGenuine;
      } else {
        reject("unknown origin '" + o + "'");
        continue;
      }
    }
    result.pairs.push_back(std::move(pair));
  }
  return result;
}

void write_pairs(const std::vector<ParallelPair>& pairs, std::ostream& out) {
  for (const ParallelPair& pair : pairs) {
    nlohmann::ordered_json j;
    j["id"] = pair.id;
    j["source"] = pair.source;
    j["target"] = pair.target;
    j["origin"] = origin_name(pair.origin);
    out << j.dump() << '\n';
  }
  if (!out) throw DataError("I/O failure while writing pair corpus");
}

}  // namespace extraphrase::corpus_io
