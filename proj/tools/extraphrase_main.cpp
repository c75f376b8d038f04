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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>
#include <json.hpp>

#include "extraphrase/augment.hpp"
#include "extraphrase/config.hpp"
#include "extraphrase/corpus_io.hpp"
#include "extraphrase/deptree.hpp"
#include "extraphrase/metrics.hpp"
#include "extraphrase/paraphrase.hpp"
#include "extraphrase/types.hpp"

namespace {

namespace fs = std::filesystem;
using namespace extraphrase;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitBackend = 3;

// Writes via a temp file and atomic rename so a failed run never leaves a
// partially valid output behind. path "-" streams to stdout directly.
void write_atomic(const std::string& path,
                  const std::function<void(std::ostream&)>& writer) {
  if (path == "-" || path.empty()) {
    writer(std::cout);
    return;
  }
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw DataError("cannot open " + tmp.string() + " for writing");
    writer(out);
    if (!out) {
      out.close();
      fs::remove(tmp);
      throw DataError("write failure on " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::string read_stream_arg(const std::string& path, std::ifstream& file,
                            std::istream*& stream) {
  if (path == "-") {
    stream = &std::cin;
    return "<stdin>";
  }
  file.open(path);
  if (!file) throw DataError("cannot open " + path);
  stream = &file;
  return path;
}

corpus_io::ConlluResult read_conllu(const std::string& path,
                                    const corpus_io::ConlluOptions& opts) {
  std::ifstream file;
  std::istream* stream = nullptr;
  read_stream_arg(path, file, stream);
  return corpus_io::parse_conllu(*stream, opts);
}

std::vector<ParallelPair> read_pairs_file(const std::string& path) {
  std::ifstream file;
  std::istream* stream = nullptr;
  read_stream_arg(path, file, stream);
  corpus_io::PairReadResult result = corpus_io::read_pairs(*stream);
  if (result.rejected_records > 0)
    std::cerr << path << ": rejected " << result.rejected_records
              << " malformed records\n";
  return result.pairs;
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream file;
  std::istream* stream = nullptr;
  read_stream_arg(path, file, stream);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(*stream, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

paraphrase::RoundTripConfig make_roundtrip(const config::BackendSettings& s) {
  paraphrase::RoundTripConfig rt;
  rt.batch_size = s.batch_size;
  rt.max_in_flight = s.max_in_flight;
  if (s.kind == "identity") {
    rt.forward = std::make_shared<paraphrase::IdentityBackend>();
    rt.backward = std::make_shared<paraphrase::IdentityBackend>();
  } else {
    std::string endpoint = s.endpoint;
    if (const char* env = std::getenv("EXTRAPHRASE_ENDPOINT")) endpoint = env;
    paraphrase::RetryPolicy retry;
    retry.max_attempts = s.max_attempts;
    auto timeout = std::chrono::milliseconds(s.timeout_ms);
    rt.forward =
        paraphrase::http_backend(endpoint, s.forward_model, timeout, retry);
    rt.backward =
        paraphrase::http_backend(endpoint, s.backward_model, timeout, retry);
  }
  if (!s.cache_path.empty()) {
    auto store = std::make_shared<paraphrase::CacheStore>(s.cache_path);
    rt.forward = paraphrase::with_cache(rt.forward, store);
    rt.backward = paraphrase::with_cache(rt.backward, store);
  }
  return rt;
}

void apply_workers(int workers) {
#ifdef _OPENMP
  if (workers > 0) omp_set_num_threads(workers);
#else
  (void)workers;
#endif
}

int run_compress(const std::string& input, const std::string& output,
                 const config::ToolkitConfig& cfg) {
  corpus_io::ConlluResult parsed = read_conllu(input, cfg.io);
  std::vector<Sentence> sentences;
  for (const Document& doc : parsed.documents)
    for (const Sentence& s : doc.sentences) sentences.push_back(s);
  if (parsed.skipped_sentences > 0)
    std::cerr << "skipped " << parsed.skipped_sentences
              << " invalid sentences\n";
  std::vector<std::string> compressed =
      deptree::compress_corpus(sentences, cfg.compression);
  write_atomic(output, [&](std::ostream& out) {
    for (const std::string& line : compressed) out << line << '\n';
  });
  return kExitOk;
}

int run_augment(const std::string& input, const std::string& output,
                config::ToolkitConfig cfg, bool no_paraphrase,
                std::uint64_t seed) {
  corpus_io::ConlluResult parsed = read_conllu(input, cfg.io);
  if (parsed.skipped_sentences > 0)
    std::cerr << "skipped " << parsed.skipped_sentences
              << " invalid sentences\n";

  std::vector<std::string> backend_ids;
  if (!no_paraphrase && cfg.roundtrip) {
    cfg.augment.roundtrip = make_roundtrip(*cfg.roundtrip);
    backend_ids.push_back(cfg.augment.roundtrip->forward->identifier());
    backend_ids.push_back(cfg.augment.roundtrip->backward->identifier());
  }

  augment::PseudoCorpusResult result =
      augment::build_pseudo_corpus(parsed.documents, cfg.augment);
  if (result.skipped_documents > 0)
    std::cerr << "skipped " << result.skipped_documents << " documents\n";

  write_atomic(output, [&](std::ostream& out) {
    corpus_io::write_pairs(result.pairs, out);
  });

  // run manifest beside the output, for provenance
  if (output != "-" && !output.empty()) {
    nlohmann::ordered_json manifest;
    manifest["config_hash"] = config::config_hash(cfg);
    manifest["backend_identifiers"] = backend_ids;
    manifest["seed"] = seed;
    manifest["input_documents"] = parsed.documents.size();
    manifest["output_pairs"] = result.pairs.size();
    manifest["skipped_sentences"] = parsed.skipped_sentences;
    manifest["skipped_documents"] = result.skipped_documents;
    write_atomic(output + ".manifest.json", [&](std::ostream& out) {
      out << manifest.dump(2) << '\n';
    });
  }
  std::cerr << "wrote " << result.pairs.size() << " pseudo pairs\n";
  return kExitOk;
}

struct AlignedCorpus {
  std::vector<std::string> candidates;
  std::vector<std::string> references;
};

AlignedCorpus load_aligned(const std::string& cand_path,
                           const std::string& ref_path, bool plain) {
  AlignedCorpus corpus;
  if (plain) {
    corpus.candidates = read_lines(cand_path);
    corpus.references = read_lines(ref_path);
    if (corpus.candidates.size() != corpus.references.size())
      throw DataError("line counts differ: " +
                      std::to_string(corpus.candidates.size()) + " vs " +
                      std::to_string(corpus.references.size()));
    return corpus;
  }
  std::vector<ParallelPair> cands = read_pairs_file(cand_path);
  std::vector<ParallelPair> refs = read_pairs_file(ref_path);
  std::map<std::string, const ParallelPair*> by_id;
  for (const ParallelPair& p : refs) by_id[p.id] = &p;
  for (const ParallelPair& p : cands) {
    auto it = by_id.find(p.id);
    if (it == by_id.end())
      throw DataError("id '" + p.id + "' missing from reference file");
    corpus.candidates.push_back(p.target);
    corpus.references.push_back(it->second->target);
  }
  return corpus;
}

int run_evaluate(const std::string& cand_path, const std::string& ref_path,
                 const std::string& out_path, bool plain,
                 const config::ToolkitConfig& cfg) {
  AlignedCorpus corpus = load_aligned(cand_path, ref_path, plain);
  if (corpus.candidates.empty()) throw DataError("empty evaluation corpus");
  metrics::CorpusRouge rouge =
      metrics::corpus_rouge(corpus.candidates, corpus.references);
  double bleu = metrics::corpus_bleu(corpus.candidates, corpus.references, 4,
                                     cfg.metrics.bleu_smoothing);
  metrics::LengthStats lengths =
      metrics::length_stats(corpus.candidates, corpus.references);

  nlohmann::ordered_json report;
  auto score_json = [](const metrics::Score& s) {
    nlohmann::ordered_json j;
    j["precision"] = s.precision;
    j["recall"] = s.recall;
    j["f1"] = s.f1;
    return j;
  };
  report["rouge1"] = score_json(rouge.rouge1);
  report["rouge2"] = score_json(rouge.rouge2);
  report["rougeL"] = score_json(rouge.rougeL);
  report["bleu"] = bleu;
  report["length_stats"]["ratio"] = lengths.ratio;
  report["length_stats"]["difference"] = lengths.difference;
  report["pair_count"] = corpus.candidates.size();
  report["bertscore"] = nullptr;  // reserved for an external scorer
  write_atomic(out_path, [&](std::ostream& out) {
    out << report.dump(2) << '\n';
  });
  return kExitOk;
}

int run_stats(const std::string& cand_path, const std::string& ref_path,
              const std::string& out_path, bool plain) {
  AlignedCorpus corpus = load_aligned(cand_path, ref_path, plain);
  if (corpus.candidates.empty()) throw DegenerateInput("empty corpus");
  metrics::LengthStats lengths =
      metrics::length_stats(corpus.candidates, corpus.references);
  nlohmann::ordered_json report;
  report["ratio"] = lengths.ratio;
  report["difference"] = lengths.difference;
  report["pair_count"] = corpus.candidates.size();
  write_atomic(out_path, [&](std::ostream& out) {
    out << report.dump(2) << '\n';
  });
  return kExitOk;
}

int run_oversample(const std::string& input, const std::string& output,
                   std::size_t target, std::uint64_t seed) {
  std::vector<ParallelPair> pairs = read_pairs_file(input);
  std::vector<ParallelPair> sampled = augment::oversample(pairs, target, seed);
  write_atomic(output, [&](std::ostream& out) {
    corpus_io::write_pairs(sampled, out);
  });
  return kExitOk;
}

int run_mix(const std::string& genuine_path, const std::string& pseudo_path,
            const std::string& output, std::uint64_t seed, bool shuffle,
            const config::ToolkitConfig& cfg) {
  std::vector<ParallelPair> genuine = read_pairs_file(genuine_path);
  std::vector<ParallelPair> pseudo = read_pairs_file(pseudo_path);
  std::string tag = cfg.augment.tag_enabled ? cfg.augment.pseudo_tag : "";
  std::vector<ParallelPair> mixed =
      augment::mix(genuine, pseudo, seed, shuffle, tag);
  write_atomic(output, [&](std::ostream& out) {
    corpus_io::write_pairs(mixed, out);
  });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ExtraPhrase corpus-augmentation toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  int workers = 0;
  app.add_option("--config", config_path, "toolkit config file (JSON)");
  app.add_option("--workers", workers, "worker threads (0 = all cores)");

  // compress
  auto* compress_cmd =
      app.add_subcommand("compress", "extractive compression of a CoNLL-U corpus");
  std::string in_path = "-", out_path = "-";
  bool strict_flag = false;
  compress_cmd->add_option("--input,-i", in_path, "CoNLL-U input ('-' = stdin)");
  compress_cmd->add_option("--output,-o", out_path, "output path ('-' = stdout)");
  compress_cmd->add_flag("--strict", strict_flag, "abort on invalid sentences");

  // augment
  auto* augment_cmd =
      app.add_subcommand("augment", "build a pseudo corpus with ExtraPhrase");
  std::string aug_in = "-", aug_out = "-";
  bool no_paraphrase = false, aug_strict = false;
  int doc_limit = 0;
  std::uint64_t seed_flag = 0;
  bool seed_set = false;
  augment_cmd->add_option("--input,-i", aug_in, "CoNLL-U input");
  augment_cmd->add_option("--output,-o", aug_out, "JSONL output");
  augment_cmd->add_flag("--no-paraphrase", no_paraphrase,
                        "compression-only ablation");
  augment_cmd->add_option("--doc-limit", doc_limit,
                          "sentences per document fed to the pipeline");
  augment_cmd->add_flag("--strict", aug_strict, "abort on any error");
  augment_cmd
      ->add_option("--seed", seed_flag, "seed recorded in the run manifest")
      ->each([&](const std::string&) { seed_set = true; });

  // evaluate
  auto* eval_cmd = app.add_subcommand("evaluate", "ROUGE/BLEU/length report");
  std::string cand_path, ref_path, report_path = "-";
  bool plain = false;
  eval_cmd->add_option("candidates", cand_path, "candidate file")->required();
  eval_cmd->add_option("references", ref_path, "reference file")->required();
  eval_cmd->add_option("--out", report_path, "report path ('-' = stdout)");
  eval_cmd->add_flag("--plain", plain, "line-aligned plain text inputs");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "length ratio/difference report");
  std::string st_cand, st_ref, st_out = "-";
  bool st_plain = false;
  stats_cmd->add_option("candidates", st_cand, "candidate file")->required();
  stats_cmd->add_option("references", st_ref, "reference file")->required();
  stats_cmd->add_option("--out", st_out, "report path");
  stats_cmd->add_flag("--plain", st_plain, "line-aligned plain text inputs");

  // oversample
  auto* over_cmd =
      app.add_subcommand("oversample", "enlarge a genuine corpus by sampling");
  std::string ov_in, ov_out = "-";
  std::size_t ov_target = 0;
  std::uint64_t ov_seed = 0;
  bool ov_seed_set = false;
  over_cmd->add_option("--input,-i", ov_in, "JSONL input")->required();
  over_cmd->add_option("--output,-o", ov_out, "JSONL output");
  over_cmd->add_option("--target", ov_target, "target pair count")->required();
  over_cmd->add_option("--seed", ov_seed, "sampling seed")
      ->each([&](const std::string&) { ov_seed_set = true; });

  // mix
  auto* mix_cmd = app.add_subcommand("mix", "combine genuine and pseudo corpora");
  std::string mx_genuine, mx_pseudo, mx_out = "-";
  std::uint64_t mx_seed = 0;
  bool mx_seed_set = false, mx_shuffle = false;
  mix_cmd->add_option("--genuine", mx_genuine, "genuine JSONL")->required();
  mix_cmd->add_option("--pseudo", mx_pseudo, "pseudo JSONL")->required();
  mix_cmd->add_option("--output,-o", mx_out, "JSONL output");
  mix_cmd->add_flag("--shuffle", mx_shuffle, "shuffle the combined corpus");
  mix_cmd->add_option("--seed", mx_seed, "shuffle seed")
      ->each([&](const std::string&) { mx_seed_set = true; });

  for (CLI::App* sub : {compress_cmd, augment_cmd, eval_cmd, stats_cmd,
                        over_cmd, mix_cmd})
    sub->fallthrough();  // --config/--workers may follow the subcommand

  CLI11_PARSE(app, argc, argv);

  try {
    config::ToolkitConfig cfg;
    if (!config_path.empty()) cfg = config::load_config(config_path);
    if (workers > 0) cfg.workers = workers;
    apply_workers(cfg.workers);

    if (*compress_cmd) {
      if (strict_flag) cfg.io.strict = true;
      return run_compress(in_path, out_path, cfg);
    }
    if (*augment_cmd) {
      if (aug_strict) {
        cfg.io.strict = true;
        cfg.augment.strict = true;
      }
      if (doc_limit > 0) cfg.augment.doc_sentence_limit = doc_limit;
      if (no_paraphrase) cfg.augment.roundtrip.reset();
      std::uint64_t seed = seed_set ? seed_flag : cfg.seeds.shuffle;
      return run_augment(aug_in, aug_out, cfg, no_paraphrase, seed);
    }
    if (*eval_cmd) return run_evaluate(cand_path, ref_path, report_path, plain, cfg);
    if (*stats_cmd) return run_stats(st_cand, st_ref, st_out, st_plain);
    if (*over_cmd) {
      std::uint64_t seed = ov_seed_set ? ov_seed : cfg.seeds.oversample;
      return run_oversample(ov_in, ov_out, ov_target, seed);
    }
    if (*mix_cmd) {
      std::uint64_t seed = mx_seed_set ? mx_seed : cfg.seeds.shuffle;
      return run_mix(mx_genuine, mx_pseudo, mx_out, seed, mx_shuffle, cfg);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BackendError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBackend;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}
