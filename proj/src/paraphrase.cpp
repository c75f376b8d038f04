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

#include "extraphrase/paraphrase.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <thread>
#include <utility>

#include <httplib.h>
#include <json.hpp>

namespace extraphrase::paraphrase {

namespace {

std::vector<std::string> translate_checked(TranslationBackend& backend,
                                           const std::vector<std::string>& texts) {
  std::vector<std::string> out = backend.translate(texts);
  if (out.size() != texts.size())
    throw LengthMismatch("backend '" + backend.identifier() + "' returned " +
                         std::to_string(out.size()) + " outputs for " +
                         std::to_string(texts.size()) + " inputs");
  return out;
}

std::vector<std::string> run_batched(TranslationBackend& backend,
                                     const std::vector<std::string>& texts,
                                     int batch_size, int max_in_flight) {
  const std::size_t n = texts.size();
  const std::size_t bs = static_cast<std::size_t>(std::max(1, batch_size));
  std::vector<std::pair<std::size_t, std::size_t>> ranges;  // [begin, end)
  for (std::size_t begin = 0; begin < n; begin += bs)
    ranges.emplace_back(begin, std::min(begin + bs, n));

  std::vector<std::string> out(n);
  const int in_flight = std::max(1, max_in_flight);
  for (std::size_t wave = 0; wave < ranges.size();
       wave += static_cast<std::size_t>(in_flight)) {
    std::vector<std::future<std::vector<std::string>>> futures;
    std::size_t wave_end =
        std::min(wave + static_cast<std::size_t>(in_flight), ranges.size());
    for (std::size_t r = wave; r < wave_end; ++r) {
      auto [begin, end] = ranges[r];
      std::vector<std::string> batch(texts.begin() + begin, texts.begin() + end);
      futures.push_back(std::async(std::launch::async, [&backend, batch]() {
        return translate_checked(backend, batch);
      }));
    }
    for (std::size_t r = wave; r < wave_end; ++r) {
      std::vector<std::string> result;
      try {
        result = futures[r - wave].get();
      } catch (const BackendError&) {
        throw;
      } catch (const std::exception& e) {
        auto [begin, end] = ranges[r];
        throw BackendUnavailable("batch [" + std::to_string(begin) + ", " +
                                 std::to_string(end) + ") failed: " + e.what());
      }
      std::copy(result.begin(), result.end(), out.begin() + ranges[r].first);
    }
  }
  return out;
}

}  // namespace

std::vector<std::string> round_trip(const std::vector<std::string>& texts,
                                    const RoundTripConfig& config) {
  if (!config.forward || !config.backward)
    throw ArgumentError("round_trip requires forward and backward backends");
  for (const std::string& t : texts)
    if (t.empty()) throw ArgumentError("round_trip input contains an empty text");
  if (texts.empty()) return {};
  std::vector<std::string> pivot =
      run_batched(*config.forward, texts, config.batch_size, config.max_in_flight);
  return run_batched(*config.backward, pivot, config.batch_size,
                     config.max_in_flight);
}

CacheStore::CacheStore(const std::string& path) : path_(path) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  std::size_t corrupt = 0;
  while (std::getline(in, line)) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("k") ||
        !j.contains("i") || !j.contains("o") || !j["k"].is_string() ||
        !j["i"].is_string() || !j["o"].is_string()) {
      ++corrupt;
      continue;
    }
    entries_[{j["k"].get<std::string>(), j["i"].get<std::string>()}] =
        j["o"].get<std::string>();
  }
  if (corrupt > 0)
    std::cerr << "cache: skipped " << corrupt << " corrupt entries in " << path_
              << "\n";
}

bool CacheStore::lookup(const std::string& backend_id, const std::string& input,
                        std::string& output) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find({backend_id, input});
  if (it == entries_.end()) return false;
  output = it->second;
  return true;
}

void CacheStore::insert(const std::string& backend_id, const std::string& input,
                        const std::string& output) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto key = std::make_pair(backend_id, input);
  if (entries_.count(key)) return;
  entries_[key] = output;
  std::ofstream out(path_, std::ios::app);
  nlohmann::ordered_json j;
  j["k"] = backend_id;
  j["i"] = input;
  j["o"] = output;
  out << j.dump() << '\n';
}

namespace {

class CachingBackend : public TranslationBackend {
 public:
  CachingBackend(BackendPtr inner, std::shared_ptr<CacheStore> store)
      : inner_(std::move(inner)), store_(std::move(store)) {}

  std::string identifier() const override { return inner_->identifier(); }

  std::vector<std::string> translate(
      const std::vector<std::string>& texts) override {
    const std::string id = inner_->identifier();
    std::vector<std::string> out(texts.size());
    std::vector<std::size_t> misses;
    for (std::size_t i = 0; i < texts.size(); ++i)
      if (!store_->lookup(id, texts[i], out[i])) misses.push_back(i);
    if (!misses.empty()) {
      std::vector<std::string> miss_texts;
      miss_texts.reserve(misses.size());
      for (std::size_t i : misses) miss_texts.push_back(texts[i]);
      std::vector<std::string> fresh = translate_checked(*inner_, miss_texts);
      for (std::size_t k = 0; k < misses.size(); ++k) {
        out[misses[k]] = fresh[k];
        store_->insert(id, miss_texts[k], fresh[k]);
      }
    }
    return out;
  }

 private:
  BackendPtr inner_;
  std::shared_ptr<CacheStore> store_;
};

class HttpBackend : public TranslationBackend {
 public:
  HttpBackend(std::string endpoint, std::string model_id,
              std::chrono::milliseconds timeout, RetryPolicy retry)
      : endpoint_(std::move(endpoint)),
        model_id_(std::move(model_id)),
        timeout_(timeout),
        retry_(retry) {
    std::size_t scheme = endpoint_.find("://");
    std::size_t path_start = scheme == std::string::npos
                                 ? endpoint_.find('/')
                                 : endpoint_.find('/', scheme + 3);
    if (path_start == std::string::npos) {
      base_ = endpoint_;
      path_ = "/translate";
    } else {
      base_ = endpoint_.substr(0, path_start);
      path_ = endpoint_.substr(path_start);
    }
  }

  std::string identifier() const override {
    return endpoint_ + "#" + model_id_;
  }

  std::vector<std::string> translate(
      const std::vector<std::string>& texts) override {
    nlohmann::json request;
    request["model"] = model_id_;
    request["texts"] = texts;
    const std::string body = request.dump();

    std::string last_error;
    auto backoff = retry_.initial_backoff;
    for (int attempt = 0; attempt < std::max(1, retry_.max_attempts); ++attempt) {
      if (attempt > 0) {
        std::this_thread::sleep_for(backoff);
        backoff = std::chrono::milliseconds(static_cast<long>(
            static_cast<double>(backoff.count()) * retry_.backoff_factor));
      }
      httplib::Client client(base_);
      client.set_connection_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout_));
      client.set_read_timeout(std::chrono::duration_cast<std::chrono::seconds>(timeout_));
      auto res = client.Post(path_, body, "application/json");
      if (!res) {
        last_error = "transport error: " + httplib::to_string(res.error());
        continue;
      }
      if (res->status != 200) {
        last_error = "HTTP status " + std::to_string(res->status);
        continue;
      }
      nlohmann::json response = nlohmann::json::parse(res->body, nullptr, false);
      if (response.is_discarded() || !response.contains("translations") ||
          !response["translations"].is_array()) {
        last_error = "malformed response body";
        continue;
      }
      std::vector<std::string> out;
      bool ok = true;
      for (const auto& item : response["translations"]) {
        if (!item.is_string()) {
          ok = false;
          break;
        }
        out.push_back(item.get<std::string>());
      }
      if (!ok) {
        last_error = "non-string translation in response";
        continue;
      }
      // length contract violation is not retryable
      if (out.size() != texts.size())
        throw LengthMismatch("backend '" + identifier() + "' returned " +
                             std::to_string(out.size()) + " outputs for " +
                             std::to_string(texts.size()) + " inputs");
      return out;
    }
    throw BackendUnavailable("backend '" + identifier() + "' failed after " +
                             std::to_string(retry_.max_attempts) +
                             " attempts: " + last_error);
  }

 private:
  std::string endpoint_;
  std::string model_id_;
  std::string base_;
  std::string path_;
  std::chrono::milliseconds timeout_;
  RetryPolicy retry_;
};

}  // namespace

BackendPtr with_cache(BackendPtr backend, std::shared_ptr<CacheStore> store) {
  return std::make_shared<CachingBackend>(std::move(backend), std::move(store));
}

BackendPtr http_backend(const std::string& endpoint, const std::string& model_id,
                        std::chrono::milliseconds timeout,
                        const RetryPolicy& retry) {
  return std::make_shared<HttpBackend>(endpoint, model_id, timeout, retry);
}

}  // namespace extraphrase::paraphrase
