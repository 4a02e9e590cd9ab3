/*
 * Copyright 2026 The bpksharp Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

// Single-file key-value store with a JSON-lines write-ahead journal.
// Every mutation appends one line and flushes before the in-memory map
// changes; startup replays the journal. Collections are flat namespaces.

#include <nlohmann/json.hpp>

#include <fstream>
#include <map>
#include <mutex>
#include <string>

#include "bpksharp/common/errors.hpp"

namespace bpksharp::service {

using json = nlohmann::ordered_json;

class KvStore {
 public:
  explicit KvStore(const std::string& path) : path_(path) {
    std::ifstream in(path_);
    if (in) {
      std::string line;
      std::size_t lineno = 0;
      while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, false);
        if (rec.is_discarded() || rec.value("op", "") != "put")
          throw ParseError(path_ + ": corrupt journal at line " + std::to_string(lineno));
        data_[rec.at("c").get<std::string>()][rec.at("k").get<std::string>()] = rec.at("v");
      }
    }
    out_.open(path_, std::ios::app);
    if (!out_) throw ParseError("cannot open journal for writing: " + path_);
  }

  void put(const std::string& collection, const std::string& key, const json& value) {
    std::lock_guard lock(mu_);
    json rec;
    rec["op"] = "put";
    rec["c"] = collection;
    rec["k"] = key;
    rec["v"] = value;
    out_ << rec.dump() << "\n";
    out_.flush();
    if (!out_) throw ParseError("journal write failed: " + path_);
    data_[collection][key] = value;
  }

  std::optional<json> get(const std::string& collection, const std::string& key) const {
    std::lock_guard lock(mu_);
    auto c = data_.find(collection);
    if (c == data_.end()) return std::nullopt;
    auto it = c->second.find(key);
    if (it == c->second.end()) return std::nullopt;
    return it->second;
  }

  bool contains(const std::string& collection, const std::string& key) const {
    return get(collection, key).has_value();
  }

  std::vector<std::pair<std::string, json>> list(const std::string& collection) const {
    std::lock_guard lock(mu_);
    std::vector<std::pair<std::string, json>> out;
    auto c = data_.find(collection);
    if (c == data_.end()) return out;
    out.reserve(c->second.size());
    for (const auto& [k, v] : c->second) out.emplace_back(k, v);
    return out;
  }

  std::size_t count(const std::string& collection) const {
    std::lock_guard lock(mu_);
    auto c = data_.find(collection);
    return c == data_.end() ? 0 : c->second.size();
  }

  // Whole-store JSON snapshot for inspection tooling.
  json export_json() const {
    std::lock_guard lock(mu_);
    json out = json::object();
    for (const auto& [cname, coll] : data_) {
      json c = json::object();
      for (const auto& [k, v] : coll) c[k] = v;
      out[cname] = c;
    }
    return out;
  }

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::ofstream out_;
  std::map<std::string, std::map<std::string, json>> data_;
};

}  // namespace bpksharp::service
