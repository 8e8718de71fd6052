// Copyright 2026 The looplab Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOOPLAB_SUITES_HPP_
#define LOOPLAB_SUITES_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace looplab {

inline constexpr const char* kVersion = "0.1.0";

// One numeric result. comparison is "<=", ">=", "==" or "info"; info
// records always pass.
struct Record {
  std::string experiment;
  std::string law;
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::string statistic;
  double value = 0.0;
  std::string comparison = "info";
  double threshold = 0.0;
  bool pass = true;
};

nlohmann::json record_json(const Record& r, const std::string& config_hash);
Record record_from_json(const nlohmann::json& j);

// 16 hex digits of FNV-1a over the canonical (sorted-key) dump.
std::string config_hash(const nlohmann::json& config);

// Parses and checks a config document: an object with a string "suite"
// (for verify) and an unsigned "seed". Throws kParse.
nlohmann::json parse_config(const std::string& text);

struct RunOptions {
  int threads = 1;
  // When set, each finished stage is stored under <dir>/<hash>.<stage>.jsonl
  // and reused by later runs with the same config.
  std::filesystem::path checkpoint_dir;
  std::function<void(const std::string&)> progress;
};

struct SuiteResult {
  std::string suite;
  std::string config_hash;
  std::vector<Record> records;
  bool pass() const;
};

// The criteria suites, in order.
const std::vector<std::string>& suite_names();
// Built-in config for a suite; throws kInvalidArgument for unknown names.
nlohmann::json default_suite_config(const std::string& suite);
// Runs config["suite"] with the config's values.
SuiteResult run_suite(const nlohmann::json& config, const RunOptions& opts = {});

// One JSON line per record.
void write_jsonl(std::ostream& os, const SuiteResult& r);

}  // namespace looplab

#endif  // LOOPLAB_SUITES_HPP_
