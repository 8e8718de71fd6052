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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "looplab/error.hpp"
#include "looplab/suites.hpp"

namespace looplab {
namespace {

using nlohmann::json;

json small_structural() {
  json c = default_suite_config("structural");
  c["trees"] = 200;
  c["n_max"] = 60;
  return c;
}

std::string jsonl(const SuiteResult& r) {
  std::ostringstream os;
  write_jsonl(os, r);
  return os.str();
}

TEST(ConfigHash, IgnoresKeyOrder) {
  const json a = json::parse(R"({"suite":"crt","seed":4,"x":[1,2]})");
  const json b = json::parse(R"({"x":[1,2],"seed":4,"suite":"crt"})");
  EXPECT_EQ(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16u);
  EXPECT_NE(config_hash(a), config_hash(json::parse(R"({"suite":"crt","seed":5,"x":[1,2]})")));
}

TEST(ConfigHash, FrozenValue) {
  // FNV-1a 64 of the empty object "{}".
  EXPECT_EQ(config_hash(json::object()), "08f44b07b5901a25");
}

TEST(Records, RoundTrip) {
  Record r{"exp", "binary", 101, 7, "stat", 0.25, "<=", 0.5, true};
  const json j = record_json(r, "00ff");
  EXPECT_EQ(j["config_hash"], "00ff");
  EXPECT_EQ(j["version"], kVersion);
  const Record back = record_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.experiment, r.experiment);
  EXPECT_EQ(back.n, r.n);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.value, r.value);
  EXPECT_EQ(back.comparison, r.comparison);
  EXPECT_EQ(back.threshold, r.threshold);

  Record info{"exp", "geometric", 5, 1, "median", 1.5};
  EXPECT_TRUE(record_json(info, "h")["threshold"].is_null());
}

TEST(ParseConfig, Errors) {
  auto kind = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kInvalidArgument;
  };
  EXPECT_EQ(kind("{"), ErrorKind::kParse);
  EXPECT_EQ(kind("[1]"), ErrorKind::kParse);
  EXPECT_EQ(kind(R"({"suite": 3})"), ErrorKind::kParse);
  EXPECT_EQ(kind(R"({"seed": -1})"), ErrorKind::kParse);
  EXPECT_EQ(parse_config(R"({"suite":"crt","seed":9})")["seed"], 9u);
}

TEST(Suites, NamesAndDefaults) {
  ASSERT_EQ(suite_names().size(), 10u);
  for (const auto& s : suite_names()) {
    const json c = default_suite_config(s);
    EXPECT_EQ(c["suite"], s);
    EXPECT_TRUE(c["seed"].is_number_unsigned());
  }
  EXPECT_THROW(default_suite_config("nope"), Error);
  EXPECT_THROW(run_suite(json{{"suite", "nope"}, {"seed", 1u}}), Error);
  EXPECT_THROW(run_suite(json{{"seed", 1u}}), Error);
}

TEST(Suites, MissingKeyIsParseError) {
  json c = small_structural();
  c.erase("trees");
  try {
    run_suite(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParse);
  }
}

TEST(Suites, ByteIdenticalAcrossRerunsAndThreads) {
  const json c = small_structural();
  RunOptions one, three;
  three.threads = 3;
  const SuiteResult a = run_suite(c, one);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(jsonl(a), jsonl(run_suite(c, one)));
  EXPECT_EQ(jsonl(a), jsonl(run_suite(c, three)));
  json other = c;
  other["seed"] = 99u;
  EXPECT_NE(jsonl(a), jsonl(run_suite(other, one)));
}

TEST(Suites, RecordsCarrySeedAndHash) {
  const json c = small_structural();
  const SuiteResult r = run_suite(c);
  ASSERT_FALSE(r.records.empty());
  std::istringstream is(jsonl(r));
  std::string line;
  while (std::getline(is, line)) {
    const json j = json::parse(line);
    EXPECT_EQ(j["config_hash"], config_hash(c));
    EXPECT_EQ(j["seed"], 2u);
  }
}

TEST(Suites, CheckpointsAreReused) {
  const auto dir = std::filesystem::temp_directory_path() / "looplab_ckpt_test";
  std::filesystem::remove_all(dir);
  const json c = small_structural();
  RunOptions opts;
  opts.checkpoint_dir = dir;
  const std::string first = jsonl(run_suite(c, opts));
  int files = 0;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    EXPECT_EQ(e.path().filename().string().rfind(config_hash(c), 0), 0u);
    ++files;
  }
  EXPECT_EQ(files, 3);

  // Tamper with one stage file: a reused stage returns the stored records.
  std::filesystem::path stage = dir / (config_hash(c) + ".structural-binary.jsonl");
  ASSERT_TRUE(std::filesystem::exists(stage));
  std::ifstream in(stage);
  std::string line;
  std::getline(in, line);
  in.close();
  json j = json::parse(line);
  j["value"] = 12345.0;
  std::ofstream(stage) << j.dump() << '\n';
  const SuiteResult again = run_suite(c, opts);
  bool seen = false;
  for (const auto& r : again.records) seen |= r.value == 12345.0;
  EXPECT_TRUE(seen);
  std::filesystem::remove_all(dir);
  EXPECT_EQ(jsonl(run_suite(c)), first);
}

}  // namespace
}  // namespace looplab
