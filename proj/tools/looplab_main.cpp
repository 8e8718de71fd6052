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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "looplab/bgw.hpp"
#include "looplab/error.hpp"
#include "looplab/identities.hpp"
#include "looplab/loop_graph.hpp"
#include "looplab/plane_tree.hpp"
#include "looplab/suites.hpp"
#include "looplab/tree_io.hpp"
#include "looplab/walk.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace looplab;

namespace {

enum Exit { kOk = 0, kThresholdFailed = 1, kUsage = 2, kModuleError = 3 };

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  int threads = 1;
};

json load_config(const Globals& g) {
  if (g.config_path.empty()) return json::object();
  std::ifstream in(g.config_path);
  if (!in) throw Error(ErrorKind::kParse, "cannot read " + g.config_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

fs::path out_dir(const Globals& g) {
  fs::path dir = g.out;
  if (dir.empty()) {
    const char* env = std::getenv("LOOPLAB_OUT_DIR");
    dir = env != nullptr ? env : ".";
  }
  fs::create_directories(dir);
  return dir;
}

json law_spec(const std::string& s) {
  if (!s.empty() && s.front() == '{') return json::parse(s);
  return s;
}

// Flags override config values; the merged document is what gets hashed.
template <class T>
void merge(json& cfg, const char* key, const std::optional<T>& flag) {
  if (flag) cfg[key] = *flag;
}

std::uint64_t seed_of(json& cfg, const Globals& g) {
  if (g.seed) cfg["seed"] = *g.seed;
  if (!cfg.contains("seed")) cfg["seed"] = 1u;
  return cfg["seed"].get<std::uint64_t>();
}

void emit(const std::string& sub, const json& cfg, json result) {
  result["subcommand"] = sub;
  result["config_hash"] = config_hash(cfg);
  result["seed"] = cfg.value("seed", std::uint64_t{0});
  result["version"] = kVersion;
  std::cout << result.dump() << '\n';
}

PlaneTree tree_from(const json& cfg, RandomSource& src) {
  if (cfg.contains("tree")) return load_dsv1(cfg["tree"].get<std::string>());
  const OffspringLaw law = OffspringLaw::from_json(cfg.at("law"));
  const std::string mode = cfg.value("mode", std::string("exact"));
  const auto n = cfg.value("n", std::int64_t{1});
  if (mode == "exact") return sample_bgw_exact_n(law, n, src);
  if (mode == "at-least") {
    AtLeastOptions opts;
    std::optional<SurvivalTable> table;
    if (n >= 2 && n - 1 <= SurvivalTable::kMaxRows) {
      table.emplace(WalkLaw::from_offspring(law), n - 1);
      opts.method = AtLeastMethod::kSurvivalTable;
      opts.table = &*table;
    }
    return sample_bgw_at_least_n(law, n, src, opts);
  }
  if (mode == "free") return sample_bgw(law, src, cfg.value("cap", kMaxVertices));
  throw Error(ErrorKind::kParse, "mode must be exact, at-least or free");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"looplab: random trees, looptrees and negative-drift walks"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--config", g.config_path, "JSON config file");
  app.add_option("--seed", g.seed, "base seed");
  app.add_option("--out", g.out, "output directory (env LOOPLAB_OUT_DIR otherwise)");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);

  std::optional<std::string> law;
  std::optional<std::int64_t> n, horizon, h, vertex, n_max, jmax;
  std::optional<std::string> tree_file, suite, checkpoint;
  bool exact = false, at_least = false, bar = false, conditioned = false;

  auto* sample = app.add_subcommand("sample-tree", "sample a BGW tree, write DSV1");
  sample->add_option("--law", law, "preset name or JSON law spec");
  sample->add_option("--n", n, "size");
  auto* ex = sample->add_flag("--exact-size", exact, "condition on |T| = n");
  sample->add_flag("--at-least", at_least, "condition on |T| >= n")->excludes(ex);

  auto* loop = app.add_subcommand("loop", "Loop / Loop-bar edges and H° profile");
  loop->add_option("--tree", tree_file, "DSV1 tree (else sampled from --law/--n)");
  loop->add_option("--law", law);
  loop->add_option("--n", n);
  loop->add_flag("--bar", bar, "Loop-bar instead of Loop");

  auto* trunk = app.add_subcommand("trunk", "trunk of a vertex, or a Trunk* draw");
  trunk->add_option("--tree", tree_file);
  trunk->add_option("--vertex", vertex, "marked vertex (with --tree)");
  trunk->add_option("--law", law);
  trunk->add_option("--height", h, "height of a Trunk* draw");

  auto* walk = app.add_subcommand("walk", "free or conditioned walk, tail table");
  walk->add_option("--law", law, "offspring law or walk spec (JSON)");
  walk->add_option("--n", n, "conditioning level");
  walk->add_option("--horizon", horizon);
  walk->add_flag("--conditioned", conditioned, "condition on zeta >= n");
  walk->add_option("--tail", jmax, "also write P(zeta >= j) for j <= TAIL");

  auto* couple = app.add_subcommand("couple", "coupled path Z^(n)");
  couple->add_option("--law", law);
  couple->add_option("--n", n);
  couple->add_option("--horizon", horizon);

  auto* verify = app.add_subcommand("verify", "run an acceptance suite");
  verify->add_option("--suite", suite, "suite name");
  verify->add_option("--checkpoint", checkpoint, "stage checkpoint directory");

  auto* oracle = app.add_subcommand("oracle", "enumeration identities");
  oracle->add_option("--law", law);
  oracle->add_option("--n-max", n_max, "largest size (<= 12, 9 for the trunk identity)");

  CLI11_PARSE(app, argc, argv);

  try {
    json cfg = load_config(g);
    if (law) cfg["law"] = law_spec(*law);
    merge(cfg, "n", n);
    merge(cfg, "horizon", horizon);

    if (sample->parsed()) {
      if (exact) cfg["mode"] = "exact";
      if (at_least) cfg["mode"] = "at-least";
      RandomSource src(seed_of(cfg, g), 0);
      const PlaneTree t = tree_from(cfg, src);
      const fs::path file = out_dir(g) / "tree.dsv";
      save_dsv1(file, t);
      emit("sample-tree", cfg, {{"file", file.string()}, {"vertices", t.size()}});
      return kOk;
    }
    if (loop->parsed()) {
      merge(cfg, "tree", tree_file);
      if (bar) cfg["kind"] = "loop-bar";
      RandomSource src(seed_of(cfg, g), 0);
      const PlaneTree t = tree_from(cfg, src);
      const bool is_bar = cfg.value("kind", std::string("loop")) == "loop-bar";
      const LoopGraph lg = is_bar ? build_loopbar(t) : build_loop(t);
      const fs::path dir = out_dir(g);
      std::ofstream edges(dir / "edges.csv");
      write_edge_csv(edges, lg);
      std::ofstream prof(dir / "profile.csv");
      prof << "i,hcirc\n";
      const auto hc = profile_hcirc(lg);
      for (std::size_t i = 0; i < hc.size(); ++i) prof << i << ',' << hc[i] << '\n';
      const Cycle c = largest_cycle(lg);
      emit("loop", cfg,
           {{"vertices", lg.vertex_count},
            {"simple_edges", lg.simple_edge_count()},
            {"largest_cycle", c.length},
            {"cycle_vertex", c.vertex},
            {"files", {(dir / "edges.csv").string(), (dir / "profile.csv").string()}}});
      return kOk;
    }
    if (trunk->parsed()) {
      merge(cfg, "tree", tree_file);
      merge(cfg, "vertex", vertex);
      merge(cfg, "h", h);
      RandomSource src(seed_of(cfg, g), 0);
      TrunkSkeleton s;
      if (cfg.contains("tree")) {
        const PlaneTree t = load_dsv1(cfg["tree"].get<std::string>());
        s = trunk_of(t, static_cast<Index>(cfg.at("vertex").get<std::int64_t>()));
      } else {
        s = sample_trunk_star(OffspringLaw::from_json(cfg.at("law")),
                              cfg.at("h").get<std::int64_t>(), src);
      }
      json out = {{"child_counts", s.child_counts},
                  {"spine_pos", s.spine_pos},
                  {"leaf_count", s.leaf_count()}};
      std::ofstream(out_dir(g) / "trunk.json") << out.dump() << '\n';
      emit("trunk", cfg, out);
      return kOk;
    }
    if (walk->parsed()) {
      if (conditioned) cfg["conditioned"] = true;
      merge(cfg, "tail", jmax);
      RandomSource src(seed_of(cfg, g), 0);
      const WalkLaw w = WalkLaw::from_json(cfg.at("law"));
      const auto nn = cfg.value("n", std::int64_t{1});
      const auto hor = cfg.value("horizon", nn);
      const fs::path dir = out_dir(g);
      WalkPath p;
      if (cfg.value("conditioned", false)) {
        ConditionedWalkOptions opts;
        std::optional<SurvivalTable> table;
        if (w.skip_free() && nn >= 2 && nn - 1 <= SurvivalTable::kMaxRows) {
          table.emplace(w, nn - 1);
          opts.method = ConditioningMethod::kSurvivalTable;
          opts.table = &*table;
        }
        p = sample_conditioned_walk(w, nn, hor, src, opts);
      } else {
        p = sample_free_walk(w, hor, src);
      }
      std::ofstream csv(dir / "walk.csv");
      csv << "i,w\n";
      for (std::size_t i = 0; i < p.values.size(); ++i) csv << i << ',' << p.values[i] << '\n';
      json out = {{"zeta", p.zeta}, {"file", (dir / "walk.csv").string()}};
      if (cfg.contains("tail")) {
        const auto jm = cfg["tail"].get<std::int64_t>();
        ZetaTail t;
        if (w.skip_free() && jm >= 2) {
          t = zeta_tail_from_survival(SurvivalTable(w, jm - 1), jm);
        } else if (w.finite_support()) {
          t = zeta_tail_dp(w, jm, 64 * jm);
        } else {
          t = zeta_tail_monte_carlo(w, jm, cfg.value("tail_paths", std::int64_t{1000000}),
                                    src.derive(1));
        }
        std::ofstream tf(dir / "zeta_tail.csv");
        write_tail_csv(tf, t);
        out["tail_file"] = (dir / "zeta_tail.csv").string();
        out["tail_method"] = t.method;
      }
      emit("walk", cfg, out);
      return kOk;
    }
    if (couple->parsed()) {
      RandomSource src(seed_of(cfg, g), 0);
      const WalkLaw w = WalkLaw::from_json(cfg.at("law"));
      const auto nn = cfg.at("n").get<std::int64_t>();
      const auto hor = cfg.value("horizon", nn);
      const auto rows = cfg.value("table_rows", std::int64_t{4000});
      std::optional<SurvivalTable> table;
      ZetaTail tail;
      if (w.skip_free()) {
        table.emplace(w, rows);
        tail = zeta_tail_from_survival(*table, rows + 1);
      } else {
        tail = zeta_tail_dp(w, rows, 64 * rows);
      }
      const CoupledZSampler z(w, &tail, table ? &*table : nullptr);
      std::int64_t index = 0;
      const WalkPath p = z.sample(nn, hor, src, &index);
      const fs::path dir = out_dir(g);
      std::ofstream csv(dir / "coupled.csv");
      csv << "i,z\n";
      for (std::size_t i = 0; i < p.values.size(); ++i) csv << i << ',' << p.values[i] << '\n';
      json out = {{"index", index},
                  {"zeta", p.zeta},
                  {"index_truncation", z.index_truncation()},
                  {"file", (dir / "coupled.csv").string()}};
      if (hor >= nn) out["good_event"] = check_Gn(p, nn, w.gamma());
      emit("couple", cfg, out);
      return kOk;
    }
    if (verify->parsed()) {
      std::string name = suite ? *suite : cfg.value("suite", std::string());
      if (name.empty()) throw Error(ErrorKind::kParse, "verify needs --suite");
      json full = default_suite_config(name);
      for (const auto& [k, v] : cfg.items()) full[k] = v;
      full["suite"] = name;
      if (g.seed) full["seed"] = *g.seed;
      RunOptions opts;
      opts.threads = g.threads;
      if (checkpoint) opts.checkpoint_dir = *checkpoint;
      opts.progress = [](const std::string& s) { std::cerr << "[run] " << s << '\n'; };
      const SuiteResult r = run_suite(full, opts);
      const fs::path file = out_dir(g) / (name + ".jsonl");
      std::ofstream os(file);
      write_jsonl(os, r);
      for (const Record& rec : r.records) {
        if (rec.comparison != "info") {
          std::cerr << (rec.pass ? "ok   " : "FAIL ") << rec.experiment << ' ' << rec.law
                    << ' ' << rec.statistic << " = " << rec.value << ' ' << rec.comparison
                    << ' ' << rec.threshold << '\n';
        }
      }
      emit("verify", full,
           {{"suite", name}, {"pass", r.pass()}, {"file", file.string()},
            {"records", r.records.size()}});
      return r.pass() ? kOk : kThresholdFailed;
    }
    if (oracle->parsed()) {
      merge(cfg, "n_max", n_max);
      const OffspringLaw lw = OffspringLaw::from_json(cfg.at("law"));
      const auto top = cfg.value("n_max", std::int64_t{9});
      const double tol = cfg.value("tolerance", 1e-10);
      const fs::path file = out_dir(g) / "oracle.jsonl";
      std::ofstream os(file);
      bool pass = true;
      for (std::int64_t k = 1; k <= top; ++k) {
        const IdentityCheck kc = kemperman_check(lw, k);
        json rec = {{"n", k}, {"kemperman_lhs", kc.lhs}, {"kemperman_rhs", kc.rhs}};
        pass = pass && kc.discrepancy() <= tol;
        if (k <= 9 && size_feasible(lw, k)) {
          const BiasCheck b = bias_identity_check(lw, k);
          rec["trunk_identity_discrepancy"] = b.max_discrepancy;
          pass = pass && b.max_discrepancy <= tol;
        }
        rec["config_hash"] = config_hash(cfg);
        rec["version"] = kVersion;
        os << rec.dump() << '\n';
      }
      emit("oracle", cfg, {{"pass", pass}, {"file", file.string()}});
      return pass ? kOk : kThresholdFailed;
    }
  } catch (const Error& e) {
    std::cerr << "looplab: " << e.what() << '\n';
    return e.kind() == ErrorKind::kParse ? kUsage : kModuleError;
  } catch (const json::exception& e) {
    std::cerr << "looplab: config: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "looplab: " << e.what() << '\n';
    return kModuleError;
  }
  return kUsage;
}
