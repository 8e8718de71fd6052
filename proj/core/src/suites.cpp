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

#include "looplab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "looplab/bgw.hpp"
#include "looplab/constants.hpp"
#include "looplab/error.hpp"
#include "looplab/experiments.hpp"
#include "looplab/identities.hpp"
#include "looplab/loop_graph.hpp"
#include "looplab/parallel.hpp"
#include "looplab/stats.hpp"
#include "looplab/walk.hpp"

namespace looplab {

using nlohmann::json;

nlohmann::json record_json(const Record& r, const std::string& config_hash) {
  json j = {{"experiment", r.experiment},
            {"law", r.law},
            {"n", r.n},
            {"seed", r.seed},
            {"statistic", r.statistic},
            {"value", r.value},
            {"comparison", r.comparison},
            {"pass", r.pass},
            {"config_hash", config_hash},
            {"version", kVersion}};
  j["threshold"] = r.comparison == "info" ? json(nullptr) : json(r.threshold);
  return j;
}

Record record_from_json(const nlohmann::json& j) {
  Record r;
  r.experiment = j.at("experiment").get<std::string>();
  r.law = j.at("law").get<std::string>();
  r.n = j.at("n").get<std::int64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.statistic = j.at("statistic").get<std::string>();
  r.value = j.at("value").get<double>();
  r.comparison = j.at("comparison").get<std::string>();
  if (!j.at("threshold").is_null()) r.threshold = j.at("threshold").get<double>();
  r.pass = j.at("pass").get<bool>();
  return r;
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string config_hash(const nlohmann::json& config) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(config.dump())));
  return buf;
}

nlohmann::json parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::kParse, "config must be an object");
  if (j.contains("suite") && !j["suite"].is_string()) {
    throw Error(ErrorKind::kParse, "config: \"suite\" must be a string");
  }
  if (j.contains("seed") && !j["seed"].is_number_unsigned()) {
    throw Error(ErrorKind::kParse, "config: \"seed\" must be an unsigned integer");
  }
  return j;
}

bool SuiteResult::pass() const {
  return std::all_of(records.begin(), records.end(),
                     [](const Record& r) { return r.pass; });
}

void write_jsonl(std::ostream& os, const SuiteResult& r) {
  for (const Record& rec : r.records) {
    os << record_json(rec, r.config_hash).dump() << '\n';
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "exact-identities", "structural", "constants",   "local-limit",
      "condensation",     "crt",        "coupling",    "first-passage",
      "height-law",       "determinism"};
  return names;
}

nlohmann::json default_suite_config(const std::string& suite) {
  if (suite == "exact-identities") {
    return {{"suite", suite},
            {"seed", 1u},
            {"kemperman", {{"laws", {"geometric-truncated", "binary"}},
                           {"n_max", 10},
                           {"tolerance", 1e-12}}},
            {"bias", {{"laws", {"geometric-truncated", "binary", "critical-3pt"}},
                      {"n_max", 9},
                      {"tolerance", 1e-10}}},
            {"trunk_leaf", {{"laws", {"geometric", "binary"}},
                            {"draws", 100000},
                            {"h_max", 64}}}};
  }
  if (suite == "structural") {
    return {{"suite", suite},
            {"seed", 2u},
            {"laws", {"geometric", "binary", "critical-3pt"}},
            {"trees", 10000},
            {"n_max", 1000}};
  }
  if (suite == "constants") {
    return {{"suite", suite},
            {"seed", 3u},
            {"draws", 10000000},
            {"se_multiple", 3.0},
            {"tolerance", 1e-15},
            {"c_mu", {{"binary", 1.0}, {"geometric", 4.0 / 3.0}}},
            {"c_bar_mu", {{"binary", 0.5}}}};
  }
  if (suite == "local-limit") {
    return {{"suite", suite},
            {"seed", 4u},
            {"law", "geometric"},
            {"ladder", {500, 2000, 8000}},
            {"n", 5000},
            {"threshold", 0.02}};
  }
  if (suite == "condensation") {
    return {{"suite", suite},
            {"seed", 5u},
            {"law", "heavy"},
            {"n", 10000},
            {"replicates", 2000},
            {"thresholds", {{"ks_maxdeg", 0.05},
                            {"median_second", 0.05},
                            {"median_gh", 0.1}}}};
  }
  if (suite == "crt") {
    return {{"suite", suite},
            {"seed", 6u},
            {"laws", {"binary", "geometric"}},
            {"n", 100000},
            {"replicates", 500},
            {"ratio_tolerance", 0.05},
            {"coupling", {{"quantile", 0.9}, {"threshold", 0.15}}},
            {"distortion", {{"ladder", {1000, 10000, 100000}},
                            {"trees", 20},
                            {"pair_budget", 1024},
                            {"sources", 16},
                            {"quantile", 0.9}}}};
  }
  if (suite == "coupling") {
    return {{"suite", suite},
            {"seed", 7u},
            {"law", "heavy"},
            {"ladder", {50, 200, 800}},
            {"window", 10},
            {"samples", 4000000},
            {"bin_min", -1},
            {"bin_cap", 0},
            {"table_rows", 4000},
            {"final_threshold", 0.1},
            {"gn_paths", 20000},
            {"gn_threshold", 0.9},
            {"noise_floor", true}};
  }
  if (suite == "first-passage") {
    return {{"suite", suite},
            {"seed", 8u},
            {"law", "heavy"},
            {"n", 2000},
            {"replicates", 2000},
            {"threshold", 0.05}};
  }
  if (suite == "height-law") {
    return {{"suite", suite},
            {"seed", 9u},
            {"law", "geometric"},
            {"n", 100000},
            {"replicates", 2000},
            {"ks_threshold", 0.05},
            {"trunk", {{"ladder", {1000, 10000, 100000}},
                       {"t", 1.0},
                       {"window", 5},
                       {"x_cap", 3},
                       {"trees", 2000}}}};
  }
  if (suite == "determinism") {
    json names = json::array();
    for (const auto& s : suite_names()) {
      if (s != "determinism") names.push_back(s);
    }
    return {{"suite", suite}, {"seed", 10u}, {"suites", names}};
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + suite + "'");
}

namespace {

class Context {
 public:
  Context(const json& cfg, const RunOptions& opts, SuiteResult& out)
      : cfg_(cfg), opts_(opts), out_(out) {
    seed_ = cfg.value("seed", std::uint64_t{0});
  }

  const json& cfg() const { return cfg_; }
  int threads() const { return opts_.threads; }
  std::uint64_t seed() const { return seed_; }

  // Streams are keyed by stage name so that restored and recomputed stages
  // see the same randomness.
  RandomSource source(const std::string& stage) const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : stage) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    return RandomSource(seed_, h);
  }

  template <class F>
  void stage(const std::string& name, F&& fn) {
    if (opts_.progress) opts_.progress(out_.suite + ": " + name);
    std::filesystem::path file;
    if (!opts_.checkpoint_dir.empty()) {
      file = opts_.checkpoint_dir / (out_.config_hash + "." + name + ".jsonl");
      std::ifstream in(file);
      if (in) {
        std::string line;
        while (std::getline(in, line)) {
          if (!line.empty()) out_.records.push_back(record_from_json(json::parse(line)));
        }
        return;
      }
    }
    const std::size_t first = out_.records.size();
    current_ = name;
    fn();
    if (!file.empty()) {
      std::filesystem::create_directories(opts_.checkpoint_dir);
      const std::filesystem::path tmp = file.string() + ".tmp";
      {
        std::ofstream os(tmp);
        for (std::size_t i = first; i < out_.records.size(); ++i) {
          os << record_json(out_.records[i], out_.config_hash).dump() << '\n';
        }
      }
      std::filesystem::rename(tmp, file);
    }
  }

  void info(const std::string& law, std::int64_t n, const std::string& stat,
            double value) {
    add(law, n, stat, value, "info", 0.0);
  }
  void check(const std::string& law, std::int64_t n, const std::string& stat,
             double value, const std::string& cmp, double threshold) {
    add(law, n, stat, value, cmp, threshold);
  }

 private:
  void add(const std::string& law, std::int64_t n, const std::string& stat,
           double value, const std::string& cmp, double threshold) {
    Record r;
    r.experiment = current_;
    r.law = law;
    r.n = n;
    r.seed = seed_;
    r.statistic = stat;
    r.value = value;
    r.comparison = cmp;
    r.threshold = threshold;
    if (cmp == "<=") {
      r.pass = value <= threshold;
    } else if (cmp == ">=") {
      r.pass = value >= threshold;
    } else if (cmp == "==") {
      r.pass = value == threshold;
    } else {
      r.pass = true;
    }
    out_.records.push_back(std::move(r));
  }

  const json& cfg_;
  const RunOptions& opts_;
  SuiteResult& out_;
  std::uint64_t seed_ = 0;
  std::string current_;
};

OffspringLaw law_of(const json& spec) { return OffspringLaw::from_json(spec); }

std::string law_name(const json& spec) {
  return spec.is_string() ? spec.get<std::string>() : spec.dump();
}

double as_flag(bool b) { return b ? 1.0 : 0.0; }

void exact_identities(Context& ctx) {
  const json& cfg = ctx.cfg();
  const json& k = cfg.at("kemperman");
  ctx.stage("kemperman", [&] {
    for (const json& spec : k.at("laws")) {
      const OffspringLaw law = law_of(spec);
      double worst = 0.0;
      for (std::int64_t n = 1; n <= k.at("n_max").get<std::int64_t>(); ++n) {
        worst = std::max(worst, kemperman_check(law, n).discrepancy());
      }
      ctx.check(law_name(spec), k.at("n_max"), "max_discrepancy", worst, "<=",
                k.at("tolerance"));
    }
  });
  const json& b = cfg.at("bias");
  ctx.stage("bias-identity", [&] {
    for (const json& spec : b.at("laws")) {
      const OffspringLaw law = law_of(spec);
      double worst = 0.0, root = 0.0;
      std::int64_t skeletons = 0, skipped = 0;
      for (std::int64_t n = 1; n <= b.at("n_max").get<std::int64_t>(); ++n) {
        // Conditioning on |T| = n needs a feasible size.
        if (!size_feasible(law, n)) {
          ++skipped;
          continue;
        }
        const BiasCheck c = bias_identity_check(law, n);
        worst = std::max(worst, c.max_discrepancy);
        if (c.root_mass > 0.0) root = std::max(root, std::fabs(c.root_mass - 1.0 / n));
        skeletons += c.skeletons;
      }
      ctx.check(law_name(spec), b.at("n_max"), "max_discrepancy", worst, "<=",
                b.at("tolerance"));
      ctx.check(law_name(spec), b.at("n_max"), "root_mass_error", root, "<=",
                b.at("tolerance"));
      ctx.info(law_name(spec), b.at("n_max"), "skeletons", static_cast<double>(skeletons));
      ctx.info(law_name(spec), b.at("n_max"), "infeasible_sizes_skipped",
               static_cast<double>(skipped));
    }
  });
  const json& t = cfg.at("trunk_leaf");
  ctx.stage("trunk-leaf", [&] {
    RandomSource src = ctx.source("trunk-leaf");
    for (const json& spec : t.at("laws")) {
      const OffspringLaw law = law_of(spec);
      const TrunkStarSampler star(law);
      const auto draws = t.at("draws").get<std::int64_t>();
      const auto h_max = t.at("h_max").get<std::uint64_t>();
      std::int64_t bad = 0;
      for (std::int64_t i = 0; i < draws; ++i) {
        const auto h = static_cast<std::int64_t>(1 + src.below(h_max));
        const TrunkSkeleton s = star.sample(h, src);
        std::int64_t w = 0;
        for (Index x : s.child_counts) w += x;
        if (s.to_tree().leaf_count() != w - h + 1) ++bad;
      }
      ctx.check(law_name(spec), draws, "violations", static_cast<double>(bad), "==", 0.0);
    }
  });
}

struct StructuralCounts {
  std::int64_t ancestor = 0;
  std::int64_t mrca = 0;
  std::int64_t contour = 0;
  std::int64_t ancestor_checks = 0;
};

StructuralCounts structural_tree(const PlaneTree& t, RandomSource& src) {
  StructuralCounts c;
  const CodingPaths p = coding_paths(t);
  const LoopGraph g = build_loop(t);
  const std::vector<Index> hc = profile_hcirc(g);
  const std::vector<Index> depth = t.depths();
  const auto n = static_cast<std::uint64_t>(t.size());
  const auto j = static_cast<Index>(src.below(n));
  for (Index i = j; i != kNoParent; i = t.parent(i)) {
    const std::int64_t dh = hc[j] - hc[i];
    const std::int64_t bound =
        (p.lukasiewicz[j] - p.lukasiewicz[i]) + (p.height[j] - p.height[i]);
    if (dh < 0 || dh > bound) ++c.ancestor;
    ++c.ancestor_checks;
  }
  const auto i = static_cast<Index>(src.below(n));
  const Index m = mrca(t, depth, i, j);
  const std::int64_t d = dist(g, g.vertex_of[i], g.vertex_of[j]);
  if (std::abs(d - (hc[i] + hc[j] - 2 * hc[m])) > t.degree(m)) ++c.mrca;
  const std::vector<Index> cv = contour_vertices(t);
  std::int64_t prev = -1;
  for (Index v = 0; v < t.size(); ++v) {
    const std::int64_t b = lex_to_contour_index(p, v);
    const bool first_visit = v == 0 ? b == 0 : cv[b - 1] == t.parent(v);
    if (b <= prev || cv[b] != v || !first_visit) ++c.contour;
    prev = b;
  }
  return c;
}

void structural(Context& ctx) {
  const json& cfg = ctx.cfg();
  for (const json& spec : cfg.at("laws")) {
    const std::string name = law_name(spec);
    ctx.stage("structural-" + name, [&] {
      const OffspringLaw law = law_of(spec);
      const auto trees = cfg.at("trees").get<std::int64_t>();
      const auto n_max = cfg.at("n_max").get<std::uint64_t>();
      const auto counts = run_replicates<StructuralCounts>(
          trees, ctx.source("structural-" + name), ctx.threads(),
          [&](std::int64_t, RandomSource& s) {
            std::int64_t n = 1 + static_cast<std::int64_t>(s.below(n_max));
            n = nearest_feasible_size(law, n);
            return structural_tree(sample_bgw_exact_n(law, n, s), s);
          });
      StructuralCounts total;
      for (const auto& c : counts) {
        total.ancestor += c.ancestor;
        total.mrca += c.mrca;
        total.contour += c.contour;
        total.ancestor_checks += c.ancestor_checks;
      }
      ctx.check(name, trees, "ancestor_bound_violations",
                static_cast<double>(total.ancestor), "==", 0.0);
      ctx.check(name, trees, "mrca_bound_violations",
                static_cast<double>(total.mrca), "==", 0.0);
      ctx.check(name, trees, "contour_index_violations",
                static_cast<double>(total.contour), "==", 0.0);
      ctx.info(name, trees, "ancestor_pairs_checked",
               static_cast<double>(total.ancestor_checks));
    });
  }
}

void constants(Context& ctx) {
  const json& cfg = ctx.cfg();
  const auto draws = cfg.at("draws").get<std::int64_t>();
  const double k = cfg.at("se_multiple");
  auto z = [](const MeanEstimate& m, double exact) {
    const double gap = std::fabs(m.mean - exact);
    if (m.se == 0.0) return gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    return gap / m.se;
  };
  ctx.stage("c-mu", [&] {
    for (const auto& [name, exact] : cfg.at("c_mu").items()) {
      const OffspringLaw law = OffspringLaw::preset(name);
      const double c = c_mu(law);
      ctx.check(name, 0, "formula_error", std::fabs(c - exact.get<double>()), "<=",
                cfg.at("tolerance"));
      const MeanEstimate m = c_mu_oracle(law, draws, ctx.source("c-mu-" + name));
      ctx.info(name, draws, "oracle_mean", m.mean);
      ctx.info(name, draws, "oracle_se", m.se);
      ctx.check(name, draws, "oracle_z", z(m, c), "<=", k);
    }
  });
  ctx.stage("c-bar-mu", [&] {
    for (const auto& [name, exact] : cfg.at("c_bar_mu").items()) {
      const OffspringLaw law = OffspringLaw::preset(name);
      const double c = c_bar_mu(law);
      ctx.check(name, 0, "formula_error", std::fabs(c - exact.get<double>()), "<=",
                cfg.at("tolerance"));
      const MeanEstimate m = c_bar_mu_oracle(law, draws, ctx.source("c-bar-mu-" + name));
      ctx.info(name, draws, "oracle_mean", m.mean);
      ctx.info(name, draws, "oracle_se", m.se);
      ctx.check(name, draws, "oracle_z", z(m, c), "<=", k);
    }
  });
}

void local_limit(Context& ctx) {
  const json& cfg = ctx.cfg();
  const std::string name = law_name(cfg.at("law"));
  const OffspringLaw law = law_of(cfg.at("law"));
  ctx.stage("llt", [&] {
    std::vector<double> ladder;
    for (const json& n : cfg.at("ladder")) {
      ladder.push_back(llt_check(law, n.get<std::int64_t>()));
      ctx.info(name, n, "sup_discrepancy", ladder.back());
    }
    ctx.check(name, 0, "strictly_decreasing", as_flag(strictly_decreasing(ladder)),
              "==", 1.0);
    ctx.check(name, cfg.at("n"), "sup_discrepancy",
              llt_check(law, cfg.at("n").get<std::int64_t>()), "<=",
              cfg.at("threshold"));
  });
}

void condensation(Context& ctx) {
  const json& cfg = ctx.cfg();
  const std::string name = law_name(cfg.at("law"));
  const OffspringLaw law = law_of(cfg.at("law"));
  const auto n = cfg.at("n").get<std::int64_t>();
  const json& th = cfg.at("thresholds");
  ctx.stage("condensation", [&] {
    const CondensationStats s =
        condensation_stats(law, n, cfg.at("replicates"), ctx.source("condensation"),
                           ctx.threads());
    const double gamma = 1.0 - law.mean();
    const double beta = law.tail_exponent();
    std::vector<double> maxdeg(s.maxdeg.values().begin(), s.maxdeg.values().end());
    const double ks = ks_one_sample(maxdeg, [&](double x) {
      return x < gamma ? 0.0 : 1.0 - std::pow(gamma / x, beta);
    });
    ctx.check(name, n, "ks_maxdeg_vs_J", ks, "<=", th.at("ks_maxdeg"));
    ctx.info(name, n, "median_maxdeg", s.maxdeg.median());
    ctx.check(name, n, "median_second_component", s.second.median(), "<=",
              th.at("median_second"));
    ctx.check(name, n, "median_gh_to_circle", s.gh_bound.median(), "<=",
              th.at("median_gh"));
  });
}

void crt(Context& ctx) {
  const json& cfg = ctx.cfg();
  for (const json& spec : cfg.at("laws")) {
    const std::string name = law_name(spec);
    const OffspringLaw law = law_of(spec);
    const double c = c_mu(law);
    ctx.stage("spinal-" + name, [&] {
      const std::int64_t n = nearest_feasible_size(law, cfg.at("n"));
      const SpinalStats s = spinal_ratio_stats(law, n, cfg.at("replicates"),
                                               ctx.source("spinal-" + name),
                                               ctx.threads());
      const double med = s.ratios.median();
      ctx.info(name, n, "median_spinal_ratio", med);
      ctx.info(name, n, "c_mu", c);
      ctx.info(name, n, "two_c_mu_over_sigma2", 2.0 * c / law.variance());
      ctx.check(name, n, "spinal_ratio_relative_error", std::fabs(med / c - 1.0),
                "<=", cfg.at("ratio_tolerance"));
      ctx.info(name, n, "zero_r_draws", static_cast<double>(s.zero_r));
      ctx.check(name, n, "r_vs_lukasiewicz_mismatches",
                static_cast<double>(s.r_mismatches), "==", 0.0);
      const json& cp = cfg.at("coupling");
      const double q = EmpiricalLaw::from_samples(s.coupling).quantile(cp.at("quantile"));
      ctx.check(name, n, "profile_coupling_quantile", q, "<=", cp.at("threshold"));
    });
    ctx.stage("distortion-" + name, [&] {
      const json& d = cfg.at("distortion");
      std::vector<double> ladder;
      for (const json& nj : d.at("ladder")) {
        const std::int64_t n = nearest_feasible_size(law, nj.get<std::int64_t>());
        const auto samples = run_replicates<DistortionSample>(
            d.at("trees"), ctx.source("distortion-" + name + "-" + std::to_string(n)),
            ctx.threads(), [&](std::int64_t, RandomSource& s) {
              return loop_vs_scaled_tree_distortion(law, n, d.at("pair_budget"), s,
                                                    d.at("sources"));
            });
        std::vector<double> all;
        double diameter = 0.0;
        for (const auto& s : samples) {
          all.insert(all.end(), s.values.begin(), s.values.end());
          diameter += s.loop_diameter;
        }
        diameter /= static_cast<double>(samples.size());
        ladder.push_back(EmpiricalLaw::from_samples(all).quantile(d.at("quantile")));
        ctx.info(name, n, "distortion_quantile", ladder.back());
        ctx.info(name, n, "mean_loop_diameter_over_bn", diameter);
      }
      ctx.check(name, 0, "distortion_strictly_decreasing",
                as_flag(strictly_decreasing(ladder)), "==", 1.0);
    });
  }
}

void coupling(Context& ctx) {
  const json& cfg = ctx.cfg();
  const std::string name = law_name(cfg.at("law"));
  const WalkLaw walk = WalkLaw::from_offspring(law_of(cfg.at("law")));
  const SurvivalTable table(walk, cfg.at("table_rows"));
  const ZetaTail tail = zeta_tail_from_survival(table, table.max_steps() + 1);
  const CoupledZSampler z(walk, &tail, &table);
  const auto k = cfg.at("window").get<std::int64_t>();
  const BinScheme bins{k, cfg.at("bin_min"), cfg.at("bin_cap")};
  const auto samples = cfg.at("samples").get<std::int64_t>();
  ctx.stage("windowed-tv", [&] {
    ctx.info(name, 0, "index_law_truncation", z.index_truncation());
    std::vector<double> ladder;
    std::int64_t last = 0;
    for (const json& nj : cfg.at("ladder")) {
      const auto n = nj.get<std::int64_t>();
      last = n;
      IncrementSampler w = [&](RandomSource& s, std::vector<std::int64_t>& out) {
        WalkPath p;
        p.values.push_back(0);
        table.extend_conditioned(p, n - 1, std::min(k, n - 1), s);
        while (static_cast<std::int64_t>(p.values.size()) <= k) {
          p.values.push_back(p.values.back() + walk.sample(s));
        }
        for (std::int64_t i = 1; i <= k; ++i) out.push_back(p.increment(i));
      };
      IncrementSampler zs = [&](RandomSource& s, std::vector<std::int64_t>& out) {
        const WalkPath p = z.sample(n, k, s);
        for (std::int64_t i = 1; i <= k; ++i) out.push_back(p.increment(i));
      };
      const std::string tag = std::to_string(n);
      ladder.push_back(windowed_tv(w, zs, bins, samples, ctx.source("w-" + tag),
                                   ctx.source("z-" + tag)));
      ctx.info(name, n, "windowed_tv", ladder.back());
      if (cfg.value("noise_floor", false)) {
        ctx.info(name, n, "windowed_tv_same_law",
                 windowed_tv(zs, zs, bins, samples, ctx.source("z1-" + tag),
                             ctx.source("z2-" + tag)));
      }
    }
    ctx.check(name, 0, "windowed_tv_strictly_decreasing",
              as_flag(strictly_decreasing(ladder)), "==", 1.0);
    ctx.check(name, last, "windowed_tv", ladder.back(), "<=",
              cfg.at("final_threshold"));
  });
  ctx.stage("good-event", [&] {
    const auto paths = cfg.at("gn_paths").get<std::int64_t>();
    double freq = 0.0;
    std::int64_t last = 0;
    for (const json& nj : cfg.at("ladder")) {
      const auto n = nj.get<std::int64_t>();
      last = n;
      RandomSource s = ctx.source("gn-" + std::to_string(n));
      std::int64_t good = 0;
      for (std::int64_t i = 0; i < paths; ++i) {
        good += check_Gn(z.sample(n, n, s), n, walk.gamma()) ? 1 : 0;
      }
      freq = static_cast<double>(good) / static_cast<double>(paths);
      ctx.info(name, n, "good_event_frequency", freq);
    }
    ctx.check(name, last, "good_event_frequency", freq, ">=", cfg.at("gn_threshold"));
  });
}

void first_passage(Context& ctx) {
  const json& cfg = ctx.cfg();
  const std::string name = law_name(cfg.at("law"));
  const OffspringLaw law = law_of(cfg.at("law"));
  const WalkLaw walk = WalkLaw::from_offspring(law);
  const auto n = cfg.at("n").get<std::int64_t>();
  ctx.stage("first-passage", [&] {
    const SurvivalTable table(walk, n);
    ConditionedWalkOptions opts;
    opts.method = ConditioningMethod::kSurvivalTable;
    opts.table = &table;
    const auto z = run_replicates<double>(
        cfg.at("replicates"), ctx.source("first-passage"), ctx.threads(),
        [&](std::int64_t, RandomSource& s) {
          return first_passage_scaling(walk, n, s, opts).zeta_over_n;
        });
    const double beta = walk.tail_exponent();
    // J / gamma has P(> x) = x^{-beta} on x >= 1.
    const double ks = ks_one_sample(
        z, [&](double x) { return x < 1.0 ? 0.0 : 1.0 - std::pow(x, -beta); });
    ctx.check(name, n, "ks_zeta_over_n_vs_J_over_gamma", ks, "<=", cfg.at("threshold"));
  });
}

void height_law(Context& ctx) {
  const json& cfg = ctx.cfg();
  const std::string name = law_name(cfg.at("law"));
  const OffspringLaw law = law_of(cfg.at("law"));
  ctx.stage("height-law", [&] {
    const std::int64_t n = nearest_feasible_size(law, cfg.at("n"));
    const HeightLaw h =
        height_law_check(law, n, cfg.at("replicates"), ctx.source("height"), ctx.threads());
    ctx.check(name, n, "ks_height_vs_R", h.ks, "<=", cfg.at("ks_threshold"));
  });
  ctx.stage("trunk-tv", [&] {
    const json& t = cfg.at("trunk");
    const TrunkBins bins{t.at("window"), t.at("x_cap")};
    std::vector<double> ladder;
    for (const json& nj : t.at("ladder")) {
      const std::int64_t n = nearest_feasible_size(law, nj.get<std::int64_t>());
      const TrunkTv r = trunk_tv_check(law, n, t.at("t"), bins, t.at("trees"),
                                       ctx.source("trunk-" + std::to_string(n)),
                                       ctx.threads());
      ladder.push_back(r.tv);
      ctx.info(name, n, "trunk_tv", r.tv);
      ctx.info(name, n, "height", static_cast<double>(r.height));
      ctx.info(name, n, "excluded_trees", static_cast<double>(r.excluded));
    }
    ctx.check(name, 0, "trunk_tv_strictly_decreasing",
              as_flag(strictly_decreasing(ladder)), "==", 1.0);
  });
}

void determinism(Context& ctx, const RunOptions& opts) {
  const json& cfg = ctx.cfg();
  for (const json& s : cfg.at("suites")) {
    const std::string suite = s.get<std::string>();
    ctx.stage("rerun-" + suite, [&] {
      const json sub = default_suite_config(suite);
      RunOptions one;
      one.threads = 1;
      one.progress = opts.progress;
      RunOptions many = one;
      many.threads = std::max(2, opts.threads);
      std::ostringstream a, b;
      write_jsonl(a, run_suite(sub, one));
      write_jsonl(b, run_suite(sub, many));
      ctx.check(suite, 0, "byte_identical_reruns", as_flag(a.str() == b.str()), "==",
                1.0);
      ctx.info(suite, 0, "artifact_bytes", static_cast<double>(a.str().size()));
    });
  }
}

}  // namespace

SuiteResult run_suite(const nlohmann::json& config, const RunOptions& opts) {
  SuiteResult out;
  if (!config.contains("suite") || !config["suite"].is_string()) {
    throw Error(ErrorKind::kParse, "config needs a \"suite\" name");
  }
  out.suite = config["suite"].get<std::string>();
  out.config_hash = config_hash(config);
  Context ctx(config, opts, out);
  try {
    if (out.suite == "exact-identities") {
      exact_identities(ctx);
    } else if (out.suite == "structural") {
      structural(ctx);
    } else if (out.suite == "constants") {
      constants(ctx);
    } else if (out.suite == "local-limit") {
      local_limit(ctx);
    } else if (out.suite == "condensation") {
      condensation(ctx);
    } else if (out.suite == "crt") {
      crt(ctx);
    } else if (out.suite == "coupling") {
      coupling(ctx);
    } else if (out.suite == "first-passage") {
      first_passage(ctx);
    } else if (out.suite == "height-law") {
      height_law(ctx);
    } else if (out.suite == "determinism") {
      determinism(ctx, opts);
    } else {
      throw Error(ErrorKind::kInvalidArgument, "unknown suite '" + out.suite + "'");
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, out.suite + " config: " + e.what());
  }
  return out;
}

}  // namespace looplab
