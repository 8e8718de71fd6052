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

#include "looplab/offspring_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "looplab/error.hpp"

namespace looplab {

namespace {

constexpr std::int64_t kPowerHead = 4096;

nlohmann::json number_or_inf(double x) {
  if (std::isinf(x)) return "inf";
  return x;
}

std::string normalize_kind(std::string s) {
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

}  // namespace

OffspringLaw::OffspringLaw(LawKind kind, std::string name, DiscreteLaw law,
                           nlohmann::json params)
    : kind_(kind),
      name_(std::move(name)),
      law_(std::move(law)),
      params_(std::move(params)) {
  mean_ = law_.mean();
  const double m2 = law_.second_moment();
  variance_ = std::isinf(m2) ? std::numeric_limits<double>::infinity()
                             : m2 - mean_ * mean_;
  validate();
}

void OffspringLaw::validate() const {
  if (std::fabs(law_.total_mass() - 1.0) > kMassTolerance) {
    throw Error(ErrorKind::kInvalidArgument,
                "offspring law does not sum to 1 (sum = " +
                    std::to_string(law_.total_mass()) + ")");
  }
  if (!(law_.pmf(0) > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "offspring law needs mu(0) > 0");
  }
  if (!(law_.pmf(0) + law_.pmf(1) < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "offspring law needs mu(0) + mu(1) < 1");
  }
}

bool OffspringLaw::is_critical() const {
  return std::fabs(mean_ - 1.0) <= 1e-12;
}

OffspringLaw OffspringLaw::finite_table(std::vector<double> p) {
  nlohmann::json params = {{"p", p}};
  return OffspringLaw(LawKind::kFiniteTable, "finite-table",
                      DiscreteLaw(std::move(p)), params);
}

OffspringLaw OffspringLaw::geometric(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "geometric parameter outside (0,1)");
  }
  const double q = 1.0 - p;
  // Head long enough that the tail is below 1e-20.
  const std::int64_t k = std::clamp<std::int64_t>(
      static_cast<std::int64_t>(std::ceil(std::log(1e-20) / std::log(q))), 2,
      1'000'000);
  std::vector<double> head(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) {
    head[i] = p * std::pow(q, static_cast<double>(i));
  }
  LawTail tail{LawTail::Kind::kGeometric, p, q};
  return OffspringLaw(LawKind::kGeometric, "geometric",
                      DiscreteLaw(std::move(head), tail), {{"p", p}});
}

namespace {

DiscreteLaw power_law(double mu0, double c, double exponent) {
  std::vector<double> head(kPowerHead);
  head[0] = mu0;
  for (std::int64_t i = 1; i < kPowerHead; ++i) {
    head[i] = c * std::pow(static_cast<double>(i), -exponent);
  }
  LawTail tail{LawTail::Kind::kPowerLaw, c, 0.0, exponent, 1, kPowerHead};
  return DiscreteLaw(std::move(head), tail);
}

}  // namespace

OffspringLaw OffspringLaw::heavy_tail(double beta, double target_mean) {
  if (!(beta > 1.0) || !(target_mean > 0.0 && target_mean < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument,
                "heavy tail needs beta > 1 and mean in (0,1)");
  }
  // sum_{i>=1} c i^{-beta-1} = c zeta(beta+1), sum i mu(i) = c zeta(beta).
  const double c = target_mean / hurwitz_zeta(beta, 1.0);
  const double mu0 = 1.0 - c * hurwitz_zeta(beta + 1.0, 1.0);
  if (!(mu0 > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "target mean too large for beta");
  }
  nlohmann::json params = {{"beta", beta}, {"mean", target_mean}};
  OffspringLaw law(LawKind::kHeavyTail, "heavy-tail",
                   power_law(mu0, c, beta + 1.0), params);
  law.tail_exponent_ = beta;
  law.params_["c"] = c;
  return law;
}

OffspringLaw OffspringLaw::critical_inf_var() {
  const double c = 1.0 / hurwitz_zeta(2.0, 1.0);
  const double mu0 = 1.0 - c * hurwitz_zeta(3.0, 1.0);
  OffspringLaw law(LawKind::kCriticalInfVar, "critical-inf-var",
                   power_law(mu0, c, 3.0), {{"c", c}});
  law.tail_exponent_ = 2.0;
  return law;
}

OffspringLaw OffspringLaw::pathological_even_odd(double beta,
                                                 double target_mean) {
  if (!(beta > 1.0) || !(target_mean > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "bad even/odd parameters");
  }
  const double e1 = std::exp(-1.0);
  // sum_{k>=0} e^{-k} and sum_{k>=0} (2k+1) e^{-k}
  const double odd_mass = 1.0 / (1.0 - e1);
  const double odd_mean = 2.0 * e1 / ((1.0 - e1) * (1.0 - e1)) + odd_mass;
  const double s = target_mean / (2.0 * hurwitz_zeta(beta, 1.0) + odd_mean);
  const double mu0 = 1.0 - s * (hurwitz_zeta(beta + 1.0, 1.0) + odd_mass);
  if (!(mu0 > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "target mean too large for beta");
  }
  std::vector<double> head(kPowerHead);
  head[0] = mu0;
  for (std::int64_t i = 1; i < kPowerHead; ++i) {
    const double k = static_cast<double>(i / 2);
    head[i] = i % 2 == 0 ? s * std::pow(k, -beta - 1.0) : s * std::exp(-k);
  }
  // The odd part past the head underflows; only the even power tail remains.
  LawTail tail{LawTail::Kind::kPowerLaw, s, 0.0, beta + 1.0, 2, kPowerHead / 2};
  nlohmann::json params = {{"beta", beta}, {"mean", target_mean}, {"s", s}};
  OffspringLaw law(LawKind::kPathologicalEvenOdd, "pathological-even-odd",
                   DiscreteLaw(std::move(head), tail), params);
  law.tail_exponent_ = beta;
  return law;
}

OffspringLaw OffspringLaw::preset(const std::string& raw) {
  const std::string name = normalize_kind(raw);
  if (name == "binary") {
    OffspringLaw law = finite_table({0.5, 0.0, 0.5});
    law.name_ = "binary";
    return law;
  }
  if (name == "geometric") return geometric(0.5);
  if (name == "geometric-truncated") {
    OffspringLaw law = finite_table({0.5, 0.25, 0.125, 0.0625, 0.0625});
    law.name_ = "geometric-truncated";
    return law;
  }
  if (name == "critical-3pt") {
    OffspringLaw law = finite_table({0.25, 0.5, 0.25});
    law.name_ = "critical-3pt";
    return law;
  }
  if (name == "heavy") return heavy_tail(2.5, 0.6);
  if (name == "critical-inf-var") return critical_inf_var();
  throw Error(ErrorKind::kParse, "unknown law '" + raw + "'");
}

OffspringLaw OffspringLaw::from_json(const nlohmann::json& spec) {
  if (spec.is_string()) return preset(spec.get<std::string>());
  if (!spec.is_object() || !spec.contains("kind")) {
    throw Error(ErrorKind::kParse, "law spec needs a \"kind\"");
  }
  try {
    const std::string kind = normalize_kind(spec.at("kind").get<std::string>());
    if (kind == "finite-table") {
      return finite_table(spec.at("p").get<std::vector<double>>());
    }
    if (kind == "geometric" && spec.contains("p")) {
      return geometric(spec.at("p").get<double>());
    }
    if (kind == "heavy-tail") {
      return heavy_tail(spec.at("beta").get<double>(),
                        spec.at("mean").get<double>());
    }
    if (kind == "pathological-even-odd") {
      return pathological_even_odd(spec.at("beta").get<double>(),
                                   spec.value("mean", 0.5));
    }
    return preset(kind);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, std::string("law spec: ") + e.what());
  }
}

nlohmann::json OffspringLaw::describe() const {
  nlohmann::json j = params_;
  j["kind"] = name_;
  j["mu0"] = law_.pmf(0);
  j["mean"] = mean_;
  j["variance"] = number_or_inf(variance_);
  if (tail_exponent_ > 0.0) j["tail_exponent"] = tail_exponent_;
  j["head_size"] = law_.head_size();
  j["tail_mass"] = law_.tail_mass();
  return j;
}

DiscreteLaw size_biased(const OffspringLaw& law) {
  const DiscreteLaw& d = law.law();
  const double m = law.mean();
  const LawTail& t = d.tail_spec();
  if (t.kind == LawTail::Kind::kGeometric) {
    // j q^j decays fast; extend the table until the remainder is negligible.
    std::vector<double> head;
    for (std::int64_t j = 0;; ++j) {
      head.push_back(static_cast<double>(j) * d.pmf(j) / m);
      if (j > 2 && static_cast<double>(j) * d.tail(j) / m < 1e-22) break;
    }
    return DiscreteLaw(std::move(head));
  }
  std::vector<double> head(static_cast<std::size_t>(d.head_size()));
  for (std::int64_t j = 0; j < d.head_size(); ++j) {
    head[j] = static_cast<double>(j) * d.pmf(j) / m;
  }
  LawTail bt = t;
  if (t.kind == LawTail::Kind::kPowerLaw) {
    bt.scale = t.scale * static_cast<double>(t.stride) / m;
    bt.exponent = t.exponent - 1.0;
  }
  return DiscreteLaw(std::move(head), bt);
}

}  // namespace looplab
