// Copyright 2026 The sanet Authors.
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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sanet/apps/apps.hpp"
#include "sanet/util/error.hpp"
#include "test_util.hpp"

namespace sanet {
namespace {

SanGraph Star(std::size_t leaves) {
  SanGraph g;
  for (std::size_t i = 0; i <= leaves; ++i) g.AddSocialNode();
  for (std::size_t i = 1; i <= leaves; ++i) g.AddSocialLink(MakeSocial(i), MakeSocial(0));
  return g;
}

// Pairs n*d stubs at random, dropping loops and repeats.
SanGraph NearRegular(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::vector<std::size_t> stubs;
  for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  std::mt19937_64 rng(seed);
  std::shuffle(stubs.begin(), stubs.end(), rng);
  SanGraph g;
  for (std::size_t v = 0; v < n; ++v) g.AddSocialNode();
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    if (stubs[i] == stubs[i + 1]) continue;
    g.AddSocialLink(MakeSocial(stubs[i]), MakeSocial(stubs[i + 1]));
    g.AddSocialLink(MakeSocial(stubs[i + 1]), MakeSocial(stubs[i]));
  }
  return g;
}

// Spearman correlation without ties handling beyond average ranks.
double Spearman(const std::vector<double>& x, const std::vector<double>& y) {
  auto ranks = [](const std::vector<double>& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
    std::vector<double> r(v.size());
    for (std::size_t i = 0; i < idx.size();) {
      std::size_t j = i;
      while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) ++j;
      for (std::size_t k = i; k <= j; ++k) r[idx[k]] = 0.5 * (i + j);
      i = j + 1;
    }
    return r;
  };
  const auto rx = ranks(x), ry = ranks(y);
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / rx.size();
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / ry.size();
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

TEST_CASE("degree bound trims a star hub to the bound") {
  const UndirectedGraph v = DegreeBoundedView(Star(200), 100, 3);
  CHECK(v.adj[0].size() == 100);
  CHECK(v.edge_count() == 100);
}

TEST_CASE("degree bound leaves small graphs alone and is idempotent") {
  const SanGraph g = testing::RandomSan(60, 0, 0.05, 0.0, 8);
  const UndirectedGraph sym = Symmetrize(g);
  CHECK(DegreeBoundedView(g, 1000, 1).adj == sym.adj);

  const SanGraph dense = testing::RandomSan(300, 0, 0.3, 0.0, 9);
  const UndirectedGraph v = DegreeBoundedView(dense, 40, 5);
  std::size_t scanned = 0;
  for (const auto& a : v.adj) scanned = std::max(scanned, a.size());
  CHECK(scanned <= 40);
  CHECK(DegreeBoundedView(v, 40, 77).adj == v.adj);
  CHECK(DegreeBoundedView(dense, 40, 5).adj == v.adj);
  for (std::size_t i = 0; i < v.adj.size(); ++i) {
    for (auto x : v.adj[i]) {
      CHECK(std::binary_search(v.adj[x].begin(), v.adj[x].end(), static_cast<std::uint32_t>(i)));
      const bool linked = dense.HasSocialLink(MakeSocial(i), MakeSocial(x)) ||
                          dense.HasSocialLink(MakeSocial(x), MakeSocial(i));
      CHECK(linked);
    }
  }
}

TEST_CASE("sybil admission boundary cases") {
  const SanGraph g = testing::RandomSan(200, 0, 0.05, 0.0, 4);
  SybilConfig cfg;
  cfg.degree_bound = 10;
  CHECK(SybilAdmission(g, cfg).mean == 0.0);
  cfg.compromised_count = 200;
  const auto view = DegreeBoundedView(g, 10, BoundedViewSeed(cfg.seed));
  CHECK(SybilAdmission(g, cfg).mean == static_cast<double>(view.edge_count() * 10));
  cfg.compromised_count = 201;
  CHECK_THROWS_AS(SybilAdmission(g, cfg), Error);

  cfg.compromised_count = 0;
  cfg.route_mode = true;
  CHECK(SybilAdmission(g, cfg).mean == 0.0);
}

TEST_CASE("random routes hand over about w tails per attack edge") {
  const SanGraph g = NearRegular(2000, 8, 21);
  const UndirectedGraph view = DegreeBoundedView(g, 100, 1);
  std::mt19937_64 rng(5);
  std::vector<bool> bad(2000, false);
  for (int i = 0; i < 20; ++i) bad[rng() % 2000] = true;
  const double bound = SybilAdmissionForSet(view, bad, 10, false, 0);
  const double routes = SybilAdmissionForSet(view, bad, 10, true, 3);
  CHECK(routes > 0.0);
  CHECK(routes <= bound);
  CHECK(routes >= 0.5 * bound);
}

TEST_CASE("anonymity boundary cases") {
  const SanGraph g = testing::RandomSan(100, 0, 0.05, 0.0, 6);
  AnonConfig cfg;
  cfg.circuits = 2000;
  CHECK(AnonymityCompromiseProbability(g, cfg).mean == 0.0);
  cfg.compromised_count = 100;
  CHECK(AnonymityCompromiseProbability(g, cfg).mean == 1.0);
}

TEST_CASE("circuit compromise matches path-space enumeration") {
  const SanGraph g = testing::RandomSan(50, 0, 0.06, 0.0, 12);
  const UndirectedGraph view = Symmetrize(g);
  std::vector<bool> bad(50, false);
  for (int v : {3, 7, 11, 19, 23}) bad[v] = true;
  const int length = 4;
  // Exact: sum over starts and walks of P(first and last relay compromised).
  double exact = 0;
  int starts = 0;
  for (std::size_t s = 0; s < 50; ++s) {
    if (bad[s] || view.adj[s].empty()) continue;
    ++starts;
    std::vector<double> p(50, 0.0);
    for (auto x : view.adj[s]) {
      if (bad[x]) p[x] += 1.0 / view.adj[s].size();
    }
    for (int hop = 2; hop <= length; ++hop) {
      std::vector<double> next(50, 0.0);
      for (std::size_t v = 0; v < 50; ++v) {
        for (auto x : view.adj[v]) next[x] += p[v] / view.adj[v].size();
      }
      p = next;
    }
    for (std::size_t v = 0; v < 50; ++v) {
      if (bad[v]) exact += p[v];
    }
  }
  std::size_t honest = 0;
  for (std::size_t s = 0; s < 50; ++s) honest += !bad[s];
  exact /= starts;
  const WalkOutcome out = SimulateCircuits(view, bad, length, 400000, 99);
  CHECK(out.circuits + out.skipped == 400000);
  CHECK(static_cast<double>(out.skipped) / 400000 ==
        doctest::Approx(double(honest - starts) / honest).epsilon(0.05));
  CHECK(std::abs(out.rate() - exact) <= testing::Binomial3Sigma(exact, out.circuits));
}

TEST_CASE("circuit compromise is about (c/n)^2 on a regular graph") {
  const SanGraph g = NearRegular(4000, 10, 2);
  AnonConfig cfg;
  cfg.compromised_count = 800;
  cfg.circuits = 20000;
  cfg.trials = 5;
  const double p = AnonymityCompromiseProbability(g, cfg).mean;
  CHECK(p == doctest::Approx(0.04).epsilon(0.2));
}

TEST_CASE("applications grow with the compromised count") {
  const SanGraph g = testing::RandomSan(400, 0, 0.02, 0.0, 13);
  std::vector<double> x, sybil, anon;
  for (std::size_t c = 0; c <= 360; c += 40) {
    SybilConfig s;
    s.compromised_count = c;
    s.degree_bound = 12;
    AnonConfig a;
    a.compromised_count = c;
    a.circuits = 2000;
    x.push_back(static_cast<double>(c));
    sybil.push_back(SybilAdmission(g, s).mean);
    anon.push_back(AnonymityCompromiseProbability(g, a).mean);
  }
  CHECK(Spearman(x, sybil) > 0.95);
  CHECK(Spearman(x, anon) > 0.95);
}

TEST_CASE("trial results do not depend on the worker count") {
  const SanGraph g = testing::RandomSan(300, 0, 0.03, 0.0, 14);
  AnonConfig a;
  a.compromised_count = 30;
  a.circuits = 1000;
  SybilConfig s;
  s.compromised_count = 30;
  s.route_mode = true;
  const Estimate a1 = AnonymityCompromiseProbability(g, a);
  const Estimate s1 = SybilAdmission(g, s);
  a.workers = s.workers = 4;
  const Estimate a4 = AnonymityCompromiseProbability(g, a);
  const Estimate s4 = SybilAdmission(g, s);
  CHECK(a1.mean == a4.mean);
  CHECK(a1.ci_low == a4.ci_low);
  CHECK(s1.mean == s4.mean);
}

TEST_CASE("fidelity of a graph against itself") {
  const SanGraph g = testing::RandomSan(200, 0, 0.03, 0.0, 15);
  const std::vector<std::size_t> sweep{0, 20, 40, 80};
  SybilConfig s;
  AnonConfig a;
  a.circuits = 500;
  for (App app : {App::kSybil, App::kAnonymity}) {
    const auto rows = FidelityCompare(g, g, app, sweep, s, a);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) CHECK(r.relative_error == 0.0);
  }
  const std::vector<std::size_t> far{500, 900};
  CHECK(FidelityCompare(g, g, App::kSybil, far, s, a).empty());

  const SanGraph h = testing::RandomSan(200, 0, 0.03, 0.0, 16);
  const auto rows = FidelityCompare(g, h, App::kSybil, sweep, s, a);
  CHECK(rows[1].relative_error < 0.25);
}

TEST_CASE("sweep CSV layout") {
  std::ostringstream os;
  const std::vector<SweepRow> rows{{10, Estimate{1.5, 1.0, 2.0, 3}, "real"}};
  WriteSweepCsv(os, rows);
  CHECK(os.str() ==
        "compromised,metric_mean,metric_ci_low,metric_ci_high,graph_id\n10,1.5,1,2,real\n");
  CHECK(ParseApp("sybil") == App::kSybil);
  CHECK_THROWS_AS(ParseApp("tor"), Error);
}

}  // namespace
}  // namespace sanet
