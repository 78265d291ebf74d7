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


#include "sanet/apps/apps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sanet/util/error.hpp"
#include "sanet/util/parallel.hpp"
#include "sanet/util/random.hpp"

namespace sanet {
namespace {

constexpr std::uint64_t kViewStream = 0xb0;
constexpr std::uint64_t kTrialStream = 0x7a;

std::vector<bool> DrawCompromised(std::size_t n, std::size_t count, Rng& rng) {
  std::vector<std::uint32_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0u);
  std::vector<bool> out(n, false);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + rng.Below(n - i);
    std::swap(ids[i], ids[j]);
    out[ids[i]] = true;
  }
  return out;
}

std::size_t IndexOf(const std::vector<std::uint32_t>& adj, std::uint32_t v) {
  return static_cast<std::size_t>(std::lower_bound(adj.begin(), adj.end(), v) - adj.begin());
}

}  // namespace

std::size_t UndirectedGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj) twice += a.size();
  return twice / 2;
}

std::size_t UndirectedGraph::max_degree() const {
  std::size_t m = 0;
  for (const auto& a : adj) m = std::max(m, a.size());
  return m;
}

UndirectedGraph Symmetrize(const SanGraph& g) {
  UndirectedGraph out;
  out.adj.resize(g.social_node_count());
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    auto& a = out.adj[i];
    for (SocialId v : g.neighbors(MakeSocial(i))) a.push_back(v.value);
    std::sort(a.begin(), a.end());
  }
  return out;
}

UndirectedGraph DegreeBoundedView(const UndirectedGraph& g, std::size_t bound,
                                  std::uint64_t seed) {
  Require(bound >= 1, ErrorCode::kInvalidArgument, "degree bound must be at least 1");
  const std::size_t n = g.node_count();
  // keep[v] holds the neighbors v retains, sorted.
  std::vector<std::vector<std::uint32_t>> keep(n);
  for (std::size_t v = 0; v < n; ++v) {
    keep[v] = g.adj[v];
    if (keep[v].size() <= bound) continue;
    Rng rng(DeriveSeed(seed, v));
    auto& k = keep[v];
    for (std::size_t i = 0; i < bound; ++i) {
      std::swap(k[i], k[i + rng.Below(k.size() - i)]);
    }
    k.resize(bound);
    std::sort(k.begin(), k.end());
  }
  UndirectedGraph out;
  out.adj.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t x : keep[v]) {
      if (std::binary_search(keep[x].begin(), keep[x].end(), static_cast<std::uint32_t>(v))) {
        out.adj[v].push_back(x);
      }
    }
  }
  return out;
}

UndirectedGraph DegreeBoundedView(const SanGraph& g, std::size_t bound, std::uint64_t seed) {
  return DegreeBoundedView(Symmetrize(g), bound, seed);
}

std::uint64_t BoundedViewSeed(std::uint64_t seed) { return DeriveSeed(seed, kViewStream); }

Estimate Summarize(std::span<const double> values) {
  Estimate e;
  e.trials = values.size();
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  double sum = 0;
  for (double x : values) sum += x;
  e.mean = sum / n;
  double ss = 0;
  for (double x : values) ss += (x - e.mean) * (x - e.mean);
  const double half = values.size() > 1 ? 1.96 * std::sqrt(ss / (n - 1) / n) : 0.0;
  e.ci_low = e.mean - half;
  e.ci_high = e.mean + half;
  return e;
}

void SybilConfig::Validate() const {
  Require(w >= 1, ErrorCode::kInvalidArgument, "w must be at least 1");
  Require(degree_bound >= 1, ErrorCode::kInvalidArgument, "degree bound must be at least 1");
  Require(trials >= 1, ErrorCode::kInvalidArgument, "trials must be at least 1");
}

void AnonConfig::Validate() const {
  Require(walk_length >= 2, ErrorCode::kInvalidArgument, "walk length must be at least 2");
  Require(degree_bound >= 1, ErrorCode::kInvalidArgument, "degree bound must be at least 1");
  Require(trials >= 1 && circuits >= 1, ErrorCode::kInvalidArgument,
          "trials and circuits must be at least 1");
}

double SybilAdmissionForSet(const UndirectedGraph& view, const std::vector<bool>& compromised,
                            int w, bool route_mode, std::uint64_t seed) {
  const std::size_t n = view.node_count();
  if (!route_mode) {
    std::size_t attack = 0;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::uint32_t x : view.adj[v]) {
        if (x > v && (compromised[v] || compromised[x])) ++attack;
      }
    }
    return static_cast<double>(attack) * w;
  }
  // Routing tables: a route entering v over link i leaves over perm[v][i].
  std::vector<std::vector<std::uint32_t>> perm(n);
  for (std::size_t v = 0; v < n; ++v) {
    perm[v].resize(view.adj[v].size());
    std::iota(perm[v].begin(), perm[v].end(), 0u);
    Rng rng(DeriveSeed(seed, v));
    std::shuffle(perm[v].begin(), perm[v].end(), rng);
  }
  std::size_t tails = 0;
  for (std::size_t h = 0; h < n; ++h) {
    if (compromised[h]) continue;
    for (std::uint32_t first : view.adj[h]) {
      auto prev = static_cast<std::uint32_t>(h);
      std::uint32_t cur = first;
      for (int hop = 1;; ++hop) {
        if (compromised[cur]) {
          ++tails;
          break;
        }
        if (hop == w) break;
        const std::uint32_t next = view.adj[cur][perm[cur][IndexOf(view.adj[cur], prev)]];
        prev = cur;
        cur = next;
      }
    }
  }
  return static_cast<double>(tails);
}

Estimate SybilAdmission(const SanGraph& g, const SybilConfig& cfg) {
  cfg.Validate();
  const std::size_t n = g.social_node_count();
  Require(cfg.compromised_count <= n, ErrorCode::kInvalidArgument,
          "compromised count exceeds the number of social nodes");
  const UndirectedGraph view =
      DegreeBoundedView(g, cfg.degree_bound, BoundedViewSeed(cfg.seed));
  std::vector<double> values(static_cast<std::size_t>(cfg.trials));
  ParallelFor(values.size(), cfg.workers, [&](std::size_t t) {
    const std::uint64_t trial_seed = DeriveSeed(DeriveSeed(cfg.seed, kTrialStream), t);
    Rng rng(trial_seed);
    const std::vector<bool> bad = DrawCompromised(n, cfg.compromised_count, rng);
    values[t] = SybilAdmissionForSet(view, bad, cfg.w, cfg.route_mode, rng());
  });
  return Summarize(values);
}

WalkOutcome SimulateCircuits(const UndirectedGraph& view, const std::vector<bool>& compromised,
                             int walk_length, int circuits, std::uint64_t seed) {
  const std::size_t n = view.node_count();
  WalkOutcome out;
  if (n == 0) return out;
  std::vector<std::uint32_t> starts;
  for (std::size_t v = 0; v < n; ++v) {
    if (!compromised[v]) starts.push_back(static_cast<std::uint32_t>(v));
  }
  if (starts.empty()) {
    starts.resize(n);
    std::iota(starts.begin(), starts.end(), 0u);
  }
  Rng rng(seed);
  for (int c = 0; c < circuits; ++c) {
    std::uint32_t cur = starts[rng.Below(starts.size())];
    if (view.adj[cur].empty()) {
      ++out.skipped;
      continue;
    }
    bool first = false;
    for (int hop = 1; hop <= walk_length; ++hop) {
      cur = view.adj[cur][rng.Below(view.adj[cur].size())];
      if (hop == 1) first = compromised[cur];
    }
    ++out.circuits;
    if (first && compromised[cur]) ++out.compromised;
  }
  return out;
}

Estimate AnonymityCompromiseProbability(const SanGraph& g, const AnonConfig& cfg,
                                        std::size_t* skipped) {
  cfg.Validate();
  const std::size_t n = g.social_node_count();
  Require(cfg.compromised_count <= n, ErrorCode::kInvalidArgument,
          "compromised count exceeds the number of social nodes");
  const UndirectedGraph view =
      DegreeBoundedView(g, cfg.degree_bound, BoundedViewSeed(cfg.seed));
  std::vector<WalkOutcome> outcomes(static_cast<std::size_t>(cfg.trials));
  ParallelFor(outcomes.size(), cfg.workers, [&](std::size_t t) {
    Rng rng(DeriveSeed(DeriveSeed(cfg.seed, kTrialStream), t));
    const std::vector<bool> bad = DrawCompromised(n, cfg.compromised_count, rng);
    outcomes[t] = SimulateCircuits(view, bad, cfg.walk_length, cfg.circuits, rng());
  });
  std::vector<double> rates;
  std::size_t total_skipped = 0;
  for (const WalkOutcome& o : outcomes) {
    total_skipped += o.skipped;
    if (o.circuits > 0) rates.push_back(o.rate());
  }
  if (skipped != nullptr) *skipped = total_skipped;
  return Summarize(rates);
}

const char* AppName(App app) {
  return app == App::kSybil ? "sybil" : "anonymity";
}

App ParseApp(const std::string& text) {
  if (text == "sybil") return App::kSybil;
  if (text == "anonymity") return App::kAnonymity;
  Fail(ErrorCode::kInvalidArgument, "unknown app '" + text + "'");
}

std::vector<FidelityRow> FidelityCompare(const SanGraph& real, const SanGraph& model, App app,
                                         std::span<const std::size_t> sweep,
                                         const SybilConfig& sybil, const AnonConfig& anon) {
  const std::size_t limit = std::min(real.social_node_count(), model.social_node_count());
  std::vector<FidelityRow> rows;
  for (std::size_t c : sweep) {
    if (c > limit) continue;
    FidelityRow row;
    row.compromised = c;
    if (app == App::kSybil) {
      SybilConfig cfg = sybil;
      cfg.compromised_count = c;
      row.real = SybilAdmission(real, cfg);
      row.model = SybilAdmission(model, cfg);
    } else {
      AnonConfig cfg = anon;
      cfg.compromised_count = c;
      row.real = AnonymityCompromiseProbability(real, cfg);
      row.model = AnonymityCompromiseProbability(model, cfg);
    }
    if (row.model.mean == row.real.mean) {
      row.relative_error = 0.0;
    } else if (row.real.mean == 0.0) {
      row.relative_error = std::numeric_limits<double>::infinity();
    } else {
      row.relative_error = std::abs(row.model.mean - row.real.mean) / std::abs(row.real.mean);
    }
    rows.push_back(row);
  }
  return rows;
}

void WriteSweepCsv(std::ostream& os, std::span<const SweepRow> rows) {
  os << "compromised,metric_mean,metric_ci_low,metric_ci_high,graph_id\n";
  const auto old = os.precision(17);
  for (const SweepRow& r : rows) {
    os << r.compromised << ',' << r.metric.mean << ',' << r.metric.ci_low << ','
       << r.metric.ci_high << ',' << r.graph_id << '\n';
  }
  os.precision(old);
}

}  // namespace sanet
