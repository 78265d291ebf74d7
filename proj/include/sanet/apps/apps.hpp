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


#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "sanet/core/san_graph.hpp"

namespace sanet {

// Undirected simple graph over the social node ids of a SAN.
struct UndirectedGraph {
  std::vector<std::vector<std::uint32_t>> adj;  // sorted

  std::size_t node_count() const { return adj.size(); }
  std::size_t edge_count() const;
  std::size_t max_degree() const;
};

// Social links with direction dropped.
UndirectedGraph Symmetrize(const SanGraph& g);

// Every node picks a uniform random subset of at most `bound` incident links;
// a link survives when both endpoints keep it. Deterministic per seed, and a
// graph already within the bound is returned unchanged.
UndirectedGraph DegreeBoundedView(const UndirectedGraph& g, std::size_t bound,
                                  std::uint64_t seed);
UndirectedGraph DegreeBoundedView(const SanGraph& g, std::size_t bound, std::uint64_t seed);

// Seed the applications derive from their master seed for the bounded view.
std::uint64_t BoundedViewSeed(std::uint64_t seed);

// Mean over Monte Carlo trials with a normal 95% interval.
struct Estimate {
  double mean = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::size_t trials = 0;
};

Estimate Summarize(std::span<const double> values);

struct SybilConfig {
  int w = 10;                       // random-route length
  std::size_t degree_bound = 100;
  std::size_t compromised_count = 0;
  int trials = 10;
  std::uint64_t seed = 1;
  // Count escaping random routes instead of the g_e * w bound.
  bool route_mode = false;
  int workers = 1;

  void Validate() const;
};

// Accepted sybil identities. Each trial compromises compromised_count nodes
// uniformly without replacement. An attack edge is a bounded-view link with at
// least one compromised endpoint, and the default output is g_e * w. Route
// mode builds one random-route instance (a random permutation of incident
// links at every node), starts a route of length w along every link of every
// honest node and counts the routes that enter a compromised node; each such
// route hands the adversary one tail. Throws Error(kInvalidArgument) when
// compromised_count exceeds the node count.
Estimate SybilAdmission(const SanGraph& g, const SybilConfig& cfg);
double SybilAdmissionForSet(const UndirectedGraph& view, const std::vector<bool>& compromised,
                            int w, bool route_mode, std::uint64_t seed);

struct AnonConfig {
  int walk_length = 5;
  std::size_t compromised_count = 0;
  int circuits = 10000;  // per trial
  int trials = 10;
  std::size_t degree_bound = 100;
  std::uint64_t seed = 1;
  int workers = 1;

  void Validate() const;
};

struct WalkOutcome {
  std::size_t compromised = 0;  // circuits with first and last relay compromised
  std::size_t circuits = 0;
  std::size_t skipped = 0;  // isolated starts
  double rate() const {
    return circuits == 0 ? 0.0 : static_cast<double>(compromised) / static_cast<double>(circuits);
  }
};

// Circuits are random walks of walk_length hops on the bounded view from a
// uniform honest start (any node when none is honest); relays are the walk's
// nodes after the start.
Estimate AnonymityCompromiseProbability(const SanGraph& g, const AnonConfig& cfg,
                                        std::size_t* skipped = nullptr);
WalkOutcome SimulateCircuits(const UndirectedGraph& view, const std::vector<bool>& compromised,
                             int walk_length, int circuits, std::uint64_t seed);

enum class App { kSybil, kAnonymity };

const char* AppName(App app);
App ParseApp(const std::string& text);

struct FidelityRow {
  std::size_t compromised = 0;
  Estimate real;
  Estimate model;
  double relative_error = 0;  // |model - real| / real, 0 when both are 0
};

// Runs the application on both graphs at every sweep point that is feasible
// for both. cfg.compromised_count is overridden by the sweep.
std::vector<FidelityRow> FidelityCompare(const SanGraph& real, const SanGraph& model, App app,
                                         std::span<const std::size_t> sweep,
                                         const SybilConfig& sybil, const AnonConfig& anon);

struct SweepRow {
  std::size_t compromised = 0;
  Estimate metric;
  std::string graph_id;
};

// compromised,metric_mean,metric_ci_low,metric_ci_high,graph_id
void WriteSweepCsv(std::ostream& os, std::span<const SweepRow> rows);

}  // namespace sanet
