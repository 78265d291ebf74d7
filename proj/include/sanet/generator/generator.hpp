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

#include <cstdint>
#include <functional>
#include <vector>

#include "sanet/core/event_log.hpp"
#include "sanet/core/san_graph.hpp"
#include "sanet/generator/params.hpp"

namespace sanet {

// Per-node schedule. The node may emit links in [arrival, arrival + lifetime].
struct NodeState {
  double arrival = 0.0;
  double lifetime = 0.0;
  double wake_time = 0.0;  // last scheduled wake
  std::uint32_t outdegree = 0;
};

struct GenerationStats {
  std::uint64_t first_links = 0;
  std::uint64_t closure_links = 0;
  std::uint64_t wakes = 0;
  std::uint64_t consumed_wakes = 0;  // wakes that found no closure target
  std::uint64_t new_attributes = 0;
};

struct GenerationResult {
  SanGraph graph;
  EventLog log;
  std::vector<NodeState> nodes;
  GenerationStats stats;
};

struct GenerateOptions {
  // Steps (1..T) after which `on_checkpoint` runs; 0 is the initial graph.
  std::vector<std::int64_t> checkpoints;
  std::function<void(std::int64_t step, const SanGraph&)> on_checkpoint;
};

// Runs initialization and T steps. Step t adds one node at time t - 1, links
// its attributes and first outgoing link, then processes every wake in
// (t - 1, t] in time order; a node may wake several times within one step.
// Attribute, social and timing draws use separate streams derived from the
// seed, so the attribute layer does not depend on the social parameters.
GenerationResult Generate(const GenParams& params, const GenerateOptions& options = {});

// Only the attribute half of Generate(): social nodes and attribute links,
// identical to those of a full run with the same seed, p, mu_a and sigma_a.
// Social links are omitted.
SanGraph GenerateAttributeLayer(const GenParams& params);

}  // namespace sanet
