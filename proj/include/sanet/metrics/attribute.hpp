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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sanet/core/san_graph.hpp"

namespace sanet {

struct ReciprocityCell {
  std::uint64_t links = 0;       // one-directional links in the earlier snapshot
  std::uint64_t reciprocated = 0;  // of those, reversed in the later snapshot

  double rate() const { return links == 0 ? 0.0 : double(reciprocated) / double(links); }
};

// Keyed by (common social neighbors, common attributes) measured in `half`.
// Throws Error(kNonMonotoneSnapshots) unless half is contained in final.
std::map<std::pair<std::uint64_t, std::uint64_t>, ReciprocityCell> ReciprocityGrid(
    const SanGraph& half, const SanGraph& final_graph);

// Mean attribute clustering per attribute type name; types without nodes are
// omitted.
std::map<std::string, double> PerAttributeTypeClustering(const SanGraph& g, int workers = 1);

struct ValuePercentiles {
  AttrId attribute;
  std::string label;
  std::uint64_t members = 0;
  double p25 = 0;
  double p50 = 0;
  double p75 = 0;
};

// The `top_k` most popular attributes of `type` (ties by id) with the
// quartiles of their members' social outdegree. Throws
// Error(kInvalidArgument) for an unknown type.
std::vector<ValuePercentiles> DegreePercentilesByAttributeValue(const SanGraph& g,
                                                                const std::string& type,
                                                                std::size_t top_k);

}  // namespace sanet
