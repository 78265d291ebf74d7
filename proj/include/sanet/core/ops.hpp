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
#include <vector>

#include "sanet/core/event_log.hpp"
#include "sanet/core/san_graph.hpp"

namespace sanet {

// Set-valued neighbor queries. Results are sorted and duplicate free; unknown
// ids throw Error(kNodeNotFound).
std::vector<SocialId> SocialOutNeighbors(const SanGraph& g, SocialId u);
std::vector<SocialId> SocialInNeighbors(const SanGraph& g, SocialId u);
std::vector<SocialId> SocialNeighbors(const SanGraph& g, SocialId u);
// Members of an attribute node.
std::vector<SocialId> SocialNeighbors(const SanGraph& g, AttrId a);
std::vector<AttrId> AttributeNeighbors(const SanGraph& g, SocialId u);

// |attributes(u) ∩ attributes(v)|.
std::size_t CommonAttributeCount(const SanGraph& g, SocialId u, SocialId v);
// |neighbors(u) ∩ neighbors(v)| over the undirected social neighborhood.
std::size_t CommonSocialNeighborCount(const SanGraph& g, SocialId u, SocialId v);

enum class SubsampleMode {
  kPerUser,  // each user keeps all or none of their attributes
  kPerLink,  // each attribute link is kept independently
};

// Copy of `g` with attribute links thinned; social structure is untouched and
// attribute nodes are kept even when they lose every member.
SanGraph SubsampleAttributes(const SanGraph& g, double keep_prob, std::uint64_t seed,
                             SubsampleMode mode = SubsampleMode::kPerUser);

// Events that turn `before` into `after`, all stamped `time`. Ids must be
// aligned between the two graphs; throws Error(kNonMonotoneSnapshots) when
// `before` is not contained in `after`.
EventLog DiffSnapshots(const SanGraph& before, const SanGraph& after, double time = 0.0);

// True when `before` ⊆ `after` (nodes, attribute types and links).
bool IsMonotone(const SanGraph& before, const SanGraph& after);

}  // namespace sanet
