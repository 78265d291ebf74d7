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
#include <span>
#include <vector>

#include "sanet/core/san_graph.hpp"
#include "sanet/metrics/structure.hpp"

namespace sanet {

// c(u) = L(u) / (k (k - 1)) with k = |neighbors(u)| and L(u) the directed
// links among those neighbors; 0 when k < 2.
double LocalClustering(const SanGraph& g, SocialId u);
// Same, over the members of an attribute node.
double LocalClustering(const SanGraph& g, AttrId a);

// Mean local clustering over the node set. Throws Error(kEmpty) for an
// empty set.
double ClusteringExact(const SanGraph& g, std::span<const SocialId> nodes, int workers = 1);
double ClusteringExact(const SanGraph& g, std::span<const AttrId> nodes, int workers = 1);

// Mean local clustering per degree, where the degree of a social node is
// |neighbors| and that of an attribute node its member count. Points ascend
// by degree.
std::vector<KnnPoint> ClusteringByDegree(const SanGraph& g, std::span<const SocialId> nodes);
std::vector<KnnPoint> ClusteringByDegree(const SanGraph& g, std::span<const AttrId> nodes);

std::vector<SocialId> AllSocialNodes(const SanGraph& g);
std::vector<AttrId> AllAttributeNodes(const SanGraph& g);

struct ApproxConfig {
  double epsilon = 0.002;
  double nu = 100;
  std::size_t samples = 0;  // 0 derives K from epsilon and nu
  std::uint64_t seed = 1;
  int workers = 1;
};

// K = ceil(ln(2 nu) / (2 epsilon^2)) unless overridden.
std::size_t ApproxSampleCount(const ApproxConfig& config);

// Draws K (center, neighbor pair) triples and returns sum F / (2 K), where F
// counts the directed links between the two neighbors. Centers with fewer
// than two neighbors give F = 0. The estimate is within epsilon of the exact
// value with probability at least 1 - 1/nu.
double ClusteringApprox(const SanGraph& g, std::span<const SocialId> nodes,
                        const ApproxConfig& config);
double ClusteringApprox(const SanGraph& g, std::span<const AttrId> nodes,
                        const ApproxConfig& config);

}  // namespace sanet
