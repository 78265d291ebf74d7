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

#include "sanet/metrics/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "sanet/util/error.hpp"
#include "sanet/util/parallel.hpp"
#include "sanet/util/random.hpp"

namespace sanet {
namespace {

constexpr std::size_t kChunks = 64;

double ClusteringOf(const SanGraph& g, std::span<const SocialId> nbrs) {
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::vector<SocialId> sorted(nbrs.begin(), nbrs.end());
  if (!g.frozen()) std::sort(sorted.begin(), sorted.end());
  std::uint64_t links = 0;
  for (SocialId v : sorted) {
    for (SocialId w : g.out(v)) {
      links += std::binary_search(sorted.begin(), sorted.end(), w);
    }
  }
  return static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

template <typename Id, typename Nbrs>
double MeanClustering(const SanGraph& g, std::span<const Id> nodes, int workers, Nbrs nbrs) {
  Require(!nodes.empty(), ErrorCode::kEmpty, "clustering over an empty node set");
  const std::size_t chunks = std::min(nodes.size(), kChunks);
  std::vector<double> partial(chunks, 0.0);
  ParallelFor(chunks, workers, [&](std::size_t c) {
    for (std::size_t i = c * nodes.size() / chunks; i < (c + 1) * nodes.size() / chunks; ++i) {
      partial[c] += ClusteringOf(g, nbrs(nodes[i]));
    }
  });
  return std::accumulate(partial.begin(), partial.end(), 0.0) /
         static_cast<double>(nodes.size());
}

template <typename Id, typename Nbrs>
double SampledClustering(const SanGraph& g, std::span<const Id> nodes, const ApproxConfig& cfg,
                         Nbrs nbrs) {
  Require(!nodes.empty(), ErrorCode::kEmpty, "clustering over an empty node set");
  const std::size_t k = ApproxSampleCount(cfg);
  std::vector<std::uint64_t> partial(kChunks, 0);
  ParallelFor(kChunks, cfg.workers, [&](std::size_t c) {
    Rng rng(DeriveSeed(cfg.seed, c));
    std::uint64_t f = 0;
    for (std::size_t s = c * k / kChunks; s < (c + 1) * k / kChunks; ++s) {
      const auto n = nbrs(nodes[rng.Below(nodes.size())]);
      if (n.size() < 2) continue;
      const std::size_t i = rng.Below(n.size());
      std::size_t j = rng.Below(n.size() - 1);
      if (j >= i) ++j;
      f += g.HasSocialLink(n[i], n[j]);
      f += g.HasSocialLink(n[j], n[i]);
    }
    partial[c] = f;
  });
  const auto total = std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
  return static_cast<double>(total) / (2.0 * static_cast<double>(k));
}

template <typename Id, typename Nbrs>
std::vector<KnnPoint> ByDegree(const SanGraph& g, std::span<const Id> nodes, Nbrs nbrs) {
  std::map<std::size_t, std::pair<double, std::size_t>> acc;
  for (Id id : nodes) {
    const auto n = nbrs(id);
    auto& [sum, count] = acc[n.size()];
    sum += ClusteringOf(g, n);
    ++count;
  }
  std::vector<KnnPoint> out;
  // `count` holds the number of nodes at the degree.
  for (const auto& [degree, sc] : acc) {
    out.push_back({static_cast<double>(degree), sc.first / static_cast<double>(sc.second),
                   sc.second});
  }
  return out;
}

}  // namespace

std::vector<KnnPoint> ClusteringByDegree(const SanGraph& g, std::span<const SocialId> nodes) {
  return ByDegree(g, nodes, [&](SocialId u) { return g.neighbors(u); });
}

std::vector<KnnPoint> ClusteringByDegree(const SanGraph& g, std::span<const AttrId> nodes) {
  return ByDegree(g, nodes, [&](AttrId a) { return g.members(a); });
}

double LocalClustering(const SanGraph& g, SocialId u) {
  g.CheckSocial(u);
  return ClusteringOf(g, g.neighbors(u));
}

double LocalClustering(const SanGraph& g, AttrId a) {
  g.CheckAttribute(a);
  return ClusteringOf(g, g.members(a));
}

double ClusteringExact(const SanGraph& g, std::span<const SocialId> nodes, int workers) {
  for (SocialId u : nodes) g.CheckSocial(u);
  return MeanClustering(g, nodes, workers, [&](SocialId u) { return g.neighbors(u); });
}

double ClusteringExact(const SanGraph& g, std::span<const AttrId> nodes, int workers) {
  for (AttrId a : nodes) g.CheckAttribute(a);
  return MeanClustering(g, nodes, workers, [&](AttrId a) { return g.members(a); });
}

std::vector<SocialId> AllSocialNodes(const SanGraph& g) {
  std::vector<SocialId> out(g.social_node_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = MakeSocial(i);
  return out;
}

std::vector<AttrId> AllAttributeNodes(const SanGraph& g) {
  std::vector<AttrId> out(g.attribute_node_count());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = MakeAttr(i);
  return out;
}

std::size_t ApproxSampleCount(const ApproxConfig& config) {
  if (config.samples > 0) return config.samples;
  Require(config.epsilon > 0 && config.epsilon < 1, ErrorCode::kInvalidArgument,
          "epsilon must lie in (0, 1)");
  Require(config.nu > 0.5, ErrorCode::kInvalidArgument, "nu must exceed 1/2");
  return static_cast<std::size_t>(
      std::ceil(std::log(2.0 * config.nu) / (2.0 * config.epsilon * config.epsilon)));
}

double ClusteringApprox(const SanGraph& g, std::span<const SocialId> nodes,
                        const ApproxConfig& config) {
  for (SocialId u : nodes) g.CheckSocial(u);
  return SampledClustering(g, nodes, config, [&](SocialId u) { return g.neighbors(u); });
}

double ClusteringApprox(const SanGraph& g, std::span<const AttrId> nodes,
                        const ApproxConfig& config) {
  for (AttrId a : nodes) g.CheckAttribute(a);
  return SampledClustering(g, nodes, config, [&](AttrId a) { return g.members(a); });
}

}  // namespace sanet
