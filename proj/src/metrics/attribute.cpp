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

#include "sanet/metrics/attribute.hpp"

#include <algorithm>

#include "sanet/core/ops.hpp"
#include "sanet/metrics/clustering.hpp"
#include "sanet/metrics/structure.hpp"
#include "sanet/util/error.hpp"

namespace sanet {

std::map<std::pair<std::uint64_t, std::uint64_t>, ReciprocityCell> ReciprocityGrid(
    const SanGraph& half, const SanGraph& final_graph) {
  Require(IsMonotone(half, final_graph), ErrorCode::kNonMonotoneSnapshots,
          "earlier snapshot is not contained in the later one");
  std::map<std::pair<std::uint64_t, std::uint64_t>, ReciprocityCell> grid;
  for (std::size_t i = 0; i < half.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    for (SocialId v : half.out(u)) {
      if (half.HasSocialLink(v, u)) continue;
      ReciprocityCell& cell =
          grid[{CommonSocialNeighborCount(half, u, v), CommonAttributeCount(half, u, v)}];
      ++cell.links;
      cell.reciprocated += final_graph.HasSocialLink(v, u);
    }
  }
  return grid;
}

std::map<std::string, double> PerAttributeTypeClustering(const SanGraph& g, int workers) {
  std::vector<std::vector<AttrId>> by_type(g.attribute_type_count());
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    by_type[g.attribute_type(MakeAttr(a)).value].push_back(MakeAttr(a));
  }
  std::map<std::string, double> out;
  for (std::size_t t = 0; t < by_type.size(); ++t) {
    if (by_type[t].empty()) continue;
    out[g.attribute_types()[t]] = ClusteringExact(g, std::span<const AttrId>(by_type[t]), workers);
  }
  return out;
}

std::vector<ValuePercentiles> DegreePercentilesByAttributeValue(const SanGraph& g,
                                                                const std::string& type,
                                                                std::size_t top_k) {
  const auto t = g.FindAttributeType(type);
  Require(t.has_value(), ErrorCode::kInvalidArgument, "unknown attribute type '" + type + "'");
  std::vector<AttrId> attrs;
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    if (g.attribute_type(MakeAttr(a)) == *t && !g.members(MakeAttr(a)).empty()) {
      attrs.push_back(MakeAttr(a));
    }
  }
  std::stable_sort(attrs.begin(), attrs.end(), [&](AttrId x, AttrId y) {
    return g.members(x).size() > g.members(y).size();
  });
  if (attrs.size() > top_k) attrs.resize(top_k);
  std::vector<ValuePercentiles> out;
  for (AttrId a : attrs) {
    std::vector<double> degrees;
    for (SocialId u : g.members(a)) degrees.push_back(static_cast<double>(g.out_degree(u)));
    std::sort(degrees.begin(), degrees.end());
    out.push_back({a, g.AttributeLabel(a), degrees.size(), Percentile(degrees, 0.25),
                   Percentile(degrees, 0.5), Percentile(degrees, 0.75)});
  }
  return out;
}

}  // namespace sanet
