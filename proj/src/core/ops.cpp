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

#include "sanet/core/ops.hpp"

#include <algorithm>

#include "sanet/util/error.hpp"
#include "sanet/util/random.hpp"

namespace sanet {
namespace {

template <typename T>
std::vector<T> Sorted(std::span<const T> xs) {
  std::vector<T> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  return out;
}

template <typename T>
std::size_t IntersectionSize(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

std::vector<SocialId> SocialOutNeighbors(const SanGraph& g, SocialId u) {
  g.CheckSocial(u);
  return Sorted(g.out(u));
}

std::vector<SocialId> SocialInNeighbors(const SanGraph& g, SocialId u) {
  g.CheckSocial(u);
  return Sorted(g.in(u));
}

std::vector<SocialId> SocialNeighbors(const SanGraph& g, SocialId u) {
  g.CheckSocial(u);
  return Sorted(g.neighbors(u));
}

std::vector<SocialId> SocialNeighbors(const SanGraph& g, AttrId a) {
  g.CheckAttribute(a);
  return Sorted(g.members(a));
}

std::vector<AttrId> AttributeNeighbors(const SanGraph& g, SocialId u) {
  g.CheckSocial(u);
  return Sorted(g.attributes(u));
}

std::size_t CommonAttributeCount(const SanGraph& g, SocialId u, SocialId v) {
  g.CheckSocial(u);
  g.CheckSocial(v);
  auto a = g.attributes(u);
  auto b = g.attributes(v);
  return IntersectionSize(std::vector<AttrId>(a.begin(), a.end()),
                          std::vector<AttrId>(b.begin(), b.end()));
}

std::size_t CommonSocialNeighborCount(const SanGraph& g, SocialId u, SocialId v) {
  g.CheckSocial(u);
  g.CheckSocial(v);
  auto a = g.neighbors(u);
  auto b = g.neighbors(v);
  return IntersectionSize(std::vector<SocialId>(a.begin(), a.end()),
                          std::vector<SocialId>(b.begin(), b.end()));
}

SanGraph SubsampleAttributes(const SanGraph& g, double keep_prob, std::uint64_t seed,
                             SubsampleMode mode) {
  Require(keep_prob >= 0.0 && keep_prob <= 1.0, ErrorCode::kInvalidArgument,
          "keep probability must lie in [0, 1]");
  SanGraph out(g.attribute_types());
  out.ReserveSocialNodes(g.social_node_count());
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    const SocialId u = out.AddSocialNode();
    if (g.has_social_labels()) out.SetSocialLabel(u, g.SocialLabel(u));
  }
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    const AttrId id = MakeAttr(a);
    out.AddAttributeNode(g.attribute_type(id), g.attribute_value(id));
  }
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    for (SocialId v : g.out(u)) out.AddSocialLink(u, v);
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    if (mode == SubsampleMode::kPerUser) {
      // One draw per user, even for users without attributes, so the decision
      // for user i depends only on the seed and i.
      const bool keep = rng.Uniform() < keep_prob;
      if (!keep) continue;
      for (AttrId a : g.attributes(u)) out.AddAttributeLink(u, a);
    } else {
      for (AttrId a : g.attributes(u)) {
        if (rng.Uniform() < keep_prob) out.AddAttributeLink(u, a);
      }
    }
  }
  if (g.frozen()) out.Freeze();
  return out;
}

bool IsMonotone(const SanGraph& before, const SanGraph& after) {
  if (before.social_node_count() > after.social_node_count() ||
      before.attribute_node_count() > after.attribute_node_count()) {
    return false;
  }
  for (std::size_t a = 0; a < before.attribute_node_count(); ++a) {
    const AttrId id = MakeAttr(a);
    if (before.attribute_type_name(before.attribute_type(id)) !=
        after.attribute_type_name(after.attribute_type(id))) {
      return false;
    }
  }
  for (std::size_t i = 0; i < before.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    for (SocialId v : before.out(u)) {
      if (!after.HasSocialLink(u, v)) return false;
    }
    for (AttrId a : before.attributes(u)) {
      if (!after.HasAttributeLink(u, a)) return false;
    }
  }
  return true;
}

EventLog DiffSnapshots(const SanGraph& before, const SanGraph& after, double time) {
  Require(IsMonotone(before, after), ErrorCode::kNonMonotoneSnapshots,
          "earlier snapshot is not contained in the later one");
  EventLog log;
  for (std::size_t i = before.social_node_count(); i < after.social_node_count(); ++i) {
    log.Arrive(time, MakeSocial(i));
  }
  for (std::size_t a = before.attribute_node_count(); a < after.attribute_node_count(); ++a) {
    const AttrId id = MakeAttr(a);
    log.Declare(id, after.attribute_type_name(after.attribute_type(id)),
                after.attribute_value(id));
  }
  // Attribute links are emitted in attribute-id order so each new attribute
  // node is introduced by the first link that references it.
  std::vector<std::pair<AttrId, SocialId>> alinks;
  for (std::size_t i = 0; i < after.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    for (AttrId a : after.attributes(u)) {
      if (!before.HasAttributeLink(u, a)) alinks.emplace_back(a, u);
    }
  }
  std::sort(alinks.begin(), alinks.end());
  for (auto [a, u] : alinks) log.AttributeLink(time, u, a);
  for (std::size_t i = 0; i < after.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    std::vector<SocialId> outs(after.out(u).begin(), after.out(u).end());
    std::sort(outs.begin(), outs.end());
    for (SocialId v : outs) {
      if (!before.HasSocialLink(u, v)) log.SocialLink(time, u, v, LinkCause::kUnknown);
    }
  }
  return log;
}

}  // namespace sanet
