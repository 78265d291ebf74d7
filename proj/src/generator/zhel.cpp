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

#include "sanet/generator/zhel.hpp"

#include <cmath>
#include <queue>
#include <string>
#include <utility>

#include "sanet/generator/sampling.hpp"
#include "sanet/util/error.hpp"
#include "sanet/util/random.hpp"

namespace sanet {

void ZhelParams::Validate() const {
  auto check = [](bool ok, const std::string& msg) {
    Require(ok, ErrorCode::kInvalidArgument, msg);
  };
  check(T >= 0, "T must be nonnegative");
  check(lifetime_mean > 0 && std::isfinite(lifetime_mean), "lifetime_mean must be positive");
  check(m_s > 0 && std::isfinite(m_s), "m_s must be positive");
  check(p_new >= 0 && p_new <= 1, "p_new must lie in [0, 1]");
  check(adopt >= 0 && adopt <= 1, "adopt must lie in [0, 1]");
  check(init_social >= 1, "init_social must be at least 1");
  check(init_attr >= 0, "init_attr must be nonnegative");
}

GenerationResult GenerateBaselineZhel(const ZhelParams& params) {
  params.Validate();
  Rng attr_rng(DeriveSeed(params.seed, 1));
  Rng social_rng(DeriveSeed(params.seed, 2));
  Rng time_rng(DeriveSeed(params.seed, 3));

  GenerationResult result;
  SanGraph& g = result.graph;
  EventLog& log = result.log;
  auto& nodes = result.nodes;
  auto& stats = result.stats;

  auto fresh_attribute = [&] {
    const auto type =
        AttrTypeId{static_cast<std::uint16_t>(attr_rng.Below(g.attribute_type_count()))};
    const AttrId a = g.AddAttributeNode(type);
    log.Declare(a, g.attribute_type_name(type));
    ++stats.new_attributes;
    return a;
  };
  // Copies a random attribute of `source` that u lacks, else creates one.
  auto adopt = [&](SocialId u, std::optional<SocialId> source, double now) {
    std::optional<AttrId> pick;
    if (source && attr_rng.Uniform() >= params.p_new) {
      const auto attrs = g.attributes(*source);
      if (!attrs.empty()) {
        const AttrId a = attrs[attr_rng.Below(attrs.size())];
        if (!g.HasAttributeLink(u, a)) pick = a;
      }
      if (!pick) return;
    }
    if (!pick) pick = fresh_attribute();
    g.AddAttributeLink(u, *pick);
    log.AttributeLink(now, u, *pick);
  };

  for (int i = 0; i < params.init_social; ++i) log.Arrive(0.0, g.AddSocialNode());
  for (int j = 0; j < params.init_attr; ++j) fresh_attribute();
  stats.new_attributes = 0;
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    for (std::size_t j = 0; j < g.attribute_node_count(); ++j) {
      g.AddAttributeLink(MakeSocial(i), MakeAttr(j));
      log.AttributeLink(0.0, MakeSocial(i), MakeAttr(j));
    }
    for (std::size_t j = 0; j < g.social_node_count(); ++j) {
      if (i == j) continue;
      g.AddSocialLink(MakeSocial(i), MakeSocial(j));
      log.SocialLink(0.0, MakeSocial(i), MakeSocial(j), LinkCause::kInit);
    }
  }

  GenParams pa;
  pa.attachment = Attachment::kPA;
  AttachmentSampler attach(pa, g);
  ClosureSampler closure;
  using Wake = std::pair<double, std::uint32_t>;
  std::priority_queue<Wake, std::vector<Wake>, std::greater<>> queue;
  auto schedule = [&](SocialId u, double from) {
    NodeState& s = nodes[u.index()];
    double sleep = 0.0;
    while (sleep <= 0.0) sleep = time_rng.Exponential(params.m_s / s.outdegree);
    s.wake_time = from + sleep;
    if (s.wake_time <= s.arrival + s.lifetime) queue.emplace(s.wake_time, u.value);
  };
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    NodeState s;
    s.lifetime = time_rng.Exponential(params.lifetime_mean);
    s.outdegree = static_cast<std::uint32_t>(g.out_degree(MakeSocial(i)));
    nodes.push_back(s);
    if (s.outdegree > 0) schedule(MakeSocial(i), 0.0);
  }

  for (std::int64_t t = 1; t <= params.T; ++t) {
    const double now = static_cast<double>(t - 1);
    const SocialId u = g.AddSocialNode();
    attach.OnSocialNode(u);
    log.Arrive(now, u);
    const SocialId v = attach.Select(g, u, social_rng);
    adopt(u, v, now);
    g.AddSocialLink(u, v);
    attach.OnInLink(g, v);
    log.SocialLink(now, u, v, LinkCause::kFirst);
    ++stats.first_links;

    NodeState s;
    s.arrival = now;
    s.lifetime = time_rng.Exponential(params.lifetime_mean);
    s.outdegree = 1;
    nodes.push_back(s);
    schedule(u, now);

    while (!queue.empty() && queue.top().first <= static_cast<double>(t)) {
      const auto [when, id] = queue.top();
      queue.pop();
      const SocialId x{id};
      ++stats.wakes;
      if (auto target = closure.Select(g, x, Closure::kRR, 0.0, social_rng)) {
        g.AddSocialLink(x, *target);
        attach.OnInLink(g, *target);
        log.SocialLink(when, x, *target, LinkCause::kClosure);
        ++nodes[id].outdegree;
        ++stats.closure_links;
      } else {
        ++stats.consumed_wakes;
      }
      if (attr_rng.Uniform() < params.adopt) {
        const auto nbrs = g.neighbors(x);
        adopt(x, nbrs[attr_rng.Below(nbrs.size())], when);
      }
      schedule(x, when);
    }
    if (params.max_social_links > 0 && g.social_link_count() > params.max_social_links) {
      Fail(ErrorCode::kResourceLimit, "social link budget exceeded");
    }
  }
  return result;
}

}  // namespace sanet
