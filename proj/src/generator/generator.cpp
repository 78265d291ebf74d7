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

#include "sanet/generator/generator.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <utility>

#include "sanet/generator/sampling.hpp"
#include "sanet/util/error.hpp"
#include "sanet/util/random.hpp"

namespace sanet {
namespace {

constexpr std::uint64_t kAttributeStream = 1;
constexpr std::uint64_t kSocialStream = 2;
constexpr std::uint64_t kTimingStream = 3;

AttrId NewAttribute(SanGraph& g, EventLog* log, Rng& rng) {
  const auto type = AttrTypeId{static_cast<std::uint16_t>(rng.Below(g.attribute_type_count()))};
  const AttrId a = g.AddAttributeNode(type);
  if (log != nullptr) log->Declare(a, g.attribute_type_name(type));
  return a;
}

// Complete SAN: every social node links to every other and to every attribute.
void Initialize(const GenParams& params, SanGraph& g, EventLog* log, Rng& attr_rng,
                bool social_links) {
  for (int i = 0; i < params.init_social; ++i) {
    const SocialId u = g.AddSocialNode();
    if (log != nullptr) log->Arrive(0.0, u);
  }
  for (int j = 0; j < params.init_attr; ++j) NewAttribute(g, log, attr_rng);
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    for (std::size_t j = 0; j < g.attribute_node_count(); ++j) {
      g.AddAttributeLink(MakeSocial(i), MakeAttr(j));
      if (log != nullptr) log->AttributeLink(0.0, MakeSocial(i), MakeAttr(j));
    }
  }
  if (!social_links) return;
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    for (std::size_t j = 0; j < g.social_node_count(); ++j) {
      if (i == j) continue;
      g.AddSocialLink(MakeSocial(i), MakeSocial(j));
      if (log != nullptr) log->SocialLink(0.0, MakeSocial(i), MakeSocial(j), LinkCause::kInit);
    }
  }
}

void LinkAttributes(const GenParams& params, SanGraph& g, EventLog* log, AttributeLinker& linker,
                    SocialId u, double now, Rng& rng, GenerationStats* stats) {
  const int n_a = SampleAttributeDegree(params, rng);
  for (int k = 0; k < n_a; ++k) {
    bool created = false;
    const AttrId a = linker.Step(g, u, params.p, rng, &created);
    if (created) {
      if (log != nullptr) log->Declare(a, g.attribute_type_name(g.attribute_type(a)));
      if (stats != nullptr) ++stats->new_attributes;
    }
    if (log != nullptr) log->AttributeLink(now, u, a);
  }
}

using Wake = std::pair<double, std::uint32_t>;
using WakeQueue = std::priority_queue<Wake, std::vector<Wake>, std::greater<>>;

}  // namespace

GenerationResult Generate(const GenParams& params, const GenerateOptions& options) {
  params.Validate();
  Rng attr_rng(DeriveSeed(params.seed, kAttributeStream));
  Rng social_rng(DeriveSeed(params.seed, kSocialStream));
  Rng time_rng(DeriveSeed(params.seed, kTimingStream));

  GenerationResult result;
  SanGraph& g = result.graph;
  EventLog& log = result.log;
  auto& nodes = result.nodes;
  auto& stats = result.stats;

  Initialize(params, g, &log, attr_rng, true);
  AttributeLinker linker(g);
  AttachmentSampler attach(params, g);
  ClosureSampler closure;
  WakeQueue queue;

  auto schedule = [&](SocialId u, double from) {
    NodeState& s = nodes[u.index()];
    s.wake_time = from + SampleSleep(params, s.outdegree, time_rng);
    if (s.wake_time <= s.arrival + s.lifetime) queue.emplace(s.wake_time, u.value);
  };
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    NodeState s;
    s.lifetime = SampleLifetime(params, time_rng);
    s.outdegree = static_cast<std::uint32_t>(g.out_degree(MakeSocial(i)));
    nodes.push_back(s);
    if (s.outdegree > 0) schedule(MakeSocial(i), 0.0);
  }

  auto checkpoints = options.checkpoints;
  std::sort(checkpoints.begin(), checkpoints.end());
  auto next_checkpoint = checkpoints.begin();
  auto maybe_checkpoint = [&](std::int64_t step) {
    while (next_checkpoint != checkpoints.end() && *next_checkpoint <= step) {
      if (*next_checkpoint == step && options.on_checkpoint) options.on_checkpoint(step, g);
      ++next_checkpoint;
    }
  };
  auto check_budget = [&] {
    if (params.max_social_links > 0 && g.social_link_count() > params.max_social_links) {
      Fail(ErrorCode::kResourceLimit,
           "social link budget of " + std::to_string(params.max_social_links) + " exceeded");
    }
  };
  maybe_checkpoint(0);

  for (std::int64_t t = 1; t <= params.T; ++t) {
    const double now = static_cast<double>(t - 1);
    const SocialId u = g.AddSocialNode();
    attach.OnSocialNode(u);
    log.Arrive(now, u);
    LinkAttributes(params, g, &log, linker, u, now, attr_rng, &stats);

    const SocialId v = attach.Select(g, u, social_rng);
    g.AddSocialLink(u, v);
    attach.OnInLink(g, v);
    log.SocialLink(now, u, v, LinkCause::kFirst);
    ++stats.first_links;

    NodeState s;
    s.arrival = now;
    s.lifetime = SampleLifetime(params, time_rng);
    s.outdegree = 1;
    nodes.push_back(s);
    schedule(u, now);

    const double horizon = static_cast<double>(t);
    while (!queue.empty() && queue.top().first <= horizon) {
      const auto [when, id] = queue.top();
      queue.pop();
      const SocialId x{id};
      ++stats.wakes;
      if (auto target = closure.Select(g, x, params.closure, params.fc, social_rng)) {
        g.AddSocialLink(x, *target);
        attach.OnInLink(g, *target);
        log.SocialLink(when, x, *target, LinkCause::kClosure);
        ++nodes[id].outdegree;
        ++stats.closure_links;
      } else {
        ++stats.consumed_wakes;
      }
      schedule(x, when);
    }
    check_budget();
    maybe_checkpoint(t);
  }
  return result;
}

SanGraph GenerateAttributeLayer(const GenParams& params) {
  params.Validate();
  Rng attr_rng(DeriveSeed(params.seed, kAttributeStream));
  SanGraph g;
  Initialize(params, g, nullptr, attr_rng, false);
  AttributeLinker linker(g);
  for (std::int64_t t = 1; t <= params.T; ++t) {
    const SocialId u = g.AddSocialNode();
    LinkAttributes(params, g, nullptr, linker, u, static_cast<double>(t - 1), attr_rng, nullptr);
  }
  return g;
}

}  // namespace sanet
