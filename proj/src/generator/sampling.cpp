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

#include "sanet/generator/sampling.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "sanet/generator/truncated_normal.hpp"
#include "sanet/util/error.hpp"

namespace sanet {

int SampleAttributeDegree(const GenParams& params, Rng& rng) {
  const double x = std::exp(rng.Normal(params.mu_a, params.sigma_a));
  if (!(x < static_cast<double>(INT_MAX / 2))) return INT_MAX / 2;
  return std::max<int>(1, static_cast<int>(std::llround(x)));
}

double SampleLifetime(const GenParams& params, Rng& rng) {
  return TruncatedNormal{params.mu_l, params.sigma_l}.Sample(rng);
}

double SampleSleep(const GenParams& params, std::size_t outdegree, Rng& rng) {
  Require(outdegree > 0, ErrorCode::kInvalidDegree,
          "sleep time needs a positive outdegree");
  const double mean = params.m_s / static_cast<double>(outdegree);
  if (params.sleep == SleepFamily::kFixed) return mean;
  double s = 0.0;
  while (s <= 0.0) s = rng.Exponential(mean);
  return s;
}

AttributeLinker::AttributeLinker(const SanGraph& g) {
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    link_owner_.insert(link_owner_.end(), g.members(MakeAttr(a)).size(), MakeAttr(a));
  }
}

AttrId AttributeLinker::Step(SanGraph& g, SocialId u, double p, Rng& rng, bool* created) {
  const bool fresh = rng.Uniform() < p;
  std::optional<AttrId> pick;
  if (!fresh && !link_owner_.empty()) {
    // Bounded redraws; a user holding every popular attribute falls back to a
    // new attribute node.
    for (int attempt = 0; attempt < 64 && !pick; ++attempt) {
      const AttrId a = link_owner_[rng.Below(link_owner_.size())];
      if (!g.HasAttributeLink(u, a)) pick = a;
    }
  }
  if (!pick) {
    const auto type = AttrTypeId{static_cast<std::uint16_t>(rng.Below(g.attribute_type_count()))};
    pick = g.AddAttributeNode(type);
    if (created != nullptr) *created = true;
  } else if (created != nullptr) {
    *created = false;
  }
  g.AddAttributeLink(u, *pick);
  link_owner_.push_back(*pick);
  return *pick;
}

double AttachmentIndegreeWeight(Attachment model, double alpha, std::size_t indegree) {
  if (model == Attachment::kUniform) return 1.0;
  return std::pow(static_cast<double>(indegree) + 1.0, alpha);
}

double AttachmentAttributeFactor(Attachment model, double beta, std::size_t common) {
  switch (model) {
    case Attachment::kUniform:
    case Attachment::kPA:
      return 1.0;
    case Attachment::kLAPA:
      return 1.0 + beta * static_cast<double>(common);
    case Attachment::kPAPA:
      return 1.0 + std::pow(static_cast<double>(common), beta);
  }
  return 1.0;
}

AttachmentSampler::AttachmentSampler(const GenParams& params)
    : model_(params.attachment),
      alpha_(params.alpha),
      beta_(params.beta),
      heuristic_(params.lapa_heuristic) {}

AttachmentSampler::AttachmentSampler(const GenParams& params, const SanGraph& g)
    : AttachmentSampler(params) {
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    tree_.Append(AttachmentIndegreeWeight(model_, alpha_, g.in_degree(MakeSocial(i))));
  }
}

void AttachmentSampler::OnSocialNode(SocialId v) {
  Require(v.index() == tree_.size(), ErrorCode::kInvalidArgument,
          "attachment sampler out of sync with graph");
  tree_.Append(AttachmentIndegreeWeight(model_, alpha_, 0));
}

void AttachmentSampler::OnInLink(const SanGraph& g, SocialId v) {
  tree_.Set(v.index(), AttachmentIndegreeWeight(model_, alpha_, g.in_degree(v)));
}

void AttachmentSampler::EnsureScratch(std::size_t n) {
  if (common_.size() < n) common_.resize(n, 0);
}

SocialId AttachmentSampler::Select(const SanGraph& g, SocialId u, Rng& rng) {
  Require(tree_.size() == g.social_node_count(), ErrorCode::kInvalidArgument,
          "attachment sampler out of sync with graph");
  if (heuristic_ && model_ == Attachment::kLAPA) return SelectHeuristic(g, u, rng);
  return SelectExact(g, u, rng);
}

std::optional<SocialId> AttachmentSampler::RejectFromTree(const SanGraph& g, SocialId u,
                                                          bool skip_comembers, Rng& rng) {
  if (tree_.total() <= 0.0) return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const SocialId v = MakeSocial(tree_.Find(rng.Uniform() * tree_.total()));
    if (v == u) continue;
    if (skip_comembers && common_[v.index()] > 0) continue;
    if (g.HasSocialLink(u, v)) continue;
    return v;
  }
  return std::nullopt;
}

SocialId AttachmentSampler::ScanFallback(const SanGraph& g, SocialId u, bool comembers_only,
                                         Rng& rng) {
  std::vector<std::pair<SocialId, double>> eligible;
  double total = 0.0;
  auto consider = [&](SocialId v, double w) {
    if (v == u || w <= 0.0 || g.HasSocialLink(u, v)) return;
    eligible.emplace_back(v, w);
    total += w;
  };
  if (comembers_only) {
    for (SocialId v : touched_) {
      consider(v, tree_.weight(v.index()) *
                      AttachmentAttributeFactor(model_, beta_, common_[v.index()]));
    }
  } else {
    for (std::size_t i = 0; i < g.social_node_count(); ++i) {
      if (!common_.empty() && i < common_.size() && common_[i] > 0) continue;
      consider(MakeSocial(i), tree_.weight(i));
    }
  }
  if (eligible.empty()) Fail(ErrorCode::kNoCandidate, "no eligible attachment target");
  double r = rng.Uniform() * total;
  for (const auto& [v, w] : eligible) {
    if (r < w) return v;
    r -= w;
  }
  return eligible.back().first;
}

SocialId AttachmentSampler::SelectExact(const SanGraph& g, SocialId u, Rng& rng) {
  const bool uses_attributes =
      model_ == Attachment::kLAPA || model_ == Attachment::kPAPA;
  EnsureScratch(g.social_node_count());
  touched_.clear();
  if (!uses_attributes) {
    if (auto v = RejectFromTree(g, u, false, rng)) return *v;
    return ScanFallback(g, u, false, rng);
  }

  for (AttrId a : g.attributes(u)) {
    for (SocialId v : g.members(a)) {
      if (v == u) continue;
      if (common_[v.index()]++ == 0) touched_.push_back(v);
    }
  }
  struct Reset {
    std::vector<std::uint32_t>& common;
    std::vector<SocialId>& touched;
    ~Reset() {
      for (SocialId v : touched) common[v.index()] = 0;
    }
  } reset{common_, touched_};

  double comember_mass = 0.0;
  double comember_raw = 0.0;
  for (SocialId v : touched_) {
    const double w = tree_.weight(v.index());
    comember_raw += w;
    if (!g.HasSocialLink(u, v)) {
      comember_mass += w * AttachmentAttributeFactor(model_, beta_, common_[v.index()]);
    }
  }
  double excluded_raw = tree_.weight(u.index());
  for (SocialId x : g.out(u)) {
    if (common_[x.index()] == 0) excluded_raw += tree_.weight(x.index());
  }
  const double h0 = AttachmentAttributeFactor(model_, beta_, 0);
  const double rest = h0 * std::max(0.0, tree_.total() - comember_raw - excluded_raw);
  if (comember_mass + rest <= 0.0) {
    Fail(ErrorCode::kNoCandidate, "no eligible attachment target");
  }

  double r = rng.Uniform() * (comember_mass + rest);
  if (r < comember_mass) {
    for (SocialId v : touched_) {
      if (g.HasSocialLink(u, v)) continue;
      const double w = tree_.weight(v.index()) *
                       AttachmentAttributeFactor(model_, beta_, common_[v.index()]);
      if (r < w) return v;
      r -= w;
    }
    return ScanFallback(g, u, true, rng);
  }
  if (auto v = RejectFromTree(g, u, true, rng)) return *v;
  try {
    return ScanFallback(g, u, false, rng);
  } catch (const Error&) {
    // `rest` was rounding noise; only co-members remain.
    return ScanFallback(g, u, true, rng);
  }
}

SocialId AttachmentSampler::SelectHeuristic(const SanGraph& g, SocialId u, Rng& rng) {
  const auto attrs = g.attributes(u);
  if (attrs.empty()) return SelectExact(g, u, rng);
  const AttrId a = attrs[rng.Below(attrs.size())];
  double total = 0.0;
  for (SocialId v : g.members(a)) {
    if (v != u && !g.HasSocialLink(u, v)) total += tree_.weight(v.index());
  }
  if (total <= 0.0) return SelectExact(g, u, rng);
  double r = rng.Uniform() * total;
  SocialId last = u;
  for (SocialId v : g.members(a)) {
    if (v == u || g.HasSocialLink(u, v)) continue;
    const double w = tree_.weight(v.index());
    if (r < w) return v;
    r -= w;
    last = v;
  }
  return last;
}

SocialId AttachmentSelect(const SanGraph& g, SocialId u, const GenParams& params, Rng& rng) {
  g.CheckSocial(u);
  AttachmentSampler sampler(params, g);
  return sampler.Select(g, u, rng);
}

std::optional<SocialId> ClosureSampler::Select(const SanGraph& g, SocialId u, Closure model,
                                               double fc, Rng& rng) {
  if (model == Closure::kBaseline) return SelectBaseline(g, u, rng);
  const auto social = g.neighbors(u);
  const auto attrs = g.attributes(u);
  const double social_weight = static_cast<double>(social.size());
  const double attr_weight =
      model == Closure::kRRSAN ? fc * static_cast<double>(attrs.size()) : 0.0;
  const double total = social_weight + attr_weight;
  if (total <= 0.0) return std::nullopt;
  for (int attempt = 0; attempt <= kClosureRetryBudget; ++attempt) {
    const double r = rng.Uniform() * total;
    std::span<const SocialId> second;
    if (r < social_weight) {
      const auto i = std::min(static_cast<std::size_t>(r), social.size() - 1);
      second = g.neighbors(social[i]);
    } else {
      const auto i = std::min(static_cast<std::size_t>((r - social_weight) / fc),
                              attrs.size() - 1);
      second = g.members(attrs[i]);
    }
    if (second.empty()) continue;
    const SocialId v = second[rng.Below(second.size())];
    if (v != u && !g.HasSocialLink(u, v)) return v;
  }
  return std::nullopt;
}

std::optional<SocialId> ClosureSampler::SelectBaseline(const SanGraph& g, SocialId u, Rng& rng) {
  if (stamp_.size() < g.social_node_count()) stamp_.resize(g.social_node_count(), 0);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  candidates_.clear();
  stamp_[u.index()] = epoch_;
  auto visit = [&](SocialId v) {
    if (stamp_[v.index()] == epoch_) return;
    stamp_[v.index()] = epoch_;
    if (!g.HasSocialLink(u, v)) candidates_.push_back(v);
  };
  for (SocialId w : g.neighbors(u)) visit(w);
  for (SocialId w : g.neighbors(u)) {
    for (SocialId v : g.neighbors(w)) visit(v);
  }
  if (candidates_.empty()) return std::nullopt;
  return candidates_[rng.Below(candidates_.size())];
}

std::optional<SocialId> ClosureSelect(const SanGraph& g, SocialId u, const GenParams& params,
                                      Rng& rng) {
  g.CheckSocial(u);
  ClosureSampler sampler;
  return sampler.Select(g, u, params.closure, params.fc, rng);
}

}  // namespace sanet
