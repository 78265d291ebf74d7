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
#include <optional>
#include <vector>

#include "sanet/core/san_graph.hpp"
#include "sanet/generator/params.hpp"
#include "sanet/util/random.hpp"
#include "sanet/util/weight_tree.hpp"

namespace sanet {

// n_a = max(1, round(exp(Normal(mu_a, sigma_a)))).
int SampleAttributeDegree(const GenParams& params, Rng& rng);

// Lifetime from Normal(mu_l, sigma_l²) truncated to l >= 0.
double SampleLifetime(const GenParams& params, Rng& rng);

// Sleep with mean m_s / outdegree. Throws Error(kInvalidDegree) for 0.
double SampleSleep(const GenParams& params, std::size_t outdegree, Rng& rng);

// Links social nodes to attribute nodes. With probability p (or when no
// attribute node exists) a fresh attribute of a uniformly drawn type is
// created; otherwise an existing attribute is drawn proportionally to its
// social degree, redrawing when the user already holds it.
class AttributeLinker {
 public:
  AttributeLinker() = default;
  // Seeds the degree-proportional pool from an existing graph.
  explicit AttributeLinker(const SanGraph& g);

  // Adds the link to `g` and returns the attribute. `created` reports whether
  // the attribute node is new.
  AttrId Step(SanGraph& g, SocialId u, double p, Rng& rng, bool* created = nullptr);

  // Registers an attribute link made outside Step().
  void Record(AttrId a) { link_owner_.push_back(a); }

 private:
  std::vector<AttrId> link_owner_;  // one entry per attribute link
};

// Attachment weight f(u, v) = w(d_in(v)) * h(a(u, v)) with
// w(d) = (d + 1)^alpha (1 for kUniform) and h = 1 (kUniform, kPA),
// 1 + beta * a (kLAPA) or 1 + a^beta (kPAPA, with 0^0 = 1).
double AttachmentIndegreeWeight(Attachment model, double alpha, std::size_t indegree);
double AttachmentAttributeFactor(Attachment model, double beta, std::size_t common);

// Incremental sampler for first outgoing links. Candidates are every social
// node other than u that u does not already link to.
class AttachmentSampler {
 public:
  explicit AttachmentSampler(const GenParams& params);
  // Builds the indegree weights for every node already in `g`.
  AttachmentSampler(const GenParams& params, const SanGraph& g);

  void OnSocialNode(SocialId v);
  // Call after a social link into v was added.
  void OnInLink(const SanGraph& g, SocialId v);

  // Throws Error(kNoCandidate) when u has no eligible target.
  SocialId Select(const SanGraph& g, SocialId u, Rng& rng);

 private:
  SocialId SelectExact(const SanGraph& g, SocialId u, Rng& rng);
  SocialId SelectHeuristic(const SanGraph& g, SocialId u, Rng& rng);
  std::optional<SocialId> RejectFromTree(const SanGraph& g, SocialId u, bool skip_comembers,
                                         Rng& rng);
  SocialId ScanFallback(const SanGraph& g, SocialId u, bool comembers_only, Rng& rng);
  void EnsureScratch(std::size_t n);

  Attachment model_;
  double alpha_;
  double beta_;
  bool heuristic_;
  WeightTree tree_;
  std::vector<std::uint32_t> common_;  // scratch: a(u, v) for co-members
  std::vector<SocialId> touched_;
};

// One-shot helper over a graph snapshot.
SocialId AttachmentSelect(const SanGraph& g, SocialId u, const GenParams& params, Rng& rng);

// Number of redraws a wake may spend on self or duplicate targets.
inline constexpr int kClosureRetryBudget = 16;

// Two-hop target selection for woken nodes. Returns nullopt when no valid
// target was found within the retry budget (the wake is then consumed).
class ClosureSampler {
 public:
  std::optional<SocialId> Select(const SanGraph& g, SocialId u, Closure model, double fc,
                                 Rng& rng);

 private:
  std::optional<SocialId> SelectBaseline(const SanGraph& g, SocialId u, Rng& rng);
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<SocialId> candidates_;
};

std::optional<SocialId> ClosureSelect(const SanGraph& g, SocialId u, const GenParams& params,
                                      Rng& rng);

}  // namespace sanet
