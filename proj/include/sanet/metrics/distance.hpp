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

#include "sanet/core/san_graph.hpp"

namespace sanet {

// counts[d] is the number of ordered pairs at finite directed distance d >= 1
// (counts[0] is always 0).
struct DistanceHistogram {
  std::vector<std::uint64_t> counts;
  std::uint64_t sources = 0;

  std::uint64_t total() const;
  // counts[d] / total().
  std::vector<double> Fractions() const;
};

// Directed BFS distances from `source`; unreachable nodes get -1.
std::vector<std::int32_t> BfsDistances(const SanGraph& g, SocialId source);

// BFS from `source_sample` distinct sources drawn uniformly (0 or >= n means
// every node).
DistanceHistogram DistanceDistribution(const SanGraph& g, std::size_t source_sample = 0,
                                       std::uint64_t seed = 1, int workers = 1);

// Interpolated 90th percentile of a cumulative distribution over integer
// distances: with D the first distance where F(D) >= q, returns
// D - 1 + (q - F(D - 1)) / (F(D) - F(D - 1)), or D itself when D is the
// smallest distance present. `cumulative[d]` is F(d); cumulative[0] = 0.
double InterpolatedPercentile(const std::vector<double>& cumulative, double q = 0.9);

// Throws Error(kUnreachable) when the histogram is empty.
double EffectiveDiameterFromHistogram(const DistanceHistogram& h);

struct HyperAnfConfig {
  int registers = 64;           // per node, power of two in [16, 65536]
  double tolerance = 1e-4;      // stop when N(t)/N(t-1) - 1 falls below this
  int max_iterations = 10000;
  int runs = 1;                 // independent hash seeds averaged together
  std::uint64_t seed = 1;
  int workers = 1;
};

// Estimated neighborhood function: n_t[t] ~ number of ordered pairs (u, v)
// with dist(u, v) <= t, including u = v.
std::vector<double> HyperAnf(const SanGraph& g, const HyperAnfConfig& config);

// Effective diameter from a neighborhood function (pairs at distance 0 are
// removed first). Throws Error(kUnreachable) when no pair is reachable.
double EffectiveDiameterFromNeighborhood(const std::vector<double>& n_t);

enum class DiameterMode { kExact, kProbabilistic };

double EffectiveDiameter(const SanGraph& g, DiameterMode mode, const HyperAnfConfig& config = {});

// min{dist(u, v) : u in members(a), v in members(b)} + 1. Throws
// Error(kEmpty) for an attribute without members and Error(kUnreachable)
// when no directed path exists.
std::uint64_t AttributeDistance(const SanGraph& g, AttrId a, AttrId b);

// Histogram of AttributeDistance over ordered pairs (a, b), a != b, with `a`
// drawn from `source_sample` attributes with members (0 means all).
// Unreachable pairs are left out.
DistanceHistogram AttributeDistanceDistribution(const SanGraph& g, std::size_t source_sample = 0,
                                                std::uint64_t seed = 1, int workers = 1);

}  // namespace sanet
