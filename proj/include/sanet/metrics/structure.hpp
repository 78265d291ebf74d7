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
#include <string>
#include <vector>

#include "sanet/core/san_graph.hpp"

namespace sanet {

// Fraction of social links whose reverse link exists. Throws Error(kEmpty)
// without social links.
double Reciprocity(const SanGraph& g);

// |E_s| / |V_s| and |E_a| / |V_a|. Throw Error(kEmpty) on an empty node set.
double SocialDensity(const SanGraph& g);
double AttributeDensity(const SanGraph& g);

enum class DegreeKind {
  kSocialOut,     // outdegree of every social node
  kSocialIn,      // indegree of every social node
  kAttrOfSocial,  // attribute degree of every social node
  kSocialOfAttr,  // social degree (member count) of every attribute node
};

const char* DegreeKindName(DegreeKind kind);
DegreeKind ParseDegreeKind(const std::string& text);

// One entry per node of the relevant class, in id order.
std::vector<std::uint64_t> DegreeSequence(const SanGraph& g, DegreeKind kind);

enum class KnnKind {
  kSocial,     // source outdegree -> mean target indegree, over social links
  kAttribute,  // attribute social degree -> mean member attribute degree
};

struct KnnPoint {
  double degree = 0;
  double mean = 0;
  std::uint64_t count = 0;  // links contributing to the point

  friend bool operator==(const KnnPoint&, const KnnPoint&) = default;
};

// Exact integer-degree keys, ascending.
std::vector<KnnPoint> KnnCurve(const SanGraph& g, KnnKind kind);

// Aggregates a curve into bins [b^i, b^{i+1}); `degree` becomes the
// count-weighted mean degree of the bin.
std::vector<KnnPoint> LogBin(const std::vector<KnnPoint>& curve, double base = 2.0);

// Pearson correlation of the (key, value) pairs behind KnnCurve(). Throws
// Error(kUndefined) when either side has zero variance or fewer than two
// links exist.
double Assortativity(const SanGraph& g, KnnKind kind);

// Inclusive linear-interpolation percentile of a sorted sample, q in [0, 1].
double Percentile(const std::vector<double>& sorted, double q);

}  // namespace sanet
