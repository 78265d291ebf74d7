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

#include "sanet/metrics/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "sanet/util/error.hpp"

namespace sanet {

double Reciprocity(const SanGraph& g) {
  Require(g.social_link_count() > 0, ErrorCode::kEmpty, "graph has no social links");
  std::uint64_t mutual = 0;
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    for (SocialId v : g.out(u)) mutual += g.HasSocialLink(v, u);
  }
  return static_cast<double>(mutual) / static_cast<double>(g.social_link_count());
}

double SocialDensity(const SanGraph& g) {
  Require(g.social_node_count() > 0, ErrorCode::kEmpty, "graph has no social nodes");
  return static_cast<double>(g.social_link_count()) / static_cast<double>(g.social_node_count());
}

double AttributeDensity(const SanGraph& g) {
  Require(g.attribute_node_count() > 0, ErrorCode::kEmpty, "graph has no attribute nodes");
  return static_cast<double>(g.attribute_link_count()) /
         static_cast<double>(g.attribute_node_count());
}

const char* DegreeKindName(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::kSocialOut:
      return "social_out";
    case DegreeKind::kSocialIn:
      return "social_in";
    case DegreeKind::kAttrOfSocial:
      return "attr_of_social";
    case DegreeKind::kSocialOfAttr:
      return "social_of_attr";
  }
  return "?";
}

DegreeKind ParseDegreeKind(const std::string& text) {
  for (auto k : {DegreeKind::kSocialOut, DegreeKind::kSocialIn, DegreeKind::kAttrOfSocial,
                 DegreeKind::kSocialOfAttr}) {
    if (text == DegreeKindName(k)) return k;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown degree kind '" + text + "'");
}

std::vector<std::uint64_t> DegreeSequence(const SanGraph& g, DegreeKind kind) {
  std::vector<std::uint64_t> out;
  if (kind == DegreeKind::kSocialOfAttr) {
    out.reserve(g.attribute_node_count());
    for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
      out.push_back(g.members(MakeAttr(a)).size());
    }
    return out;
  }
  out.reserve(g.social_node_count());
  for (std::size_t i = 0; i < g.social_node_count(); ++i) {
    const SocialId u = MakeSocial(i);
    switch (kind) {
      case DegreeKind::kSocialOut:
        out.push_back(g.out_degree(u));
        break;
      case DegreeKind::kSocialIn:
        out.push_back(g.in_degree(u));
        break;
      default:
        out.push_back(g.attributes(u).size());
        break;
    }
  }
  return out;
}

namespace {

template <typename F>
void ForEachKnnPair(const SanGraph& g, KnnKind kind, F&& f) {
  if (kind == KnnKind::kSocial) {
    for (std::size_t i = 0; i < g.social_node_count(); ++i) {
      const SocialId u = MakeSocial(i);
      const double key = static_cast<double>(g.out_degree(u));
      for (SocialId v : g.out(u)) f(key, static_cast<double>(g.in_degree(v)));
    }
    return;
  }
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    const auto members = g.members(MakeAttr(a));
    const double key = static_cast<double>(members.size());
    for (SocialId u : members) f(key, static_cast<double>(g.attributes(u).size()));
  }
}

}  // namespace

std::vector<KnnPoint> KnnCurve(const SanGraph& g, KnnKind kind) {
  std::map<double, std::pair<double, std::uint64_t>> acc;
  ForEachKnnPair(g, kind, [&](double key, double value) {
    auto& [sum, n] = acc[key];
    sum += value;
    ++n;
  });
  std::vector<KnnPoint> out;
  out.reserve(acc.size());
  for (const auto& [key, sn] : acc) {
    out.push_back({key, sn.first / static_cast<double>(sn.second), sn.second});
  }
  return out;
}

std::vector<KnnPoint> LogBin(const std::vector<KnnPoint>& curve, double base) {
  Require(base > 1, ErrorCode::kInvalidArgument, "log bin base must exceed 1");
  std::map<long, KnnPoint> bins;
  for (const KnnPoint& p : curve) {
    const long bin = p.degree < 1 ? -1 : static_cast<long>(std::floor(std::log(p.degree) / std::log(base) + 1e-12));
    KnnPoint& b = bins[bin];
    b.degree += p.degree * static_cast<double>(p.count);
    b.mean += p.mean * static_cast<double>(p.count);
    b.count += p.count;
  }
  std::vector<KnnPoint> out;
  for (auto& [bin, b] : bins) {
    if (b.count == 0) continue;
    b.degree /= static_cast<double>(b.count);
    b.mean /= static_cast<double>(b.count);
    out.push_back(b);
  }
  return out;
}

double Assortativity(const SanGraph& g, KnnKind kind) {
  double n = 0, sx = 0, sy = 0;
  ForEachKnnPair(g, kind, [&](double x, double y) {
    n += 1;
    sx += x;
    sy += y;
  });
  Require(n >= 2, ErrorCode::kUndefined, "assortativity needs at least two links");
  const double mx = sx / n, my = sy / n;
  double cxx = 0, cyy = 0, cxy = 0;
  ForEachKnnPair(g, kind, [&](double x, double y) {
    cxx += (x - mx) * (x - mx);
    cyy += (y - my) * (y - my);
    cxy += (x - mx) * (y - my);
  });
  Require(cxx > 0 && cyy > 0, ErrorCode::kUndefined, "assortativity undefined: zero variance");
  return std::clamp(cxy / std::sqrt(cxx * cyy), -1.0, 1.0);
}

double Percentile(const std::vector<double>& sorted, double q) {
  Require(!sorted.empty(), ErrorCode::kEmpty, "percentile of an empty sample");
  Require(q >= 0 && q <= 1, ErrorCode::kInvalidArgument, "percentile outside [0, 1]");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace sanet
