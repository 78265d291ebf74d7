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

#include "sanet/metrics/report.hpp"

#include <algorithm>
#include <functional>

#include "sanet/metrics/attribute.hpp"
#include "sanet/metrics/structure.hpp"
#include "sanet/util/error.hpp"
#include "sanet/util/random.hpp"

namespace sanet {
namespace {

void Scalar(MetricReport& r, const std::string& name, const std::function<double()>& f) {
  try {
    r.scalars[name] = f();
  } catch (const Error& e) {
    r.scalars[name] = std::nullopt;
    r.undefined[name] = e.what();
  }
}

std::vector<std::pair<double, double>> Points(const std::vector<KnnPoint>& curve) {
  std::vector<std::pair<double, double>> out;
  for (const KnnPoint& p : curve) out.emplace_back(p.degree, p.mean);
  return out;
}

std::vector<std::pair<double, double>> Histogram(const std::vector<std::uint64_t>& seq) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (auto k : seq) ++counts[k];
  std::vector<std::pair<double, double>> out;
  for (auto [k, c] : counts) out.emplace_back(static_cast<double>(k), static_cast<double>(c));
  return out;
}

std::vector<std::pair<double, double>> Fractions(const DistanceHistogram& h) {
  std::vector<std::pair<double, double>> out;
  const auto f = h.Fractions();
  for (std::size_t d = 1; d < f.size(); ++d) out.emplace_back(static_cast<double>(d), f[d]);
  return out;
}

}  // namespace

const std::vector<std::string>& MetricGroups() {
  static const std::vector<std::string> groups{
      "counts", "reciprocity", "density", "clustering",  "assortativity",
      "distance", "attribute_distance", "degree", "knn", "percentiles"};
  return groups;
}

MetricReport Measure(const SanGraph& g, const MeasureOptions& options) {
  const auto& known = MetricGroups();
  for (const auto& name : options.groups) {
    Require(std::find(known.begin(), known.end(), name) != known.end(),
            ErrorCode::kInvalidArgument, "unknown metric group '" + name + "'");
  }
  auto want = [&](const char* name) {
    return std::find(options.groups.begin(), options.groups.end(), name) != options.groups.end();
  };
  MetricReport r;
  if (want("counts")) {
    r.scalars["social_nodes"] = static_cast<double>(g.social_node_count());
    r.scalars["attribute_nodes"] = static_cast<double>(g.attribute_node_count());
    r.scalars["social_links"] = static_cast<double>(g.social_link_count());
    r.scalars["attribute_links"] = static_cast<double>(g.attribute_link_count());
  }
  if (want("reciprocity")) Scalar(r, "reciprocity", [&] { return Reciprocity(g); });
  if (want("density")) {
    Scalar(r, "social_density", [&] { return SocialDensity(g); });
    Scalar(r, "attribute_density", [&] { return AttributeDensity(g); });
  }

  const auto social = AllSocialNodes(g);
  const auto attrs = AllAttributeNodes(g);
  ApproxConfig approx = options.approx;
  approx.seed = DeriveSeed(options.seed, 11);
  approx.workers = options.workers;
  if (want("clustering")) {
    Scalar(r, "social_clustering", [&] {
      return options.approx_clustering
                 ? ClusteringApprox(g, std::span<const SocialId>(social), approx)
                 : ClusteringExact(g, std::span<const SocialId>(social), options.workers);
    });
    Scalar(r, "attribute_clustering", [&] {
      return options.approx_clustering
                 ? ClusteringApprox(g, std::span<const AttrId>(attrs), approx)
                 : ClusteringExact(g, std::span<const AttrId>(attrs), options.workers);
    });
    for (const auto& [type, c] : PerAttributeTypeClustering(g, options.workers)) {
      r.scalars["attribute_clustering." + type] = c;
    }
    r.curves["clustering.social_by_degree"] =
        Points(ClusteringByDegree(g, std::span<const SocialId>(social)));
    r.curves["clustering.attribute_by_degree"] =
        Points(ClusteringByDegree(g, std::span<const AttrId>(attrs)));
  }
  if (want("assortativity")) {
    Scalar(r, "assortativity_social", [&] { return Assortativity(g, KnnKind::kSocial); });
    Scalar(r, "assortativity_attribute", [&] { return Assortativity(g, KnnKind::kAttribute); });
  }

  if (want("distance")) {
    const auto dist = DistanceDistribution(g, options.distance_sources,
                                           DeriveSeed(options.seed, 12), options.workers);
    r.curves["distance"] = Fractions(dist);
    if (options.diameter == DiameterMode::kExact) {
      Scalar(r, "effective_diameter", [&] { return EffectiveDiameterFromHistogram(dist); });
    } else {
      HyperAnfConfig anf = options.anf;
      anf.seed = DeriveSeed(options.seed, 13);
      anf.workers = options.workers;
      Scalar(r, "effective_diameter",
             [&] { return EffectiveDiameter(g, DiameterMode::kProbabilistic, anf); });
    }
  }
  if (want("attribute_distance")) {
    const auto adist = AttributeDistanceDistribution(g, options.attribute_distance_sources,
                                                     DeriveSeed(options.seed, 14), options.workers);
    r.curves["attribute_distance"] = Fractions(adist);
    Scalar(r, "attribute_effective_diameter",
           [&] { return EffectiveDiameterFromHistogram(adist); });
  }

  if (want("degree")) {
    r.curves["degree.social_out"] = Histogram(DegreeSequence(g, DegreeKind::kSocialOut));
    r.curves["degree.social_in"] = Histogram(DegreeSequence(g, DegreeKind::kSocialIn));
    r.curves["degree.attr_of_social"] = Histogram(DegreeSequence(g, DegreeKind::kAttrOfSocial));
    r.curves["degree.social_of_attr"] = Histogram(DegreeSequence(g, DegreeKind::kSocialOfAttr));
  }
  if (want("knn")) {
    const auto knn_s = KnnCurve(g, KnnKind::kSocial);
    const auto knn_a = KnnCurve(g, KnnKind::kAttribute);
    r.curves["knn.social"] = Points(knn_s);
    r.curves["knn.attribute"] = Points(knn_a);
    r.curves["knn.social.log2"] = Points(LogBin(knn_s));
    r.curves["knn.attribute.log2"] = Points(LogBin(knn_a));
  }

  if (!want("percentiles")) return r;
  auto& pct = r.tables["outdegree_percentiles_by_attribute"];
  pct = nlohmann::ordered_json::object();
  for (const auto& type : g.attribute_types()) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& v : DegreePercentilesByAttributeValue(g, type, options.percentile_top_k)) {
      rows.push_back({{"attribute", v.attribute.value},
                      {"label", v.label},
                      {"members", v.members},
                      {"p25", v.p25},
                      {"p50", v.p50},
                      {"p75", v.p75}});
    }
    pct[type] = rows;
  }
  return r;
}

nlohmann::ordered_json ToJson(const MetricReport& report) {
  nlohmann::ordered_json j;
  auto& scalars = j["scalars"];
  scalars = nlohmann::ordered_json::object();
  for (const auto& [name, v] : report.scalars) {
    scalars[name] = v.has_value() ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
  }
  j["undefined"] = report.undefined;
  auto& curves = j["curves"];
  curves = nlohmann::ordered_json::object();
  for (const auto& [name, pts] : report.curves) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [x, y] : pts) arr.push_back({x, y});
    curves[name] = arr;
  }
  j["tables"] = report.tables;
  return j;
}

void WriteCurvesCsv(std::ostream& os, const MetricReport& report) {
  os << "metric,degree,value\n";
  for (const auto& [name, pts] : report.curves) {
    for (const auto& [x, y] : pts) {
      os << name << ',' << nlohmann::json(x).dump() << ',' << nlohmann::json(y).dump() << '\n';
    }
  }
}

}  // namespace sanet
