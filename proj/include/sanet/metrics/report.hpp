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
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sanet/core/san_graph.hpp"
#include "sanet/metrics/clustering.hpp"
#include "sanet/metrics/distance.hpp"

namespace sanet {

// counts, reciprocity, density, clustering, assortativity, distance,
// attribute_distance, degree, knn, percentiles.
const std::vector<std::string>& MetricGroups();

struct MeasureOptions {
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t distance_sources = 0;            // 0 = every node
  std::size_t attribute_distance_sources = 0;  // 0 = every attribute
  DiameterMode diameter = DiameterMode::kExact;
  HyperAnfConfig anf;
  bool approx_clustering = false;
  ApproxConfig approx;
  std::size_t percentile_top_k = 10;
  std::vector<std::string> groups = MetricGroups();  // unknown names throw
};

// Named values and curves for one graph. A scalar without a value is
// undefined on this graph; `undefined` holds the reason.
struct MetricReport {
  std::map<std::string, std::optional<double>> scalars;
  std::map<std::string, std::string> undefined;
  std::map<std::string, std::vector<std::pair<double, double>>> curves;
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
};

MetricReport Measure(const SanGraph& g, const MeasureOptions& options = {});

nlohmann::ordered_json ToJson(const MetricReport& report);
// `metric,degree,value` rows, curves in name order.
void WriteCurvesCsv(std::ostream& os, const MetricReport& report);

}  // namespace sanet
