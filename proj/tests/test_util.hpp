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

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "sanet/core/san_graph.hpp"

namespace sanet::testing {

// Random SAN with independent link probabilities.
inline SanGraph RandomSan(std::size_t n_social, std::size_t n_attr, double p_social,
                          double p_attr, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SanGraph g;
  for (std::size_t i = 0; i < n_social; ++i) g.AddSocialNode();
  for (std::size_t j = 0; j < n_attr; ++j) {
    g.AddAttributeNode(AttrTypeId{static_cast<std::uint16_t>(j % g.attribute_type_count())});
  }
  for (std::size_t i = 0; i < n_social; ++i) {
    for (std::size_t j = 0; j < n_social; ++j) {
      if (i != j && u(rng) < p_social) g.AddSocialLink(MakeSocial(i), MakeSocial(j));
    }
    for (std::size_t j = 0; j < n_attr; ++j) {
      if (u(rng) < p_attr) g.AddAttributeLink(MakeSocial(i), MakeAttr(j));
    }
  }
  return g;
}

// Three standard deviations of a binomial proportion estimate.
inline double Binomial3Sigma(double p, double n) { return 3.0 * std::sqrt(p * (1.0 - p) / n); }

}  // namespace sanet::testing
