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

#include "sanet/generator/generator.hpp"

namespace sanet {

// Knobs of the co-evolution baseline. It is a reconstruction: directed
// preferential attachment plus random-random closure for social links, with
// attributes adopted dynamically from social neighbors.
struct ZhelParams {
  std::int64_t T = 10000;
  std::uint64_t seed = 1;
  double lifetime_mean = 20.0;  // exponential lifetime
  double m_s = 4.0;             // mean sleep is m_s / outdegree
  double p_new = 0.2;           // an adoption creates a fresh attribute
  double adopt = 0.5;           // probability a wake also adopts an attribute
  int init_social = 5;
  int init_attr = 5;
  std::uint64_t max_social_links = 0;

  void Validate() const;
};

// Arrival: first link by PA, then one attribute copied from the target (or a
// fresh one with probability p_new). Each wake adds an RR closure link and,
// with probability `adopt`, another attribute copied from a random social
// neighbor. Lifetimes are exponential, which gives power-law out-degrees.
GenerationResult GenerateBaselineZhel(const ZhelParams& params);

}  // namespace sanet
