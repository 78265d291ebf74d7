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

#include "sanet/util/random.hpp"

namespace sanet {

double StdNormalPdf(double x);
double StdNormalCdf(double x);
// 1 - Φ(x), accurate in the upper tail.
double StdNormalSurvival(double x);
// φ(x) / (1 - Φ(x)), the inverse Mills ratio.
double InverseMillsRatio(double x);

// Normal(mu, sigma²) restricted to [0, ∞).
struct TruncatedNormal {
  double mu = 0.0;
  double sigma = 1.0;

  double gamma() const { return -mu / sigma; }
  double g() const { return InverseMillsRatio(gamma()); }
  double delta() const { return g() * (g() - gamma()); }
  double mean() const { return mu + sigma * g(); }
  double variance() const { return sigma * sigma * (1.0 - delta()); }

  // Plain rejection when the acceptance rate is reasonable, otherwise an
  // exponential-proposal tail sampler.
  double Sample(Rng& rng) const;
};

}  // namespace sanet
