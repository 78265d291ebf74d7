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

#include "sanet/generator/truncated_normal.hpp"

#include <cmath>
#include <numbers>

namespace sanet {

double StdNormalPdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double StdNormalCdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double StdNormalSurvival(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double InverseMillsRatio(double x) {
  if (x > 25.0) {
    // erfc underflows; asymptotic series.
    const double x2 = x * x;
    return x + 1.0 / x - 2.0 / (x * x2) + 10.0 / (x2 * x2 * x);
  }
  return StdNormalPdf(x) / StdNormalSurvival(x);
}

double TruncatedNormal::Sample(Rng& rng) const {
  const double lo = gamma();  // standardized lower bound
  if (lo < 0.5) {
    while (true) {
      const double z = rng.Normal(0.0, 1.0);
      if (z >= lo) return mu + sigma * z;
    }
  }
  const double lambda = 0.5 * (lo + std::sqrt(lo * lo + 4.0));
  while (true) {
    const double z = lo + rng.Exponential(1.0 / lambda);
    const double accept = std::exp(-0.5 * (z - lambda) * (z - lambda));
    if (rng.Uniform() <= accept) return mu + sigma * z;
  }
}

}  // namespace sanet
