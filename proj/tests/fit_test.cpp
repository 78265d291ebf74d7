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

#include <cmath>
#include <random>
#include <tuple>
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "sanet/inference/fit.hpp"
#include "sanet/util/error.hpp"

namespace sanet {
namespace {

// Inverse-CDF sampler over an explicitly normalized pmf table on 1..kmax.
class TableSampler {
 public:
  template <typename F>
  TableSampler(F weight, std::uint64_t kmax) {
    cdf_.reserve(kmax);
    double acc = 0;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
      acc += weight(static_cast<double>(k));
      cdf_.push_back(acc);
    }
    for (double& c : cdf_) c /= acc;
  }
  std::uint64_t Draw(std::mt19937_64& rng) {
    const double u = std::uniform_real_distribution<double>(0, 1)(rng);
    return static_cast<std::uint64_t>(std::lower_bound(cdf_.begin(), cdf_.end(), u) - cdf_.begin()) + 1;
  }

 private:
  std::vector<double> cdf_;
};

double LognormalWeight(double k, double mu, double sigma) {
  const double z = (std::log(k) - mu) / sigma;
  return std::exp(-0.5 * z * z) / k;
}

TEST_CASE("lognormal normalizer matches brute-force summation") {
  for (auto [mu, sigma, xmin] : {std::tuple{2.0, 0.7, 1ULL}, std::tuple{0.5, 1.5, 1ULL},
                                 std::tuple{4.0, 1.2, 3ULL}, std::tuple{-1.0, 2.0, 1ULL}}) {
    long double z = 0;
    for (std::uint64_t k = xmin; k <= 1000000; ++k) z += LognormalWeight(double(k), mu, sigma);
    CHECK(DiscreteLognormalLogNormalizer(mu, sigma, xmin) ==
          doctest::Approx(std::log(double(z))).epsilon(1e-9));
  }
}

TEST_CASE("lognormal loglik of a small sample") {
  const std::vector<std::uint64_t> sample{1, 2, 3, 4, 5, 8, 13};
  const double mu = 1.1, sigma = 0.9;
  long double z = 0;
  for (std::uint64_t k = 1; k <= 1000000; ++k) z += LognormalWeight(double(k), mu, sigma);
  double expect = 0;
  for (auto k : sample) expect += std::log(LognormalWeight(double(k), mu, sigma) / double(z));
  CHECK(DiscreteLognormalLogLik(sample, mu, sigma) == doctest::Approx(expect).epsilon(1e-10));
}

TEST_CASE("lognormal fit recovers known parameters") {
  TableSampler s([](double k) { return LognormalWeight(k, 2.0, 0.7); }, 100000);
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> sample(100000);
  for (auto& k : sample) k = s.Draw(rng);
  const DistFit fit = FitDiscreteLognormal(sample);
  CHECK(std::abs(fit.mu - 2.0) <= 0.02);
  CHECK(std::abs(fit.sigma - 0.7) <= 0.02);
  CHECK(fit.gof < 0.01);
  CHECK(fit.loglik == doctest::Approx(DiscreteLognormalLogLik(sample, fit.mu, fit.sigma)));
  CHECK(fit.loglik >= DiscreteLognormalLogLik(sample, 2.0, 0.7));
}

TEST_CASE("degenerate samples are rejected") {
  const std::vector<std::uint64_t> ones(10, 1);
  try {
    FitDiscreteLognormal(ones);
    FAIL("expected DegenerateSample");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerateSample);
  }
  CHECK_THROWS_AS(FitPowerLaw(ones), Error);
  const std::vector<std::uint64_t> zero{0, 1, 2};
  CHECK_THROWS_AS(FitDiscreteLognormal(zero), Error);
}

TEST_CASE("power-law normalizer and loglik match direct series") {
  for (auto [alpha, xmin] : {std::pair{2.5, 1ULL}, std::pair{3.0, 4ULL}, std::pair{1.8, 10ULL}}) {
    long double z = 0;
    for (std::uint64_t k = xmin; k <= 2000000; ++k) z += std::pow((long double)k, -alpha);
    // remainder by the integral bound
    z += std::pow(2000000.5L, 1 - alpha) / (alpha - 1);
    CHECK(PowerLawLogNormalizer(alpha, xmin) == doctest::Approx(std::log(double(z))).epsilon(1e-7));
  }
  const std::vector<std::uint64_t> sample{1, 1, 2, 3, 7};
  double expect = 0;
  for (auto k : sample) expect += -2.5 * std::log(double(k)) - PowerLawLogNormalizer(2.5, 1);
  CHECK(PowerLawLogLik(sample, 2.5, 1) == doctest::Approx(expect));
  CHECK(PowerLawLogNormalizer(50, 100000) < -500);
}

TEST_CASE("power-law fit recovers the exponent") {
  TableSampler s([](double k) { return std::pow(k, -3.0); }, 2000000);
  std::mt19937_64 rng(2);
  std::vector<std::uint64_t> sample(100000);
  for (auto& k : sample) k = s.Draw(rng);
  const DistFit fit = FitPowerLaw(sample);
  CHECK(std::abs(fit.alpha - 3.0) <= 0.05);
  CHECK(fit.n >= 50);

  PowerLawOptions fixed;
  fixed.xmin = 1;
  const DistFit f1 = FitPowerLaw(sample, fixed);
  CHECK(f1.xmin == 1);
  CHECK(f1.n == sample.size());
  CHECK(std::abs(f1.alpha - 3.0) <= 0.05);
  CHECK(f1.loglik == doctest::Approx(PowerLawLogLik(sample, f1.alpha, 1)));
  CHECK(f1.loglik >= PowerLawLogLik(sample, 3.0, 1));
  // p = 0 in (2 - p) / (1 - p)
  CHECK((2.0 - 0.0) / (1.0 - 0.0) == 2.0);
}

TEST_CASE("fit comparison picks the generating family") {
  std::mt19937_64 rng(3);
  TableSampler ln([](double k) { return LognormalWeight(k, 3.0, 0.6); }, 200000);
  std::vector<std::uint64_t> a(20000);
  for (auto& k : a) k = ln.Draw(rng);
  CHECK(CompareFits(a).preferred == Preference::kLognormal);

  TableSampler pl([](double k) { return std::pow(k, -2.2); }, 2000000);
  std::vector<std::uint64_t> b(20000);
  for (auto& k : b) k = pl.Draw(rng);
  const auto cb = CompareFits(b);
  CHECK(cb.preferred == Preference::kPowerLaw);

  const std::vector<std::uint64_t> tiny{3, 9};
  CHECK(CompareFits(tiny).preferred == Preference::kInconclusive);
  CHECK(CompareFits(a, 0.1, CompareRange::kTail).n < a.size());
}

}  // namespace
}  // namespace sanet
