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
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sanet {

enum class Family { kDiscreteLognormal, kPowerLaw };

const char* FamilyName(Family f);

// A fitted discrete distribution on k >= xmin. The lognormal pmf is
// proportional to exp(-(ln k - mu)^2 / (2 sigma^2)) / k, the power law to
// k^-alpha.
struct DistFit {
  Family family = Family::kDiscreteLognormal;
  double mu = 0;
  double sigma = 0;
  double alpha = 0;
  std::uint64_t xmin = 1;
  double loglik = 0;
  std::size_t n = 0;  // observations >= xmin used by the fit
  double gof = 0;     // Kolmogorov-Smirnov distance over the fitted range

  // log p(k) for k >= xmin.
  double LogPmf(std::uint64_t k) const;
};

// log sum_{k >= xmin} exp(-(ln k - mu)^2 / (2 sigma^2)) / k. Terms up to
// xmin + 4095 are summed exactly; the rest uses the Euler-Maclaurin tail
// sigma sqrt(2 pi) (1 - Phi((ln K - mu) / sigma)) plus boundary corrections.
double DiscreteLognormalLogNormalizer(double mu, double sigma, std::uint64_t xmin = 1);

// log of the Hurwitz zeta function sum_{k >= xmin} k^-alpha, alpha > 1.
double PowerLawLogNormalizer(double alpha, std::uint64_t xmin);

double DiscreteLognormalLogLik(std::span<const std::uint64_t> sample, double mu, double sigma,
                               std::uint64_t xmin = 1);
double PowerLawLogLik(std::span<const std::uint64_t> sample, double alpha, std::uint64_t xmin);

// Maximum likelihood over (mu, sigma) for the observations >= xmin. Throws
// Error(kDegenerateSample) for fewer than two such observations or a single
// distinct value, and Error(kInvalidArgument) for zeros. `min_mu` bounds the
// location from below.
DistFit FitDiscreteLognormal(std::span<const std::uint64_t> sample, std::uint64_t xmin = 1,
                             double min_mu = -std::numeric_limits<double>::infinity());

struct PowerLawOptions {
  std::optional<std::uint64_t> xmin;  // fixed xmin, otherwise KS minimization
  std::size_t min_tail = 50;          // capped at the sample size
  double max_xmin_quantile = 1.0;     // candidate xmin values up to this quantile
};

// Discrete power-law MLE for alpha given xmin, with xmin chosen by the
// smallest KS distance among candidates whose tail holds at least min_tail
// observations and two distinct values.
DistFit FitPowerLaw(std::span<const std::uint64_t> sample, const PowerLawOptions& options = {});

enum class Preference { kLognormal, kPowerLaw, kInconclusive };

const char* PreferenceName(Preference p);

struct FitComparison {
  Preference preferred = Preference::kInconclusive;
  double loglik_ratio = 0;  // sum of log p_powerlaw - log p_lognormal over the tail
  double statistic = 0;     // loglik_ratio / (sd * sqrt(n))
  double p_value = 1;
  std::size_t n = 0;
  DistFit powerlaw;
  DistFit lognormal;  // fitted to the same range
};

// A power law is the mu -> -inf, sigma -> inf limit of the discrete lognormal,
// so full-range comparisons bound the lognormal location at mu >= 0 (median
// of the underlying continuous law at least 1). Tail comparisons leave it
// free.
enum class CompareRange {
  kFull,  // both families fitted from the smallest observed value
  kTail,  // the power-law tail chosen by FitPowerLaw(options)
};

// Likelihood-ratio comparison with a normal approximation for the sign of
// the per-observation log ratio. Fewer than 10 observations or
// p >= significance gives kInconclusive.
FitComparison CompareFits(std::span<const std::uint64_t> sample, double significance = 0.1,
                          CompareRange range = CompareRange::kFull,
                          const PowerLawOptions& options = {});

}  // namespace sanet
