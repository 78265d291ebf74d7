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

#include "sanet/inference/fit.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_min.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "sanet/util/error.hpp"

namespace sanet {
namespace {

constexpr std::uint64_t kExactTerms = 4096;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct GslQuiet {
  GslQuiet() { gsl_set_error_handler_off(); }
} const gsl_quiet;

double LogAddExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(-std::abs(a - b)));
}

double LogStdNormalSurvival(double x) {
  if (x < 25.0) return std::log(0.5 * std::erfc(x / std::numbers::sqrt2));
  // Mills ratio asymptotics: 1 - Phi(x) ~ phi(x) / x * (1 - 1/x^2 + 3/x^4).
  const double x2 = x * x;
  return -0.5 * x2 - 0.5 * std::log(2 * std::numbers::pi) - std::log(x) +
         std::log1p(-1.0 / x2 + 3.0 / (x2 * x2));
}

double LogLognormalTerm(double lk, double mu, double sigma) {
  const double z = (lk - mu) / sigma;
  return -lk - 0.5 * z * z;
}

// log sum_{k >= k0} f(k) by Euler-Maclaurin, accurate for k0 in the thousands.
double LogLognormalTail(std::uint64_t k0, double mu, double sigma) {
  const double k = static_cast<double>(k0);
  const double lk = std::log(k);
  const double integral = std::log(sigma * std::sqrt(2 * std::numbers::pi)) +
                          LogStdNormalSurvival((lk - mu) / sigma);
  const double c = 0.5 + (1.0 + (lk - mu) / (sigma * sigma)) / (12.0 * k);
  if (c <= 0) return integral;
  return LogAddExp(integral, LogLognormalTerm(lk, mu, sigma) + std::log(c));
}

struct Moments {
  double n = 0;
  double s1 = 0;  // sum ln k
  double s2 = 0;  // sum (ln k)^2
};

Moments LogMoments(std::span<const std::uint64_t> sample, std::uint64_t xmin) {
  Moments m;
  for (std::uint64_t k : sample) {
    Require(k >= 1, ErrorCode::kInvalidArgument, "sample values must be positive");
    if (k < xmin) continue;
    const double lk = std::log(static_cast<double>(k));
    m.n += 1;
    m.s1 += lk;
    m.s2 += lk * lk;
  }
  return m;
}

double LognormalLogLikFromMoments(const Moments& m, double mu, double sigma,
                                  std::uint64_t xmin) {
  const double sq = m.s2 - 2 * mu * m.s1 + m.n * mu * mu;
  return -m.s1 - sq / (2 * sigma * sigma) - m.n * DiscreteLognormalLogNormalizer(mu, sigma, xmin);
}

std::vector<std::uint64_t> SortedTail(std::span<const std::uint64_t> sample, std::uint64_t xmin) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t k : sample) {
    if (k >= xmin) v.push_back(k);
  }
  std::sort(v.begin(), v.end());
  return v;
}

// max over observed values of |F_emp(x) - F(x)|, where tail(x) = P(K > x).
template <typename Tail>
double KsDistance(const std::vector<std::uint64_t>& sorted, Tail tail) {
  const double n = static_cast<double>(sorted.size());
  double d = 0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double model = 1.0 - tail(sorted[i]);
    d = std::max(d, std::abs(static_cast<double>(j) / n - model));
    i = j;
  }
  return d;
}

double LognormalKs(const std::vector<std::uint64_t>& sorted, double mu, double sigma,
                   std::uint64_t xmin) {
  const double log_z = DiscreteLognormalLogNormalizer(mu, sigma, xmin);
  const std::uint64_t cut = xmin + kExactTerms;
  // suffix[i] = P(K >= xmin + i) for the exactly summed range.
  std::vector<double> suffix(kExactTerms + 1, 0.0);
  suffix[kExactTerms] = std::exp(LogLognormalTail(cut, mu, sigma) - log_z);
  for (std::size_t i = kExactTerms; i-- > 0;) {
    const double lk = std::log(static_cast<double>(xmin + i));
    suffix[i] = suffix[i + 1] + std::exp(LogLognormalTerm(lk, mu, sigma) - log_z);
  }
  return KsDistance(sorted, [&](std::uint64_t x) {
    if (x + 1 < cut) return suffix[x + 1 - xmin];
    return std::exp(LogLognormalTail(x + 1, mu, sigma) - log_z);
  });
}

double PowerLawKs(const std::vector<std::uint64_t>& sorted, double alpha, std::uint64_t xmin) {
  const double log_z = PowerLawLogNormalizer(alpha, xmin);
  return KsDistance(sorted, [&](std::uint64_t x) {
    return std::exp(PowerLawLogNormalizer(alpha, x + 1) - log_z);
  });
}

struct PowerLawMle {
  double alpha;
  double loglik;
};

PowerLawMle FitAlpha(double n, double sum_log, std::uint64_t xmin) {
  auto negll = [&](double a) { return a * sum_log + n * PowerLawLogNormalizer(a, xmin); };
  // The negative log-likelihood is convex in alpha; bracket on a coarse grid.
  std::vector<double> grid;
  for (double a = 1.0 + 1e-6; a < 60; a = 1.0 + (a - 1.0) * 1.35 + 0.01) grid.push_back(a);
  std::size_t best = 0;
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals[i] = negll(grid[i]);
    if (vals[i] < vals[best]) best = i;
  }
  if (best == 0 || best + 1 == grid.size()) return {grid[best], -vals[best]};
  struct Ctx {
    decltype(negll)* f;
  } ctx{&negll};
  gsl_function fn;
  fn.function = [](double a, void* p) { return (*static_cast<Ctx*>(p)->f)(a); };
  fn.params = &ctx;
  gsl_min_fminimizer* m = gsl_min_fminimizer_alloc(gsl_min_fminimizer_brent);
  gsl_min_fminimizer_set_with_values(m, &fn, grid[best], vals[best], grid[best - 1],
                                     vals[best - 1], grid[best + 1], vals[best + 1]);
  for (int iter = 0; iter < 200; ++iter) {
    gsl_min_fminimizer_iterate(m);
    const double lo = gsl_min_fminimizer_x_lower(m);
    const double hi = gsl_min_fminimizer_x_upper(m);
    if (gsl_min_test_interval(lo, hi, 1e-10, 1e-12) == GSL_SUCCESS) break;
  }
  const double a = gsl_min_fminimizer_x_minimum(m);
  const double f = gsl_min_fminimizer_f_minimum(m);
  gsl_min_fminimizer_free(m);
  return {a, -f};
}

}  // namespace

const char* FamilyName(Family f) {
  return f == Family::kPowerLaw ? "powerlaw" : "discrete_lognormal";
}

const char* PreferenceName(Preference p) {
  switch (p) {
    case Preference::kLognormal:
      return "lognormal";
    case Preference::kPowerLaw:
      return "powerlaw";
    case Preference::kInconclusive:
      return "inconclusive";
  }
  return "?";
}

double DistFit::LogPmf(std::uint64_t k) const {
  if (k < xmin) return kNegInf;
  const double lk = std::log(static_cast<double>(k));
  if (family == Family::kPowerLaw) return -alpha * lk - PowerLawLogNormalizer(alpha, xmin);
  return LogLognormalTerm(lk, mu, sigma) - DiscreteLognormalLogNormalizer(mu, sigma, xmin);
}

double DiscreteLognormalLogNormalizer(double mu, double sigma, std::uint64_t xmin) {
  Require(sigma > 0 && std::isfinite(mu), ErrorCode::kInvalidArgument,
          "lognormal needs finite mu and positive sigma");
  Require(xmin >= 1, ErrorCode::kInvalidArgument, "xmin must be positive");
  double peak = kNegInf;
  std::vector<double> terms(kExactTerms);
  for (std::uint64_t i = 0; i < kExactTerms; ++i) {
    terms[i] = LogLognormalTerm(std::log(static_cast<double>(xmin + i)), mu, sigma);
    peak = std::max(peak, terms[i]);
  }
  double acc = 0;
  for (double t : terms) acc += std::exp(t - peak);
  return LogAddExp(peak + std::log(acc), LogLognormalTail(xmin + kExactTerms, mu, sigma));
}

double PowerLawLogNormalizer(double alpha, std::uint64_t xmin) {
  Require(alpha > 1, ErrorCode::kInvalidArgument, "power law needs alpha > 1");
  const double q = static_cast<double>(xmin);
  gsl_sf_result r;
  if (gsl_sf_hzeta_e(alpha, q, &r) == GSL_SUCCESS && r.val > 1e-290) return std::log(r.val);
  // Euler-Maclaurin in log space when the value underflows.
  return -alpha * std::log(q) + std::log(q / (alpha - 1) + 0.5 + alpha / (12 * q));
}

double DiscreteLognormalLogLik(std::span<const std::uint64_t> sample, double mu, double sigma,
                               std::uint64_t xmin) {
  return LognormalLogLikFromMoments(LogMoments(sample, xmin), mu, sigma, xmin);
}

double PowerLawLogLik(std::span<const std::uint64_t> sample, double alpha, std::uint64_t xmin) {
  const Moments m = LogMoments(sample, xmin);
  return -alpha * m.s1 - m.n * PowerLawLogNormalizer(alpha, xmin);
}

DistFit FitDiscreteLognormal(std::span<const std::uint64_t> sample, std::uint64_t xmin,
                             double min_mu) {
  Require(xmin >= 1, ErrorCode::kInvalidArgument, "xmin must be positive");
  const Moments m = LogMoments(sample, xmin);
  Require(m.n >= 2, ErrorCode::kDegenerateSample, "lognormal fit needs two observations");
  const auto sorted = SortedTail(sample, xmin);
  Require(sorted.front() != sorted.back(), ErrorCode::kDegenerateSample,
          "lognormal fit needs two distinct values");

  // With a finite bound, mu = min_mu + softplus(theta).
  const bool bounded = std::isfinite(min_mu);
  struct Ctx {
    const Moments* m;
    std::uint64_t xmin;
    bool bounded;
    double min_mu;
    double Mu(double theta) const {
      if (!bounded) return theta;
      return min_mu + (theta > 30 ? theta : std::log1p(std::exp(theta)));
    }
  } ctx{&m, xmin, bounded, min_mu};
  gsl_multimin_function fn;
  fn.n = 2;
  fn.params = &ctx;
  fn.f = [](const gsl_vector* x, void* p) {
    const auto* c = static_cast<Ctx*>(p);
    const double mu = c->Mu(gsl_vector_get(x, 0));
    const double log_sigma = gsl_vector_get(x, 1);
    if (!std::isfinite(mu) || std::abs(log_sigma) > 20 || std::abs(mu) > 1e4) return 1e300;
    const double ll = LognormalLogLikFromMoments(*c->m, mu, std::exp(log_sigma), c->xmin);
    return std::isfinite(ll) ? -ll : 1e300;
  };
  const double mean = m.s1 / m.n;
  const double var = std::max(m.s2 / m.n - mean * mean, 1e-4);
  gsl_vector* x = gsl_vector_alloc(2);
  gsl_vector* step = gsl_vector_alloc(2);
  double start = mean;
  if (bounded) {
    const double gap = std::max(mean - min_mu, 0.1);
    start = gap > 30 ? gap : std::log(std::expm1(gap));
  }
  gsl_vector_set(x, 0, start);
  gsl_vector_set(x, 1, 0.5 * std::log(var));
  gsl_vector_set_all(step, 0.3);
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 2);
  gsl_multimin_fminimizer_set(s, &fn, x, step);
  for (int iter = 0; iter < 5000; ++iter) {
    if (gsl_multimin_fminimizer_iterate(s) != GSL_SUCCESS) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(s), 1e-9) == GSL_SUCCESS) break;
  }
  DistFit fit;
  fit.family = Family::kDiscreteLognormal;
  fit.mu = ctx.Mu(gsl_vector_get(s->x, 0));
  fit.sigma = std::exp(gsl_vector_get(s->x, 1));
  fit.loglik = -s->fval;
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(x);
  gsl_vector_free(step);
  fit.xmin = xmin;
  fit.n = sorted.size();
  fit.gof = LognormalKs(sorted, fit.mu, fit.sigma, xmin);
  return fit;
}

DistFit FitPowerLaw(std::span<const std::uint64_t> sample, const PowerLawOptions& options) {
  std::vector<std::uint64_t> sorted(sample.begin(), sample.end());
  for (std::uint64_t k : sorted) {
    Require(k >= 1, ErrorCode::kInvalidArgument, "sample values must be positive");
  }
  std::sort(sorted.begin(), sorted.end());
  Require(sorted.size() >= 2, ErrorCode::kDegenerateSample, "power-law fit needs two observations");
  Require(sorted.front() != sorted.back(), ErrorCode::kDegenerateSample,
          "power-law fit needs two distinct values");

  // suffix sums of ln k over the sorted sample
  std::vector<double> suffix_log(sorted.size() + 1, 0.0);
  for (std::size_t i = sorted.size(); i-- > 0;) {
    suffix_log[i] = suffix_log[i + 1] + std::log(static_cast<double>(sorted[i]));
  }
  const std::size_t min_tail = std::max<std::size_t>(2, std::min(options.min_tail, sorted.size()));
  const double cap_q = std::clamp(options.max_xmin_quantile, 0.0, 1.0);
  const std::uint64_t cap =
      sorted[static_cast<std::size_t>(std::floor(cap_q * static_cast<double>(sorted.size() - 1)))];

  DistFit best;
  best.family = Family::kPowerLaw;
  bool found = false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i] == sorted[i - 1]) continue;
    const std::uint64_t xmin = sorted[i];
    if (options.xmin && xmin != *options.xmin) continue;
    const std::size_t tail = sorted.size() - i;
    if (!options.xmin && (tail < min_tail || xmin > cap)) break;
    if (sorted.back() == xmin) break;
    const auto mle = FitAlpha(static_cast<double>(tail), suffix_log[i], xmin);
    const std::vector<std::uint64_t> tail_values(sorted.begin() + static_cast<std::ptrdiff_t>(i),
                                                 sorted.end());
    const double ks = PowerLawKs(tail_values, mle.alpha, xmin);
    if (!found || ks < best.gof) {
      found = true;
      best.alpha = mle.alpha;
      best.xmin = xmin;
      best.loglik = mle.loglik;
      best.n = tail;
      best.gof = ks;
    }
  }
  if (!found && options.xmin) {
    // xmin between observed values
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), *options.xmin);
    const auto i = static_cast<std::size_t>(it - sorted.begin());
    Require(sorted.size() - i >= 2 && *it != sorted.back(), ErrorCode::kDegenerateSample,
            "power-law tail needs two distinct values");
    const auto mle = FitAlpha(static_cast<double>(sorted.size() - i), suffix_log[i], *options.xmin);
    best.alpha = mle.alpha;
    best.xmin = *options.xmin;
    best.loglik = mle.loglik;
    best.n = sorted.size() - i;
    best.gof = PowerLawKs({it, sorted.end()}, mle.alpha, *options.xmin);
    found = true;
  }
  Require(found, ErrorCode::kDegenerateSample, "no admissible power-law tail");
  return best;
}

FitComparison CompareFits(std::span<const std::uint64_t> sample, double significance,
                          CompareRange range, const PowerLawOptions& options) {
  FitComparison c;
  PowerLawOptions pl = options;
  if (range == CompareRange::kFull) {
    Require(!sample.empty(), ErrorCode::kDegenerateSample, "empty sample");
    pl.xmin = *std::min_element(sample.begin(), sample.end());
  }
  c.powerlaw = FitPowerLaw(sample, pl);
  const auto tail = SortedTail(sample, c.powerlaw.xmin);
  c.lognormal = FitDiscreteLognormal(
      tail, c.powerlaw.xmin,
      range == CompareRange::kFull ? 0.0 : -std::numeric_limits<double>::infinity());
  c.n = tail.size();
  std::map<std::uint64_t, double> cache;
  double sum = 0, sum2 = 0;
  for (std::uint64_t k : tail) {
    auto [it, fresh] = cache.try_emplace(k, 0.0);
    if (fresh) it->second = c.powerlaw.LogPmf(k) - c.lognormal.LogPmf(k);
    sum += it->second;
    sum2 += it->second * it->second;
  }
  const double n = static_cast<double>(c.n);
  c.loglik_ratio = sum;
  const double var = std::max(sum2 / n - (sum / n) * (sum / n), 0.0);
  if (var > 0) {
    c.statistic = sum / std::sqrt(var * n);
    c.p_value = std::erfc(std::abs(c.statistic) / std::numbers::sqrt2);
  }
  if (c.n < 10 || var <= 0 || c.p_value >= significance) {
    c.preferred = Preference::kInconclusive;
  } else {
    c.preferred = sum > 0 ? Preference::kPowerLaw : Preference::kLognormal;
  }
  return c;
}

}  // namespace sanet
