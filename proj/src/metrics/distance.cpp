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

#include "sanet/metrics/distance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "sanet/util/error.hpp"
#include "sanet/util/parallel.hpp"
#include "sanet/util/random.hpp"

namespace sanet {
namespace {

// Distinct indices drawn uniformly from [0, n), in draw order; all of [0, n)
// when k is 0 or at least n.
std::vector<std::size_t> SampleIndices(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0 || k >= n) return idx;
  Rng rng(seed);
  for (std::size_t i = 0; i < k; ++i) std::swap(idx[i], idx[i + rng.Below(n - i)]);
  idx.resize(k);
  return idx;
}

void MultiSourceBfs(const SanGraph& g, const std::vector<SocialId>& sources,
                    std::vector<std::int32_t>& dist, std::vector<SocialId>& queue) {
  dist.assign(g.social_node_count(), -1);
  queue.clear();
  for (SocialId s : sources) {
    if (dist[s.index()] == 0) continue;
    dist[s.index()] = 0;
    queue.push_back(s);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const SocialId u = queue[head];
    const std::int32_t next = dist[u.index()] + 1;
    for (SocialId v : g.out(u)) {
      if (dist[v.index()] >= 0) continue;
      dist[v.index()] = next;
      queue.push_back(v);
    }
  }
}

void Accumulate(DistanceHistogram& into, const std::vector<std::uint64_t>& counts) {
  if (into.counts.size() < counts.size()) into.counts.resize(counts.size(), 0);
  for (std::size_t d = 0; d < counts.size(); ++d) into.counts[d] += counts[d];
}

double HllAlpha(int m) {
  if (m == 16) return 0.673;
  if (m == 32) return 0.697;
  if (m == 64) return 0.709;
  return 0.7213 / (1.0 + 1.079 / m);
}

double HllEstimate(const std::uint8_t* reg, int m, double alpha) {
  double inv = 0;
  int zeros = 0;
  for (int j = 0; j < m; ++j) {
    inv += std::ldexp(1.0, -static_cast<int>(reg[j]));
    zeros += reg[j] == 0;
  }
  const double md = static_cast<double>(m);
  const double raw = alpha * md * md / inv;
  if (raw <= 2.5 * md && zeros > 0) return md * std::log(md / zeros);
  return raw;
}

std::vector<double> HyperAnfRun(const SanGraph& g, const HyperAnfConfig& cfg,
                                std::uint64_t seed) {
  const std::size_t n = g.social_node_count();
  const int m = cfg.registers;
  const int b = std::countr_zero(static_cast<unsigned>(m));
  const double alpha = HllAlpha(m);
  std::vector<std::uint8_t> cur(n * m, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const std::uint64_t h = Mix64(v ^ seed);
    const std::size_t j = h >> (64 - b);
    const std::uint64_t rest = h << b;
    const int rank = rest == 0 ? 64 - b + 1 : std::countl_zero(rest) + 1;
    cur[v * m + j] = static_cast<std::uint8_t>(std::min(rank, 64 - b + 1));
  }
  std::vector<std::uint8_t> next = cur;
  std::vector<double> est(n);
  std::vector<char> changed(n);
  const int workers = std::max(1, cfg.workers);
  const std::size_t chunks = std::min<std::size_t>(n, static_cast<std::size_t>(workers) * 8);
  auto estimate_all = [&](const std::vector<std::uint8_t>& regs) {
    ParallelFor(chunks, workers, [&](std::size_t c) {
      for (std::size_t v = c * n / chunks; v < (c + 1) * n / chunks; ++v) {
        est[v] = HllEstimate(&regs[v * m], m, alpha);
      }
    });
    return std::accumulate(est.begin(), est.end(), 0.0);
  };

  std::vector<double> n_t{estimate_all(cur)};
  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    ParallelFor(chunks, workers, [&](std::size_t c) {
      for (std::size_t v = c * n / chunks; v < (c + 1) * n / chunks; ++v) {
        std::uint8_t* dst = &next[v * m];
        std::copy_n(&cur[v * m], m, dst);
        bool any = false;
        for (SocialId w : g.out(MakeSocial(v))) {
          const std::uint8_t* src = &cur[w.index() * m];
          for (int j = 0; j < m; ++j) {
            if (src[j] > dst[j]) {
              dst[j] = src[j];
              any = true;
            }
          }
        }
        changed[v] = any;
      }
    });
    cur.swap(next);
    if (std::none_of(changed.begin(), changed.end(), [](char c) { return c != 0; })) break;
    const double total = std::max(estimate_all(cur), n_t.back());
    const double prev = n_t.back();
    n_t.push_back(total);
    if (prev > 0 && total / prev - 1.0 < cfg.tolerance) break;
  }
  return n_t;
}

}  // namespace

std::uint64_t DistanceHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

std::vector<double> DistanceHistogram::Fractions() const {
  const double t = static_cast<double>(total());
  std::vector<double> out(counts.size(), 0.0);
  if (t == 0) return out;
  for (std::size_t d = 0; d < counts.size(); ++d) out[d] = static_cast<double>(counts[d]) / t;
  return out;
}

std::vector<std::int32_t> BfsDistances(const SanGraph& g, SocialId source) {
  g.CheckSocial(source);
  std::vector<std::int32_t> dist;
  std::vector<SocialId> queue;
  MultiSourceBfs(g, {source}, dist, queue);
  return dist;
}

DistanceHistogram DistanceDistribution(const SanGraph& g, std::size_t source_sample,
                                       std::uint64_t seed, int workers) {
  const auto sources = SampleIndices(g.social_node_count(), source_sample, seed);
  const std::size_t chunks = std::min<std::size_t>(sources.size(), 64);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  ParallelFor(chunks, workers, [&](std::size_t c) {
    std::vector<std::int32_t> dist;
    std::vector<SocialId> queue;
    auto& counts = partial[c];
    for (std::size_t i = c * sources.size() / chunks; i < (c + 1) * sources.size() / chunks; ++i) {
      MultiSourceBfs(g, {MakeSocial(sources[i])}, dist, queue);
      for (SocialId v : queue) {
        const auto d = static_cast<std::size_t>(dist[v.index()]);
        if (d == 0) continue;
        if (counts.size() <= d) counts.resize(d + 1, 0);
        ++counts[d];
      }
    }
  });
  DistanceHistogram h;
  h.counts.assign(1, 0);
  h.sources = sources.size();
  for (const auto& c : partial) Accumulate(h, c);
  return h;
}

double InterpolatedPercentile(const std::vector<double>& cumulative, double q) {
  std::size_t first = 0;
  for (std::size_t d = 1; d < cumulative.size(); ++d) {
    if (cumulative[d] > 0) {
      first = d;
      break;
    }
  }
  Require(first > 0, ErrorCode::kUnreachable, "no finite distances");
  for (std::size_t d = first; d < cumulative.size(); ++d) {
    if (cumulative[d] + 1e-12 < q) continue;
    if (d == first) return static_cast<double>(d);
    const double lo = cumulative[d - 1];
    const double hi = cumulative[d];
    if (hi <= lo) return static_cast<double>(d);
    return static_cast<double>(d - 1) + (q - lo) / (hi - lo);
  }
  return static_cast<double>(cumulative.size() - 1);
}

double EffectiveDiameterFromHistogram(const DistanceHistogram& h) {
  const double total = static_cast<double>(h.total());
  Require(total > 0, ErrorCode::kUnreachable, "no finite distances");
  std::vector<double> cumulative(h.counts.size(), 0.0);
  std::uint64_t run = 0;
  for (std::size_t d = 1; d < h.counts.size(); ++d) {
    run += h.counts[d];
    cumulative[d] = static_cast<double>(run) / total;
  }
  return InterpolatedPercentile(cumulative);
}

std::vector<double> HyperAnf(const SanGraph& g, const HyperAnfConfig& config) {
  Require(config.registers >= 16 && config.registers <= 65536 &&
              std::has_single_bit(static_cast<unsigned>(config.registers)),
          ErrorCode::kInvalidArgument, "registers must be a power of two in [16, 65536]");
  Require(config.runs >= 1, ErrorCode::kInvalidArgument, "runs must be positive");
  Require(config.tolerance > 0, ErrorCode::kInvalidArgument, "tolerance must be positive");
  std::vector<std::vector<double>> runs;
  std::size_t length = 0;
  for (int r = 0; r < config.runs; ++r) {
    runs.push_back(HyperAnfRun(g, config, DeriveSeed(config.seed, static_cast<std::uint64_t>(r))));
    length = std::max(length, runs.back().size());
  }
  // Converged runs stay at their final value.
  std::vector<double> mean(length, 0.0);
  for (const auto& n_t : runs) {
    for (std::size_t t = 0; t < length; ++t) mean[t] += n_t[std::min(t, n_t.size() - 1)];
  }
  for (double& v : mean) v /= config.runs;
  return mean;
}

double EffectiveDiameterFromNeighborhood(const std::vector<double>& n_t) {
  Require(n_t.size() >= 2 && n_t.back() > n_t.front(), ErrorCode::kUnreachable,
          "no finite distances");
  const double total = n_t.back() - n_t.front();
  std::vector<double> cumulative(n_t.size(), 0.0);
  for (std::size_t t = 1; t < n_t.size(); ++t) {
    cumulative[t] = std::clamp((n_t[t] - n_t.front()) / total, cumulative[t - 1], 1.0);
  }
  return InterpolatedPercentile(cumulative);
}

double EffectiveDiameter(const SanGraph& g, DiameterMode mode, const HyperAnfConfig& config) {
  if (mode == DiameterMode::kExact) {
    return EffectiveDiameterFromHistogram(DistanceDistribution(g, 0, config.seed, config.workers));
  }
  return EffectiveDiameterFromNeighborhood(HyperAnf(g, config));
}

std::uint64_t AttributeDistance(const SanGraph& g, AttrId a, AttrId b) {
  g.CheckAttribute(a);
  g.CheckAttribute(b);
  const auto ma = g.members(a);
  const auto mb = g.members(b);
  Require(!ma.empty() && !mb.empty(), ErrorCode::kEmpty, "attribute without members");
  std::vector<std::int32_t> dist;
  std::vector<SocialId> queue;
  MultiSourceBfs(g, {ma.begin(), ma.end()}, dist, queue);
  std::int32_t best = -1;
  for (SocialId v : mb) {
    const std::int32_t d = dist[v.index()];
    if (d >= 0 && (best < 0 || d < best)) best = d;
  }
  Require(best >= 0, ErrorCode::kUnreachable, "attributes are not connected");
  return static_cast<std::uint64_t>(best) + 1;
}

DistanceHistogram AttributeDistanceDistribution(const SanGraph& g, std::size_t source_sample,
                                                std::uint64_t seed, int workers) {
  std::vector<AttrId> populated;
  for (std::size_t a = 0; a < g.attribute_node_count(); ++a) {
    if (!g.members(MakeAttr(a)).empty()) populated.push_back(MakeAttr(a));
  }
  const auto picks = SampleIndices(populated.size(), source_sample, seed);
  const std::size_t chunks = std::min<std::size_t>(picks.size(), 64);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  ParallelFor(chunks, workers, [&](std::size_t c) {
    std::vector<std::int32_t> dist;
    std::vector<SocialId> queue;
    auto& counts = partial[c];
    for (std::size_t i = c * picks.size() / chunks; i < (c + 1) * picks.size() / chunks; ++i) {
      const AttrId a = populated[picks[i]];
      const auto ma = g.members(a);
      MultiSourceBfs(g, {ma.begin(), ma.end()}, dist, queue);
      for (AttrId b : populated) {
        if (b == a) continue;
        std::int32_t best = -1;
        for (SocialId v : g.members(b)) {
          const std::int32_t d = dist[v.index()];
          if (d >= 0 && (best < 0 || d < best)) best = d;
        }
        if (best < 0) continue;
        const auto k = static_cast<std::size_t>(best) + 1;
        if (counts.size() <= k) counts.resize(k + 1, 0);
        ++counts[k];
      }
    }
  });
  DistanceHistogram h;
  h.counts.assign(1, 0);
  h.sources = picks.size();
  for (const auto& c : partial) Accumulate(h, c);
  return h;
}

}  // namespace sanet
