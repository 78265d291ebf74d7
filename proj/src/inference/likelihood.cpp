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


#include "sanet/inference/likelihood.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include "sanet/core/san_graph.hpp"
#include "sanet/util/error.hpp"

namespace sanet {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double AttributeFactor(Attachment variant, double beta, std::size_t common) {
  switch (variant) {
    case Attachment::kUniform:
    case Attachment::kPA:
      return 1.0;
    case Attachment::kLAPA:
      return 1.0 + beta * static_cast<double>(common);
    case Attachment::kPAPA:
      if (beta == 0.0) return 1.0;
      return 1.0 + std::pow(static_cast<double>(common), beta);
  }
  return 1.0;
}

// (d + 1)^alpha with a per-alpha table grown on demand.
class IndegreeWeights {
 public:
  explicit IndegreeWeights(double alpha) : alpha_(alpha) {}

  double operator()(std::size_t d) {
    while (table_.size() <= d) {
      table_.push_back(std::pow(static_cast<double>(table_.size() + 1), alpha_));
    }
    return table_[d];
  }

 private:
  double alpha_;
  std::vector<double> table_;
};

struct CellResult {
  std::vector<std::vector<double>> loglik;
  double l_uniform = 0;
  std::size_t scored = 0;
  std::size_t impossible = 0;
};

CellResult ScoreAttachment(const EventLog& log, Attachment variant,
                           const std::vector<double>& alphas, const std::vector<double>& betas) {
  const std::vector<LinkRole> roles = ClassifyLinkRoles(log);
  const bool flat_indegree = variant == Attachment::kUniform;
  std::vector<IndegreeWeights> weights;
  for (double a : alphas) weights.emplace_back(flat_indegree ? 0.0 : a);
  std::vector<long double> total(alphas.size(), 0.0L);
  std::vector<long double> sums(alphas.size() * betas.size(), 0.0L);
  long double uniform = 0.0L;

  SanGraph g;
  std::vector<std::uint32_t> common;
  std::vector<SocialId> touched;
  std::vector<long double> mass_by_common;
  CellResult out;

  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const Event& e = log.events[i];
    if (roles[i] == LinkRole::kAttachment) {
      const SocialId u = MakeSocial(e.u);
      const SocialId v = MakeSocial(e.target);
      if (!g.HasSocialNode(u) || !g.HasSocialNode(v)) {
        Fail(ErrorCode::kReplay, "social link with unknown endpoint at event " +
                                     std::to_string(i));
      }
      if (u == v || g.HasSocialLink(u, v)) {
        ++out.impossible;
      } else {
        ++out.scored;
        const std::size_t n = g.social_node_count();
        if (common.size() < n) common.resize(n, 0);
        touched.clear();
        const bool uses_attributes =
            variant == Attachment::kLAPA || variant == Attachment::kPAPA;
        for (AttrId a : uses_attributes ? g.attributes(u) : std::span<const AttrId>{}) {
          for (SocialId m : g.members(a)) {
            if (m == u) continue;
            if (common[m.index()]++ == 0) touched.push_back(m);
          }
        }
        const std::size_t max_common = uses_attributes ? g.attributes(u).size() : 0;
        const std::size_t c_v = common[v.index()];
        uniform -= std::log(static_cast<long double>(n - 1 - g.out_degree(u)));

        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
          IndegreeWeights& w = weights[ai];
          long double excluded = w(g.in_degree(u));
          for (SocialId x : g.out(u)) excluded += w(g.in_degree(x));
          mass_by_common.assign(max_common + 1, 0.0L);
          for (SocialId m : touched) {
            if (g.HasSocialLink(u, m)) continue;
            mass_by_common[common[m.index()]] += w(g.in_degree(m));
          }
          const long double base = total[ai] - excluded;
          const double log_w_v = std::log(w(g.in_degree(v)));
          for (std::size_t bi = 0; bi < betas.size(); ++bi) {
            const double h0 = AttributeFactor(variant, betas[bi], 0);
            long double z = h0 * base;
            for (std::size_t c = 1; c <= max_common; ++c) {
              if (mass_by_common[c] == 0.0L) continue;
              z += mass_by_common[c] * (AttributeFactor(variant, betas[bi], c) - h0);
            }
            const double log_h = std::log(AttributeFactor(variant, betas[bi], c_v));
            sums[ai * betas.size() + bi] += log_w_v + log_h - std::log(z);
          }
        }
        for (SocialId m : touched) common[m.index()] = 0;
      }
    }
    if (e.kind == EventKind::kArrive) {
      ApplyEvent(g, log, e);
      for (std::size_t ai = 0; ai < alphas.size(); ++ai) total[ai] += weights[ai](0);
    } else if (e.kind == EventKind::kSocialLink) {
      const SocialId v = MakeSocial(e.target);
      const std::size_t before = g.HasSocialNode(v) ? g.in_degree(v) : 0;
      ApplyEvent(g, log, e);
      if (g.in_degree(v) != before) {
        for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
          total[ai] += static_cast<long double>(weights[ai](before + 1)) - weights[ai](before);
        }
      }
    } else {
      ApplyEvent(g, log, e);
    }
  }

  out.loglik.assign(alphas.size(), std::vector<double>(betas.size(), 0.0));
  for (std::size_t ai = 0; ai < alphas.size(); ++ai) {
    for (std::size_t bi = 0; bi < betas.size(); ++bi) {
      out.loglik[ai][bi] = static_cast<double>(sums[ai * betas.size() + bi]);
    }
  }
  out.l_uniform = static_cast<double>(uniform);
  return out;
}

// Scratch marks keyed by social id, cleared through the touched list.
struct Marks {
  std::vector<double> value;
  std::vector<SocialId> touched;

  void Add(SocialId v, double x) {
    if (value.size() <= v.index()) value.resize(v.index() + 1, 0.0);
    if (value[v.index()] == 0.0) touched.push_back(v);
    value[v.index()] += x;
  }
  double Get(SocialId v) const { return v.index() < value.size() ? value[v.index()] : 0.0; }
  void Clear() {
    for (SocialId v : touched) value[v.index()] = 0.0;
    touched.clear();
  }
};

double ClosureEventLogLik(const SanGraph& g, SocialId u, SocialId v, Closure variant, double fc,
                          Marks& q) {
  if (u == v || g.HasSocialLink(u, v)) return kNegInf;
  q.Clear();
  const auto social = g.neighbors(u);
  if (variant == Closure::kBaseline) {
    q.Add(u, 1.0);
    for (SocialId w : social) {
      q.Add(w, 1.0);
      for (SocialId y : g.neighbors(w)) q.Add(y, 1.0);
    }
    if (q.Get(v) == 0.0) return kNegInf;
    std::size_t size = 0;
    for (SocialId y : q.touched) {
      if (y != u && !g.HasSocialLink(u, y)) ++size;
    }
    return -std::log(static_cast<double>(size));
  }
  const auto attrs = g.attributes(u);
  const double attr_weight = variant == Closure::kRRSAN ? fc : 0.0;
  const double total =
      static_cast<double>(social.size()) + attr_weight * static_cast<double>(attrs.size());
  if (total <= 0.0) return kNegInf;
  for (SocialId w : social) {
    const auto second = g.neighbors(w);
    const double share = 1.0 / (total * static_cast<double>(second.size()));
    for (SocialId y : second) q.Add(y, share);
  }
  if (attr_weight > 0.0) {
    for (AttrId a : attrs) {
      const auto second = g.members(a);
      const double share = attr_weight / (total * static_cast<double>(second.size()));
      for (SocialId y : second) q.Add(y, share);
    }
  }
  const double q_v = q.Get(v);
  if (q_v <= 0.0) return kNegInf;
  double valid = 0.0;
  for (SocialId y : q.touched) {
    if (y != u && !g.HasSocialLink(u, y)) valid += q.value[y.index()];
  }
  return std::log(q_v) - std::log(valid);
}

}  // namespace

std::vector<LinkRole> ClassifyLinkRoles(const EventLog& log) {
  bool annotated = false;
  for (const Event& e : log.events) {
    if (e.kind == EventKind::kSocialLink && e.cause != LinkCause::kUnknown) {
      annotated = true;
      break;
    }
  }
  std::vector<LinkRole> roles(log.events.size(), LinkRole::kNone);
  std::vector<bool> has_out;
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const Event& e = log.events[i];
    if (e.kind != EventKind::kSocialLink) continue;
    if (annotated) {
      if (e.cause == LinkCause::kFirst) roles[i] = LinkRole::kAttachment;
      if (e.cause == LinkCause::kClosure) roles[i] = LinkRole::kClosure;
      continue;
    }
    if (has_out.size() <= e.u) has_out.resize(e.u + 1, false);
    roles[i] = has_out[e.u] ? LinkRole::kClosure : LinkRole::kAttachment;
    has_out[e.u] = true;
  }
  return roles;
}

LogLik AttachmentLogLik(const EventLog& log, Attachment variant, double alpha, double beta) {
  const CellResult r = ScoreAttachment(log, variant, {alpha}, {beta});
  return LogLik{r.loglik[0][0], r.scored, r.impossible};
}

std::pair<std::size_t, std::size_t> LikelihoodGrid::Best() const {
  std::pair<std::size_t, std::size_t> best{0, 0};
  for (std::size_t i = 0; i < loglik.size(); ++i) {
    for (std::size_t j = 0; j < loglik[i].size(); ++j) {
      if (loglik[i][j] > loglik[best.first][best.second]) best = {i, j};
    }
  }
  return best;
}

LikelihoodGrid ComputeLikelihoodGrid(const EventLog& log, const std::vector<double>& alphas,
                                     const std::vector<double>& betas, Attachment variant) {
  const auto one = std::find(alphas.begin(), alphas.end(), 1.0);
  const auto zero = std::find(betas.begin(), betas.end(), 0.0);
  Require(one != alphas.end() && zero != betas.end(), ErrorCode::kInvalidArgument,
          "likelihood grid must contain alpha = 1 and beta = 0");
  LikelihoodGrid grid;
  grid.variant = variant;
  grid.alphas = alphas;
  grid.betas = betas;
  CellResult r = ScoreAttachment(log, variant, alphas, betas);
  grid.loglik = std::move(r.loglik);
  grid.l_uniform = r.l_uniform;
  grid.scored = r.scored;
  grid.impossible = r.impossible;
  grid.l_pa = grid.loglik[one - alphas.begin()][zero - betas.begin()];
  grid.improvement.assign(alphas.size(), std::vector<double>(betas.size(), 0.0));
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    for (std::size_t j = 0; j < betas.size(); ++j) {
      const double gain = grid.l_pa == 0.0 ? 0.0 : (grid.l_pa - grid.loglik[i][j]) / grid.l_pa;
      grid.improvement[i][j] = gain == 0.0 ? 0.0 : gain;  // no -0
    }
  }
  return grid;
}

ClosureMix ClassifyClosures(const EventLog& log) {
  SanGraph g;
  ClosureMix mix;
  std::size_t triadic = 0, focal = 0, both = 0, neither = 0;
  std::vector<bool> mark;
  std::vector<bool> attr_mark;
  for (const Event& e : log.events) {
    if (e.kind == EventKind::kSocialLink && e.cause != LinkCause::kInit &&
        g.HasSocialNode(MakeSocial(e.u)) && g.HasSocialNode(MakeSocial(e.target))) {
      const SocialId u = MakeSocial(e.u);
      const SocialId v = MakeSocial(e.target);
      mark.assign(g.social_node_count(), false);
      for (SocialId w : g.neighbors(u)) mark[w.index()] = true;
      bool t = false;
      for (SocialId w : g.neighbors(v)) {
        if (mark[w.index()]) {
          t = true;
          break;
        }
      }
      attr_mark.assign(g.attribute_node_count(), false);
      for (AttrId a : g.attributes(u)) attr_mark[a.index()] = true;
      bool f = false;
      for (AttrId a : g.attributes(v)) {
        if (attr_mark[a.index()]) {
          f = true;
          break;
        }
      }
      ++mix.links;
      triadic += t;
      focal += f;
      both += t && f;
      neither += !t && !f;
    }
    ApplyEvent(g, log, e);
  }
  if (mix.links > 0) {
    const double n = static_cast<double>(mix.links);
    mix.triadic = static_cast<double>(triadic) / n;
    mix.focal = static_cast<double>(focal) / n;
    mix.both = static_cast<double>(both) / n;
    mix.neither = static_cast<double>(neither) / n;
  }
  return mix;
}

ClosureScore ClosureLogLik(const EventLog& log, Closure variant, double fc) {
  Require(fc >= 0.0, ErrorCode::kInvalidArgument, "fc must be nonnegative");
  const std::vector<LinkRole> roles = ClassifyLinkRoles(log);
  SanGraph g;
  Marks q;
  ClosureScore score;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    const Event& e = log.events[i];
    if (roles[i] == LinkRole::kClosure) {
      const SocialId u = MakeSocial(e.u);
      const SocialId v = MakeSocial(e.target);
      if (!g.HasSocialNode(u) || !g.HasSocialNode(v)) {
        Fail(ErrorCode::kReplay, "social link with unknown endpoint at event " +
                                     std::to_string(i));
      }
      const double l = ClosureEventLogLik(g, u, v, variant, fc, q);
      score.events.push_back(l);
      if (std::isfinite(l)) {
        ++score.total.scored;
        sum += l;
      } else {
        ++score.total.impossible;
      }
    }
    ApplyEvent(g, log, e);
  }
  score.total.loglik = static_cast<double>(sum);
  return score;
}

std::vector<double> CommonSupportTotals(const std::vector<ClosureScore>& scores) {
  std::vector<double> totals(scores.size(), 0.0);
  if (scores.empty()) return totals;
  const std::size_t n = scores.front().events.size();
  for (const auto& s : scores) {
    Require(s.events.size() == n, ErrorCode::kInvalidArgument,
            "closure scores cover different event counts");
  }
  std::vector<long double> sums(scores.size(), 0.0L);
  for (std::size_t i = 0; i < n; ++i) {
    bool finite = true;
    for (const auto& s : scores) finite = finite && std::isfinite(s.events[i]);
    if (!finite) continue;
    for (std::size_t k = 0; k < scores.size(); ++k) sums[k] += scores[k].events[i];
  }
  for (std::size_t k = 0; k < scores.size(); ++k) totals[k] = static_cast<double>(sums[k]);
  return totals;
}

}  // namespace sanet
