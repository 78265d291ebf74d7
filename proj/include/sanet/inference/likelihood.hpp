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

#include <cstddef>
#include <utility>
#include <vector>

#include "sanet/core/event_log.hpp"
#include "sanet/generator/params.hpp"

namespace sanet {

// Social links scored as attachment choices: cause kFirst, or the first
// outgoing link of each node when the log carries no causes at all.
// Closure links: cause kClosure, or every later outgoing link of a node in an
// unannotated log. kInit links are never scored.
enum class LinkRole { kNone, kAttachment, kClosure };

// Role of every event in `log` (kNone for non-social events).
std::vector<LinkRole> ClassifyLinkRoles(const EventLog& log);

// Event-level log-likelihood. Impossible events (target excluded from the
// candidate set) are left out of `loglik` and counted instead.
struct LogLik {
  double loglik = 0;
  std::size_t scored = 0;
  std::size_t impossible = 0;
};

// Sum over attachment events of log f(u, v) / sum_c f(u, c), where c ranges
// over every social node present before the event other than u and u's
// current targets, and f is the generator's attachment weight. For kPAPA,
// beta = 0 gives a constant attribute factor. Throws Error(kReplay) for an
// unreplayable log.
LogLik AttachmentLogLik(const EventLog& log, Attachment variant, double alpha, double beta);

struct LikelihoodGrid {
  Attachment variant = Attachment::kLAPA;
  std::vector<double> alphas;
  std::vector<double> betas;
  std::vector<std::vector<double>> loglik;       // [alpha][beta]
  std::vector<std::vector<double>> improvement;  // (l_pa - l) / l_pa
  double l_pa = 0;       // the (1, 0) cell
  double l_uniform = 0;  // uniform choice among eligible candidates
  std::size_t scored = 0;
  std::size_t impossible = 0;

  // Indices of the largest loglik; ties keep the first cell in row order.
  std::pair<std::size_t, std::size_t> Best() const;
};

// Every cell from one replay of the log. Both grids must contain 1 and 0
// respectively; cell (1, 0) is the reference, so its improvement is exactly 0.
LikelihoodGrid ComputeLikelihoodGrid(const EventLog& log, const std::vector<double>& alphas,
                                     const std::vector<double>& betas,
                                     Attachment variant = Attachment::kLAPA);

// Shares of social links (init links excluded) whose endpoints, just before
// the link, have a common social neighbor (triadic) and/or a common attribute
// (focal). Triadic and focal overlap, so the four shares need not sum to 1.
struct ClosureMix {
  std::size_t links = 0;
  double triadic = 0;
  double focal = 0;
  double both = 0;
  double neither = 0;
};

ClosureMix ClassifyClosures(const EventLog& log);

// Per-event closure log-likelihoods. events[i] is -inf for an impossible
// event; those are excluded from `total.loglik`.
struct ClosureScore {
  LogLik total;
  std::vector<double> events;
};

// Probability of each observed closure target under the variant's two-hop
// choice, conditioned on the choice being a valid target (not u, not already
// linked). RR and RR-SAN enumerate every first-hop/second-hop path exactly;
// Baseline is uniform over social neighbors and two-hop nodes.
ClosureScore ClosureLogLik(const EventLog& log, Closure variant, double fc = 0.0);

// Totals over the events that every score assigns a finite value.
std::vector<double> CommonSupportTotals(const std::vector<ClosureScore>& scores);

}  // namespace sanet
