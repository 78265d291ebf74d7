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
#include <map>
#include <string>
#include <vector>

namespace sanet {

enum class Attachment { kUniform, kPA, kPAPA, kLAPA };
enum class Closure { kBaseline, kRR, kRRSAN };
enum class SleepFamily { kExponential, kFixed };

const char* AttachmentName(Attachment a);
const char* ClosureName(Closure c);
const char* SleepFamilyName(SleepFamily s);
Attachment ParseAttachment(const std::string& text);
Closure ParseClosure(const std::string& text);
SleepFamily ParseSleepFamily(const std::string& text);

// Knobs of the attribute-augmented growth process.
struct GenParams {
  std::int64_t T = 10000;     // arrival steps, one social node per step
  double mu_a = 1.0;          // ln attribute-degree location
  double sigma_a = 0.5;       // ln attribute-degree scale
  double p = 0.3;             // probability an attribute link creates a new attribute
  double alpha = 1.0;         // indegree exponent for attachment
  double beta = 200.0;        // attribute weight for attachment
  double mu_l = 3.0;          // lifetime location (time steps)
  double sigma_l = 1.0;       // lifetime scale
  double m_s = 1.0;           // sleep scale: mean sleep is m_s / outdegree
  double fc = 0.1;            // weight of attribute neighbors in the closure first hop
  Attachment attachment = Attachment::kLAPA;
  Closure closure = Closure::kRRSAN;
  SleepFamily sleep = SleepFamily::kExponential;
  bool lapa_heuristic = false;
  std::uint64_t seed = 1;
  int init_social = 5;
  int init_attr = 5;
  // Abort with Error(kResourceLimit) once the graph holds this many social
  // links; 0 disables the check.
  std::uint64_t max_social_links = 0;

  // Throws Error(kInvalidArgument).
  void Validate() const;

  // Stable key=value rendering, one key per line, in declaration order.
  std::vector<std::string> ToConfigLines() const;
  // Applies recognised keys; unknown keys throw Error(kInvalidArgument).
  void Apply(const std::map<std::string, std::string>& kv);
};

// Parses "key=value" lines; '#' starts a comment.
std::map<std::string, std::string> ParseKeyValueText(const std::string& text);

}  // namespace sanet
