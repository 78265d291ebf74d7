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

#include "sanet/generator/params.hpp"

#include <cmath>
#include <sstream>

#include "sanet/core/tsv_io.hpp"
#include "sanet/util/error.hpp"

namespace sanet {
namespace {

double ToDouble(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    Fail(ErrorCode::kInvalidArgument, key + ": expected a number, got '" + v + "'");
  }
}

std::int64_t ToInt(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    long long d = std::stoll(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    Fail(ErrorCode::kInvalidArgument, key + ": expected an integer, got '" + v + "'");
  }
}

bool ToBool(const std::string& key, const std::string& v) {
  if (v == "1" || v == "true") return true;
  if (v == "0" || v == "false") return false;
  Fail(ErrorCode::kInvalidArgument, key + ": expected true/false, got '" + v + "'");
}

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const char* AttachmentName(Attachment a) {
  switch (a) {
    case Attachment::kUniform: return "uniform";
    case Attachment::kPA: return "pa";
    case Attachment::kPAPA: return "papa";
    case Attachment::kLAPA: return "lapa";
  }
  return "?";
}

const char* ClosureName(Closure c) {
  switch (c) {
    case Closure::kBaseline: return "baseline";
    case Closure::kRR: return "rr";
    case Closure::kRRSAN: return "rr-san";
  }
  return "?";
}

const char* SleepFamilyName(SleepFamily s) {
  return s == SleepFamily::kExponential ? "exponential" : "fixed";
}

Attachment ParseAttachment(const std::string& text) {
  for (auto a : {Attachment::kUniform, Attachment::kPA, Attachment::kPAPA, Attachment::kLAPA}) {
    if (text == AttachmentName(a)) return a;
  }
  Fail(ErrorCode::kInvalidArgument, "unknown attachment model '" + text + "'");
}

Closure ParseClosure(const std::string& text) {
  for (auto c : {Closure::kBaseline, Closure::kRR, Closure::kRRSAN}) {
    if (text == ClosureName(c)) return c;
  }
  if (text == "rrsan") return Closure::kRRSAN;
  Fail(ErrorCode::kInvalidArgument, "unknown closure model '" + text + "'");
}

SleepFamily ParseSleepFamily(const std::string& text) {
  if (text == "exponential") return SleepFamily::kExponential;
  if (text == "fixed") return SleepFamily::kFixed;
  Fail(ErrorCode::kInvalidArgument, "unknown sleep family '" + text + "'");
}

void GenParams::Validate() const {
  auto check = [](bool ok, const std::string& msg) {
    Require(ok, ErrorCode::kInvalidArgument, msg);
  };
  check(T >= 0, "T must be nonnegative");
  check(std::isfinite(mu_a), "mu_a must be finite");
  check(sigma_a > 0 && std::isfinite(sigma_a), "sigma_a must be positive");
  check(p >= 0 && p <= 1, "p must lie in [0, 1]");
  check(std::isfinite(alpha) && std::isfinite(beta), "alpha and beta must be finite");
  check(beta >= 0, "beta must be nonnegative");
  check(std::isfinite(mu_l), "mu_l must be finite");
  check(sigma_l > 0 && std::isfinite(sigma_l), "sigma_l must be positive");
  check(m_s > 0 && std::isfinite(m_s), "m_s must be positive");
  check(fc >= 0 && std::isfinite(fc), "fc must be nonnegative");
  check(init_social >= 1, "init_social must be at least 1");
  check(init_attr >= 0, "init_attr must be nonnegative");
}

std::vector<std::string> GenParams::ToConfigLines() const {
  auto num = [](double d) { return FormatTime(d); };
  return {
      "T=" + std::to_string(T),
      "mu_a=" + num(mu_a),
      "sigma_a=" + num(sigma_a),
      "p=" + num(p),
      "alpha=" + num(alpha),
      "beta=" + num(beta),
      "mu_l=" + num(mu_l),
      "sigma_l=" + num(sigma_l),
      "m_s=" + num(m_s),
      "fc=" + num(fc),
      std::string("attachment=") + AttachmentName(attachment),
      std::string("closure=") + ClosureName(closure),
      std::string("sleep=") + SleepFamilyName(sleep),
      std::string("lapa_heuristic=") + (lapa_heuristic ? "true" : "false"),
      "seed=" + std::to_string(seed),
      "init_social=" + std::to_string(init_social),
      "init_attr=" + std::to_string(init_attr),
      "max_social_links=" + std::to_string(max_social_links),
  };
}

void GenParams::Apply(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "T") T = ToInt(key, value);
    else if (key == "mu_a") mu_a = ToDouble(key, value);
    else if (key == "sigma_a") sigma_a = ToDouble(key, value);
    else if (key == "p") p = ToDouble(key, value);
    else if (key == "alpha") alpha = ToDouble(key, value);
    else if (key == "beta") beta = ToDouble(key, value);
    else if (key == "mu_l") mu_l = ToDouble(key, value);
    else if (key == "sigma_l") sigma_l = ToDouble(key, value);
    else if (key == "m_s") m_s = ToDouble(key, value);
    else if (key == "fc") fc = ToDouble(key, value);
    else if (key == "attachment") attachment = ParseAttachment(value);
    else if (key == "closure") closure = ParseClosure(value);
    else if (key == "sleep") sleep = ParseSleepFamily(value);
    else if (key == "lapa_heuristic") lapa_heuristic = ToBool(key, value);
    else if (key == "seed") seed = static_cast<std::uint64_t>(ToInt(key, value));
    else if (key == "init_social") init_social = static_cast<int>(ToInt(key, value));
    else if (key == "init_attr") init_attr = static_cast<int>(ToInt(key, value));
    else if (key == "max_social_links") max_social_links = static_cast<std::uint64_t>(ToInt(key, value));
    else Fail(ErrorCode::kInvalidArgument, "unknown generator key '" + key + "'");
  }
}

std::map<std::string, std::string> ParseKeyValueText(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    Require(eq != std::string::npos, ErrorCode::kParse,
            "config line " + std::to_string(line_no) + " has no '='");
    kv[Trim(line.substr(0, eq))] = Trim(line.substr(eq + 1));
  }
  return kv;
}

}  // namespace sanet
