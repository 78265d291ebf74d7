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


#include "settings.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "sanet/util/error.hpp"

namespace sanet::cli {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void BadValue(const std::string& name, const std::string& value,
                           const char* expected) {
  Fail(ErrorCode::kInvalidArgument,
       "key '" + name + "': expected " + expected + ", got '" + value + "'");
}

double ParseDouble(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    BadValue(name, text, "a number");
  }
  if (used != text.size()) BadValue(name, text, "a number");
  return v;
}

std::int64_t ParseInt(const std::string& name, const std::string& text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) BadValue(name, text, "an integer");
  return v;
}

}  // namespace

Settings::Settings(std::vector<KeySpec> keys) : keys_(std::move(keys)) {
  for (const auto& k : keys_) values_[k.name] = k.default_value;
}

void Settings::ApplyFile(const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (values_.contains(key)) {
      values_[key] = value;
    } else {
      ignored_.push_back(key);
    }
  }
}

void Settings::Set(const std::string& name, const std::string& value) {
  Require(values_.contains(name), ErrorCode::kInvalidArgument, "unknown key '" + name + "'");
  values_[name] = value;
}

const std::string& Settings::Get(const std::string& name) const {
  auto it = values_.find(name);
  Require(it != values_.end(), ErrorCode::kInvalidArgument, "unknown key '" + name + "'");
  return it->second;
}

double Settings::GetDouble(const std::string& name) const {
  return ParseDouble(name, Get(name));
}

std::int64_t Settings::GetInt(const std::string& name) const { return ParseInt(name, Get(name)); }

std::uint64_t Settings::GetUint(const std::string& name) const {
  const std::int64_t v = GetInt(name);
  if (v < 0) BadValue(name, Get(name), "a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

bool Settings::GetBool(const std::string& name) const {
  const std::string& v = Get(name);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  BadValue(name, v, "true or false");
}

std::vector<std::string> Settings::GetList(const std::string& name) const {
  std::vector<std::string> out;
  std::stringstream in(Get(name));
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> Settings::GetDoubleList(const std::string& name) const {
  std::vector<double> out;
  for (const auto& s : GetList(name)) out.push_back(ParseDouble(name, s));
  return out;
}

std::vector<std::int64_t> Settings::GetIntList(const std::string& name) const {
  std::vector<std::int64_t> out;
  for (const auto& s : GetList(name)) out.push_back(ParseInt(name, s));
  return out;
}

std::string FlagName(const std::string& key) {
  std::string out = key;
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

}  // namespace sanet::cli
