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

namespace sanet::cli {

// One configuration key. `flag` is the kebab-case long option.
struct KeySpec {
  std::string name;
  std::string default_value;
  std::string help;
};

// Resolved key=value configuration of one subcommand: defaults, then the
// config file, then command-line flags.
class Settings {
 public:
  explicit Settings(std::vector<KeySpec> keys);

  const std::vector<KeySpec>& keys() const { return keys_; }

  // Config-file layer. Keys this subcommand does not define are collected in
  // ignored() rather than rejected, so one file can serve several commands.
  void ApplyFile(const std::map<std::string, std::string>& kv);
  // Flag layer; the key must be defined.
  void Set(const std::string& name, const std::string& value);

  const std::string& Get(const std::string& name) const;
  double GetDouble(const std::string& name) const;
  std::int64_t GetInt(const std::string& name) const;
  std::uint64_t GetUint(const std::string& name) const;
  bool GetBool(const std::string& name) const;
  // Comma-separated values; empty text gives an empty list.
  std::vector<std::string> GetList(const std::string& name) const;
  std::vector<double> GetDoubleList(const std::string& name) const;
  std::vector<std::int64_t> GetIntList(const std::string& name) const;

  const std::map<std::string, std::string>& resolved() const { return values_; }
  const std::vector<std::string>& ignored() const { return ignored_; }

 private:
  std::vector<KeySpec> keys_;
  std::map<std::string, std::string> values_;
  std::vector<std::string> ignored_;
};

// "mu_a" -> "mu-a".
std::string FlagName(const std::string& key);

}  // namespace sanet::cli
