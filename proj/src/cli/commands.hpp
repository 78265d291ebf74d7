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
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "settings.hpp"

namespace sanet::cli {

inline constexpr int kSchemaVersion = 1;

struct Context {
  std::string command;
  Settings settings;
  std::filesystem::path out_dir;
  int workers = 1;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

struct Command {
  std::string name;
  std::string help;
  std::vector<KeySpec> keys;  // `seed` is added by the caller
  // Returns 0 when every requested task succeeded, 1 otherwise.
  int (*run)(Context&);
};

const std::vector<Command>& Commands();

}  // namespace sanet::cli
