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


#include "sanet/cli/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "sanet/generator/params.hpp"
#include "sanet/util/error.hpp"

namespace sanet {

int RunCli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Social-attribute network toolkit"};
  app.set_version_flag("--version", SANET_VERSION);
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::string> seed;
  std::optional<int> workers;
  std::string out_dir = "out";
  std::string config;
  app.add_option("--seed", seed, "master seed (default 1)");
  app.add_option("--workers", workers, "worker threads; never changes results")
      ->check(CLI::PositiveNumber);
  app.add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  app.add_option("--config", config, "key=value config file")->check(CLI::ExistingFile);

  struct Bound {
    const cli::Command* command;
    CLI::App* sub;
    std::map<std::string, std::optional<std::string>> flags;
  };
  std::vector<Bound> bound;
  bound.reserve(cli::Commands().size());
  for (const cli::Command& cmd : cli::Commands()) {
    Bound& b = bound.emplace_back();
    b.command = &cmd;
    b.sub = app.add_subcommand(cmd.name, cmd.help);
    for (const cli::KeySpec& k : cmd.keys) {
      std::string help = k.help;
      if (!k.default_value.empty()) help += " [" + k.default_value + "]";
      b.sub->add_option("--" + cli::FlagName(k.name), b.flags[k.name], help);
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  for (Bound& b : bound) {
    if (!b.sub->parsed()) continue;
    try {
      std::vector<cli::KeySpec> keys = b.command->keys;
      keys.push_back({"seed", "1", "master seed"});
      cli::Context ctx{b.command->name, cli::Settings(keys), out_dir, 1, &out, &err};
      if (!config.empty()) {
        std::ifstream in(config);
        std::stringstream text;
        text << in.rdbuf();
        auto kv = ParseKeyValueText(text.str());
        if (auto it = kv.find("workers"); it != kv.end()) {
          ctx.workers = std::stoi(it->second);
          kv.erase(it);
        }
        ctx.settings.ApplyFile(kv);
      }
      if (seed) ctx.settings.Set("seed", *seed);
      for (const auto& [name, value] : b.flags) {
        if (value) ctx.settings.Set(name, *value);
      }
      if (workers) ctx.workers = *workers;
      Require(ctx.workers >= 1, ErrorCode::kInvalidArgument, "workers must be positive");
      return b.command->run(ctx);
    } catch (const Error& e) {
      err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
      return 1;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 1;
}

}  // namespace sanet
