// Copyright 2026 The Tweetpulse Authors
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

// Command-line front end. Exit codes: 0 success, 1 invalid input or
// configuration, 2 stage failure.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tweetpulse/errors.hpp"
#include "tweetpulse/pipeline.hpp"
#include "tweetpulse/report.hpp"

namespace {

struct CliOptions {
  std::string config_path;
  std::string stage = "all";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<std::string> exec;
};

int run(const CliOptions& options) {
  tp::RunConfig config = tp::load_config(options.config_path);
  if (options.seed) config.seed = *options.seed;
  if (options.out_dir) config.out_dir = *options.out_dir;
  if (options.exec) {
    if (*options.exec == "serial") config.exec = tp::Exec::serial;
    else if (*options.exec == "parallel") config.exec = tp::Exec::parallel;
    else throw tp::ValidationError("config: exec must be \"serial\" or \"parallel\"");
  }
  auto stage = tp::parse_stage(options.stage);
  if (!stage) {
    throw tp::ValidationError("config: unknown stage \"" + options.stage +
                              "\" (expected all, ingest, score, emotions, or topics)");
  }
  tp::run_pipeline(config, *stage);
  std::cout << "wrote " << config.out_dir << "\n";
  return 0;
}

int annotate(const std::string& series_path, const std::string& events_path,
             const std::string& out_path) {
  std::vector<tp::Event> events = tp::load_events(events_path);
  std::ifstream series_in(series_path);
  if (!series_in) throw tp::ValidationError("annotate: cannot open " + series_path);
  std::ofstream out(out_path);
  if (!out) throw tp::StageError("annotate", "cannot write " + out_path);
  tp::AnnotateResult result = tp::annotate_events(series_in, out, events);
  for (const std::string& warning : result.warnings) {
    std::cerr << "warning: " << warning << "\n";
  }
  std::cout << "annotated " << result.matched_rows << " rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Corpus analytics over archived tweet collections"};
  app.require_subcommand(1);

  CliOptions options;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-c,--config", options.config_path, "JSON run configuration")
        ->required();
    cmd->add_option("--seed", options.seed, "Override the configured seed");
    cmd->add_option("--out", options.out_dir, "Override the configured output directory");
    cmd->add_option("--exec", options.exec, "Kernel execution policy: serial or parallel");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "Run the full pipeline");
  add_common(run_cmd);
  run_cmd->add_option("--stage", options.stage,
                      "Single stage to run: all, ingest, score, emotions, topics");

  for (const char* name : {"ingest", "score", "emotions", "topics"}) {
    CLI::App* cmd = app.add_subcommand(name, std::string("Run only the ") + name + " stage");
    add_common(cmd);
    cmd->parse_complete_callback([&options, name] { options.stage = name; });
  }

  std::string series_path, events_path, annotated_path;
  CLI::App* annotate_cmd =
      app.add_subcommand("annotate", "Join event labels onto a report series by date");
  annotate_cmd->add_option("--series", series_path, "Input series CSV")->required();
  annotate_cmd->add_option("--events", events_path, "Events CSV (date,label)")->required();
  annotate_cmd->add_option("--out", annotated_path, "Output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (annotate_cmd->parsed()) {
      return annotate(series_path, events_path, annotated_path);
    }
    return run(options);
  } catch (const tp::StageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tp::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
