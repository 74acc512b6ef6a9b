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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tweetpulse/exec.hpp"
#include "tweetpulse/ingest.hpp"
#include "tweetpulse/sentiment.hpp"
#include "tweetpulse/topics.hpp"

namespace tp {

// Everything a run needs, loaded from one JSON config file. All referenced
// files are checked before any stage starts.
struct RunConfig {
  // inputs
  std::string archive;
  std::string afinn;
  std::string emolex;
  std::string gazetteer_names;
  std::string country_boxes;
  std::string stopwords;
  std::string lemma_rules;
  std::optional<std::string> events;

  // study window and regions of interest
  CivilDate start_date;
  int num_weeks = 0;
  std::vector<std::string> regions;

  SeriesStat sentiment_stat = SeriesStat::mean;

  // LDA settings
  Corpus::Mode lda_mode = Corpus::Mode::weekly_pooled;
  std::vector<int> k_candidates;
  double alpha = -1.0;  // <= 0 means 50/K
  double beta = 0.01;
  int iterations = 1000;
  int fold_in_iterations = 50;
  int min_count = 2;
  int top_words = 10;

  std::uint64_t seed = 0;
  std::string out_dir;

  Exec exec = Exec::parallel;
};

RunConfig load_config(const std::string& path);

enum class Stage { all, ingest, score, emotions, topics };

std::optional<Stage> parse_stage(std::string_view name);

// Runs the requested stage (or everything) and writes the report bundle
// into config.out_dir: corpus.jsonl, sentiment_daily.csv,
// emotions_weekly.csv, topics_report.csv, lda_model.txt, and
// run_manifest.json. Later stages reuse corpus.jsonl when it already
// exists. Outputs are a pure function of (inputs, config); any failure
// removes the files written by this invocation.
void run_pipeline(const RunConfig& config, Stage stage = Stage::all);

}  // namespace tp
