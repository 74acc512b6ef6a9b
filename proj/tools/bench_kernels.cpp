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

// Times the per-record kernels under both execution policies and checks
// that they produce identical results. The synthetic corpus is seeded, so
// runs are repeatable.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "tweetpulse/emotion.hpp"
#include "tweetpulse/exec.hpp"
#include "tweetpulse/gazetteer.hpp"
#include "tweetpulse/lexicons.hpp"
#include "tweetpulse/sentiment.hpp"
#include "tweetpulse/textprep.hpp"
#include "tweetpulse/topics.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Fixture {
  std::vector<tp::Tweet> tweets;
  std::vector<tp::TokenizedDoc> docs;
  tp::TextPrep prep;
  tp::AfinnLexicon afinn;
  tp::EmoLexicon emolex;
  tp::Gazetteer gazetteer;
};

Fixture make_fixture(std::size_t n) {
  const std::vector<std::string> words = {
      "good",    "bad",     "happy",  "terrible", "lockdown", "virus",  "vaccine",
      "school",  "market",  "doctor", "nurse",    "mask",     "travel", "flight",
      "economy", "stimulus", "relief", "quarantine", "symptom", "recovery"};

  Fixture f;
  std::mt19937_64 rng(2026);
  auto pick = [&](const std::vector<std::string>& pool) {
    return pool[static_cast<std::size_t>(rng() % pool.size())];
  };

  f.afinn.insert("good", 3);
  f.afinn.insert("bad", -3);
  f.afinn.insert("happy", 3);
  f.afinn.insert("terrible", -3);
  f.afinn.insert("relief", 2);
  f.emolex.insert("virus", 0b00000010);     // fear
  f.emolex.insert("terrible", 0b00100001);  // anger, sadness
  f.emolex.insert("happy", 0b01000000);     // joy
  f.emolex.insert("vaccine", 0b00001000);   // trust
  f.gazetteer.add_name("singapore", "SG");
  f.gazetteer.add_name("london", "GB");
  f.gazetteer.add_box({"SG", 1.15, 1.48, 103.6, 104.1});
  f.gazetteer.add_box({"GB", 49.8, 60.9, -8.7, 1.8});

  for (std::size_t i = 0; i < n; ++i) {
    tp::Tweet t;
    t.id = "t" + std::to_string(i);
    t.created_at = tp::UtcInstant{1584000000 + static_cast<std::int64_t>(i % 100000)};
    std::string text;
    for (int w = 0; w < 16; ++w) {
      text += pick(words);
      text += ' ';
    }
    text += "#tag" + std::to_string(rng() % 50) + " @user" + std::to_string(rng() % 50);
    t.text = std::move(text);
    switch (rng() % 3) {
      case 0:
        t.gps = tp::GpsPoint{1.30, 103.85};
        break;
      case 1:
        t.place_country = "GB";
        break;
      default:
        t.profile_location = "Singapore";
        break;
    }
    f.tweets.push_back(std::move(t));
  }
  f.docs = preprocess_corpus(f.tweets, f.prep, tp::Exec::serial);
  return f;
}

struct Row {
  const char* name;
  double serial_s;
  double parallel_s;
  bool identical;
};

template <typename Fn, typename Eq>
Row time_kernel(const char* name, Fn&& fn, Eq&& eq) {
  auto start = Clock::now();
  auto serial_out = fn(tp::Exec::serial);
  double serial_s = seconds_since(start);
  start = Clock::now();
  auto parallel_out = fn(tp::Exec::parallel);
  double parallel_s = seconds_since(start);
  return {name, serial_s, parallel_s, eq(serial_out, parallel_out)};
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = 200000;
  if (argc > 1) n = static_cast<std::size_t>(std::stoull(argv[1]));
  std::printf("bench corpus: %zu synthetic records\n\n", n);

  Fixture f = make_fixture(n);
  std::vector<Row> rows;

  rows.push_back(time_kernel(
      "preprocess",
      [&](tp::Exec exec) { return preprocess_corpus(f.tweets, f.prep, exec); },
      [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return false;
        for (std::size_t i = 0; i < a.size(); ++i) {
          if (a[i].surface_tokens != b[i].surface_tokens || a[i].stems != b[i].stems) return false;
        }
        return true;
      }));

  rows.push_back(time_kernel(
      "sentiment",
      [&](tp::Exec exec) { return score_corpus(f.docs, f.afinn, exec); },
      [](const auto& a, const auto& b) { return a == b; }));

  rows.push_back(time_kernel(
      "emotions",
      [&](tp::Exec exec) { return tally_corpus(f.docs, f.emolex, exec); },
      [](const auto& a, const auto& b) { return a == b; }));

  rows.push_back(time_kernel(
      "georesolve",
      [&](tp::Exec exec) { return resolve_corpus(f.tweets, f.gazetteer, exec); },
      [](const auto& a, const auto& b) { return a == b; }));

  // Topic-count selection parallelizes across candidate K values, one
  // independent chain each.
  {
    std::vector<tp::TokenizedDoc> sample(f.docs.begin(),
                                         f.docs.begin() + std::min<std::size_t>(f.docs.size(), 2000));
    std::vector<int> weeks(sample.size());
    for (std::size_t i = 0; i < weeks.size(); ++i) weeks[i] = static_cast<int>(i % 13);
    tp::Corpus corpus = tp::build_corpus(sample, weeks, 13, tp::Corpus::Mode::weekly_pooled, 2);
    std::vector<int> candidates = {2, 3, 4, 5};
    rows.push_back(time_kernel(
        "k-selection",
        [&](tp::Exec exec) {
          tp::SelectConfig config;
          config.iterations = 120;
          config.fold_in_iterations = 30;
          config.seed = 7;
          config.exec = exec;
          return select_topic_count(corpus, candidates, config);
        },
        [](const tp::SelectionResult& a, const tp::SelectionResult& b) {
          if (a.best_topic_count != b.best_topic_count) return false;
          for (std::size_t i = 0; i < a.candidates.size(); ++i) {
            if (a.candidates[i].perplexity != b.candidates[i].perplexity) return false;
          }
          return true;
        }));
  }

  std::printf("%-12s %10s %10s %9s %s\n", "kernel", "serial", "parallel", "speedup", "identical");
  for (const Row& row : rows) {
    std::printf("%-12s %9.3fs %9.3fs %8.2fx %s\n", row.name, row.serial_s, row.parallel_s,
                row.parallel_s > 0 ? row.serial_s / row.parallel_s : 0.0,
                row.identical ? "yes" : "NO");
  }

  for (const Row& row : rows) {
    if (!row.identical) {
      std::printf("\nFAIL: %s diverged between policies\n", row.name);
      return 1;
    }
  }
  return 0;
}
