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

#include <span>
#include <string>
#include <vector>

#include "tweetpulse/calendar.hpp"
#include "tweetpulse/exec.hpp"
#include "tweetpulse/lexicons.hpp"
#include "tweetpulse/textprep.hpp"

namespace tp {

enum class Polarity { negative, neutral, positive };

std::string_view to_string(Polarity p);

struct SentimentResult {
  std::string tweet_id;
  int score = 0;
  Polarity polarity = Polarity::neutral;

  friend bool operator==(const SentimentResult&, const SentimentResult&) = default;
};

// Sum of matched token scores; every occurrence counts. Polarity follows
// the sign of the sum.
SentimentResult score_tweet(const TokenizedDoc& doc, const AfinnLexicon& lex);

std::vector<SentimentResult> score_corpus(std::span<const TokenizedDoc> docs,
                                          const AfinnLexicon& lex,
                                          Exec exec = Exec::parallel);

enum class SeriesStat { mean, sum };

std::string_view to_string(SeriesStat s);

// One record of any report series: a date (or week start), a region, a
// metric name, and its value.
struct SeriesPoint {
  CivilDate date;
  std::string region;
  std::string metric;
  double value = 0.0;

  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

struct DatedScore {
  CivilDate date;
  int score = 0;
};

// One point per calendar date present in the input, sorted ascending;
// dates with no tweets are omitted rather than zero-filled. Per-date sums
// are integer arithmetic, so the result is independent of input order.
std::vector<SeriesPoint> daily_sentiment_series(std::span<const DatedScore> scores,
                                                SeriesStat stat);

}  // namespace tp
