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

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tweetpulse/emotion.hpp"
#include "tweetpulse/ingest.hpp"
#include "tweetpulse/sentiment.hpp"
#include "tweetpulse/topics.hpp"

namespace tp {

// CSV "date,stat,value"; values at 6 decimal places.
void write_sentiment_csv(std::ostream& out, std::span<const SeriesPoint> series,
                         SeriesStat stat);

// CSV "week_start,region,anger,fear,anticipation,trust,surprise,sadness,
// joy,disgust"; shares at 6 decimal places.
void write_emotions_csv(std::ostream& out, std::span<const EmotionProportions> rows,
                        const StudyWindow& window);

// CSV "week_start,topic,rank,word,probability": for each week the
// dominant topic of its theta row with that topic's top-n words.
void write_topics_csv(std::ostream& out, const TopicModel& model,
                      const StudyWindow& window, int top_n);

struct Event {
  CivilDate date;
  std::string label;
};

// CSV "date,label" with an optional header row. Malformed dates raise
// ValidationError naming the line.
std::vector<Event> load_events(const std::string& path);

struct AnnotateResult {
  long matched_rows = 0;
  std::vector<std::string> warnings;  // events whose date is absent
};

// Joins event labels onto series rows by date (first CSV column), adding
// an "event" column. Unmatched events become warnings, not errors.
AnnotateResult annotate_events(std::istream& series_in, std::ostream& out,
                               std::span<const Event> events);

std::string csv_quote(std::string_view field);

}  // namespace tp
