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

#include "tweetpulse/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "tweetpulse/errors.hpp"

namespace tp {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return std::string(buf);
}

}  // namespace

std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += '"';
  return quoted;
}

void write_sentiment_csv(std::ostream& out, std::span<const SeriesPoint> series,
                         SeriesStat stat) {
  out << "date,stat,value\n";
  std::string_view stat_name = to_string(stat);
  for (const SeriesPoint& point : series) {
    out << point.date.to_string() << ',' << stat_name << ',' << fixed6(point.value) << '\n';
  }
}

void write_emotions_csv(std::ostream& out, std::span<const EmotionProportions> rows,
                        const StudyWindow& window) {
  out << "week_start,region";
  for (int e = 0; e < kEmotionCount; ++e) out << ',' << kEmoLabels[static_cast<std::size_t>(e)];
  out << '\n';
  for (const EmotionProportions& row : rows) {
    out << window.week_start(row.week).to_string() << ',' << csv_quote(row.region);
    for (double share : row.shares) out << ',' << fixed6(share);
    out << '\n';
  }
}

void write_topics_csv(std::ostream& out, const TopicModel& model, const StudyWindow& window,
                      int top_n) {
  out << "week_start,topic,rank,word,probability\n";
  for (std::size_t week = 0; week < model.theta.size(); ++week) {
    const auto& theta_row = model.theta[week];
    if (theta_row.empty()) continue;
    // Dominant topic; theta ties break toward the lower topic index.
    int dominant = 0;
    for (int k = 1; k < model.topic_count; ++k) {
      if (theta_row[static_cast<std::size_t>(k)] > theta_row[static_cast<std::size_t>(dominant)]) {
        dominant = k;
      }
    }
    std::vector<std::string> words = top_words(model, dominant, top_n);
    const auto& phi_row = model.phi[static_cast<std::size_t>(dominant)];
    std::map<std::string, std::size_t> vocab_index;
    for (std::size_t w = 0; w < model.vocab.size(); ++w) vocab_index.emplace(model.vocab[w], w);
    std::string week_start = window.week_start(static_cast<int>(week)).to_string();
    for (std::size_t rank = 0; rank < words.size(); ++rank) {
      out << week_start << ',' << dominant << ',' << (rank + 1) << ','
          << csv_quote(words[rank]) << ','
          << fixed6(phi_row[vocab_index.at(words[rank])]) << '\n';
    }
  }
}

std::vector<Event> load_events(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("events: cannot open " + path);
  std::vector<Event> events;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    std::string date_text = comma == std::string::npos ? line : line.substr(0, comma);
    std::string label = comma == std::string::npos ? std::string() : line.substr(comma + 1);
    if (line_number == 1 && date_text == "date") continue;  // header row
    auto date = CivilDate::parse(date_text);
    if (!date) {
      throw ValidationError("events: line " + std::to_string(line_number) +
                            ": malformed date \"" + date_text + "\"");
    }
    events.push_back({*date, std::move(label)});
  }
  return events;
}

AnnotateResult annotate_events(std::istream& series_in, std::ostream& out,
                               std::span<const Event> events) {
  std::map<std::string, std::vector<std::string>> by_date;
  for (const Event& event : events) {
    by_date[event.date.to_string()].push_back(event.label);
  }
  std::map<std::string, bool> matched;

  AnnotateResult result;
  std::string line;
  bool first = true;
  while (std::getline(series_in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (first) {
      out << line << ",event\n";
      first = false;
      continue;
    }
    if (line.empty()) continue;
    std::size_t comma = line.find(',');
    std::string key = comma == std::string::npos ? line : line.substr(0, comma);
    out << line << ',';
    if (auto it = by_date.find(key); it != by_date.end()) {
      std::string joined;
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        if (i) joined += "; ";
        joined += it->second[i];
      }
      out << csv_quote(joined);
      matched[key] = true;
      ++result.matched_rows;
    }
    out << '\n';
  }
  for (const auto& [date, labels] : by_date) {
    if (!matched.contains(date)) {
      result.warnings.push_back("event date " + date + " has no series row");
    }
  }
  return result;
}

}  // namespace tp
