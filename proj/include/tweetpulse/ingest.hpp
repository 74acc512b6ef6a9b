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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetpulse/calendar.hpp"

namespace tp {

struct GpsPoint {
  double lat = 0.0;
  double lon = 0.0;
};

// One archived post. Optional fields stay unset when the record omits them.
struct Tweet {
  std::string id;
  UtcInstant created_at;
  std::string text;
  std::optional<std::string> profile_location;
  std::optional<GpsPoint> gps;
  std::optional<std::string> place_country;  // ISO 3166-1 alpha-2, uppercased
  std::optional<std::string> lang;
};

// The analysis span: num_weeks consecutive 7-day buckets of UTC days
// starting at start_date.
struct StudyWindow {
  CivilDate start_date;
  int num_weeks = 0;

  // Throws ValidationError for a bad date or non-positive week count.
  static StudyWindow make(CivilDate start_date, int num_weeks);

  CivilDate week_start(int week) const { return add_days(start_date, 7LL * week); }
  CivilDate end_exclusive() const { return add_days(start_date, 7LL * num_weeks); }
};

// 0-based week bucket of t, or nullopt when t falls outside the window.
std::optional<int> week_index(const UtcInstant& t, const StudyWindow& w);

// Parses one JSON Lines record. Unknown fields are ignored. Throws
// ValidationError naming the line and the offending field.
Tweet parse_tweet_record(std::string_view line, long line_number = 0);

struct IngestStats {
  long records_read = 0;        // successfully parsed records
  long kept = 0;                // survived dedup and the language filter
  long duplicates_dropped = 0;  // repeated ids, first occurrence wins
  long non_english_dropped = 0;
};

struct IngestResult {
  std::vector<Tweet> tweets;
  IngestStats stats;
};

// Reads a whole archive: parses every line (any malformed line aborts),
// drops records whose lang tag is present and not "en", and deduplicates
// by id keeping the first occurrence. The result does not depend on how
// the input was partitioned before the merge.
IngestResult load_archive(std::istream& in);
IngestResult load_archive_file(const std::string& path);

}  // namespace tp
