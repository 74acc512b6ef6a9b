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

#include "tweetpulse/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <unordered_set>

#include <json.hpp>

#include "tweetpulse/errors.hpp"

namespace tp {

namespace {

using nlohmann::json;

[[noreturn]] void fail(long line_number, const std::string& what) {
  std::string where = line_number > 0 ? "line " + std::to_string(line_number) + ": " : "";
  throw ValidationError("ingest: " + where + what);
}

std::string require_string(const json& record, const char* field, long line_number) {
  auto it = record.find(field);
  if (it == record.end()) fail(line_number, std::string("missing field \"") + field + "\"");
  if (!it->is_string()) fail(line_number, std::string("field \"") + field + "\" must be a string");
  return it->get<std::string>();
}

std::optional<std::string> optional_string(const json& record, const char* field,
                                           long line_number) {
  auto it = record.find(field);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) fail(line_number, std::string("field \"") + field + "\" must be a string");
  return it->get<std::string>();
}

std::string ascii_lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string ascii_upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

StudyWindow StudyWindow::make(CivilDate start_date, int num_weeks) {
  if (!is_valid_date(start_date)) {
    throw ValidationError("study window: invalid start date " + start_date.to_string());
  }
  if (num_weeks <= 0) {
    throw ValidationError("study window: num_weeks must be positive, got " +
                          std::to_string(num_weeks));
  }
  return StudyWindow{start_date, num_weeks};
}

std::optional<int> week_index(const UtcInstant& t, const StudyWindow& w) {
  std::int64_t offset = days_from_epoch(t.date()) - days_from_epoch(w.start_date);
  if (offset < 0 || offset >= 7LL * w.num_weeks) return std::nullopt;
  return static_cast<int>(offset / 7);
}

Tweet parse_tweet_record(std::string_view line, long line_number) {
  json record;
  try {
    record = json::parse(line);
  } catch (const json::parse_error& e) {
    fail(line_number, std::string("malformed record: ") + e.what());
  }
  if (!record.is_object()) fail(line_number, "record is not a JSON object");

  Tweet t;
  t.id = require_string(record, "id", line_number);
  if (t.id.empty()) fail(line_number, "field \"id\" must be non-empty");

  std::string created_raw = require_string(record, "created_at", line_number);
  auto instant = parse_iso8601_utc(created_raw);
  if (!instant) fail(line_number, "field \"created_at\" is not a valid ISO-8601 timestamp");
  t.created_at = *instant;

  t.text = require_string(record, "text", line_number);
  t.profile_location = optional_string(record, "user_location", line_number);

  if (auto it = record.find("coordinates"); it != record.end() && !it->is_null()) {
    if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number() || !(*it)[1].is_number()) {
      fail(line_number, "field \"coordinates\" must be a [lon, lat] number pair");
    }
    // Wire order is lon-first, GeoJSON style.
    GpsPoint gps{(*it)[1].get<double>(), (*it)[0].get<double>()};
    if (gps.lat < -90.0 || gps.lat > 90.0 || gps.lon < -180.0 || gps.lon > 180.0) {
      fail(line_number, "field \"coordinates\" out of range");
    }
    t.gps = gps;
  }

  if (auto country = optional_string(record, "place_country", line_number)) {
    t.place_country = ascii_upper(*country);
  }
  if (auto lang = optional_string(record, "lang", line_number)) {
    t.lang = ascii_lower(*lang);
  }
  return t;
}

IngestResult load_archive(std::istream& in) {
  IngestResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Tweet t = parse_tweet_record(line, line_number);
    ++result.stats.records_read;
    if (!seen_ids.insert(t.id).second) {
      ++result.stats.duplicates_dropped;
      continue;
    }
    if (t.lang && *t.lang != "en") {
      ++result.stats.non_english_dropped;
      continue;
    }
    ++result.stats.kept;
    result.tweets.push_back(std::move(t));
  }
  return result;
}

IngestResult load_archive_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("ingest: cannot open archive " + path);
  return load_archive(in);
}

}  // namespace tp
