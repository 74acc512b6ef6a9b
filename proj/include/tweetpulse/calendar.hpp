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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tp {

// A UTC calendar date. All bucketing in the pipeline is done on UTC dates.
struct CivilDate {
  int year = 1970;
  int month = 1;
  int day = 1;

  // Parses "YYYY-MM-DD"; rejects impossible dates (2020-02-30).
  static std::optional<CivilDate> parse(std::string_view text);

  std::string to_string() const;

  friend auto operator<=>(const CivilDate&, const CivilDate&) = default;
};

bool is_valid_date(const CivilDate& d);

// Days since 1970-01-01 in the proleptic Gregorian calendar.
std::int64_t days_from_epoch(const CivilDate& d);
CivilDate date_from_days(std::int64_t days);
CivilDate add_days(const CivilDate& d, std::int64_t n);

// A UTC instant with second precision.
struct UtcInstant {
  std::int64_t seconds = 0;  // since the Unix epoch

  CivilDate date() const;

  friend auto operator<=>(const UtcInstant&, const UtcInstant&) = default;
};

// Parses ISO-8601 timestamps: "2020-03-12T00:00:00Z". Accepts a numeric
// offset ("+08:00") and converts to UTC; fractional seconds are truncated.
std::optional<UtcInstant> parse_iso8601_utc(std::string_view text);

}  // namespace tp
