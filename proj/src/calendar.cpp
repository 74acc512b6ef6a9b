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

#include "tweetpulse/calendar.hpp"

#include <chrono>
#include <cstdio>

namespace tp {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(const CivilDate& d) {
  return chr::year_month_day{chr::year{d.year}, chr::month{static_cast<unsigned>(d.month)},
                             chr::day{static_cast<unsigned>(d.day)}};
}

// Parses exactly `width` digits starting at pos; returns false on anything
// else. Advances pos past the digits.
bool take_digits(std::string_view s, std::size_t& pos, int width, int& out) {
  if (pos + static_cast<std::size_t>(width) > s.size()) return false;
  int value = 0;
  for (int i = 0; i < width; ++i) {
    char c = s[pos + static_cast<std::size_t>(i)];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  pos += static_cast<std::size_t>(width);
  out = value;
  return true;
}

bool take_char(std::string_view s, std::size_t& pos, char expected) {
  if (pos >= s.size() || s[pos] != expected) return false;
  ++pos;
  return true;
}

}  // namespace

bool is_valid_date(const CivilDate& d) { return to_ymd(d).ok(); }

std::optional<CivilDate> CivilDate::parse(std::string_view text) {
  std::size_t pos = 0;
  int y, m, day;
  if (!take_digits(text, pos, 4, y) || !take_char(text, pos, '-') ||
      !take_digits(text, pos, 2, m) || !take_char(text, pos, '-') ||
      !take_digits(text, pos, 2, day) || pos != text.size()) {
    return std::nullopt;
  }
  CivilDate d{y, m, day};
  if (!is_valid_date(d)) return std::nullopt;
  return d;
}

std::string CivilDate::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

std::int64_t days_from_epoch(const CivilDate& d) {
  return chr::sys_days(to_ymd(d)).time_since_epoch().count();
}

CivilDate date_from_days(std::int64_t days) {
  chr::year_month_day ymd{chr::sys_days{chr::days{days}}};
  return CivilDate{static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
                   static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

CivilDate add_days(const CivilDate& d, std::int64_t n) {
  return date_from_days(days_from_epoch(d) + n);
}

CivilDate UtcInstant::date() const {
  // Floor division keeps pre-epoch instants on the right calendar day.
  std::int64_t day = seconds / 86400;
  if (seconds % 86400 < 0) --day;
  return date_from_days(day);
}

std::optional<UtcInstant> parse_iso8601_utc(std::string_view text) {
  std::size_t pos = 0;
  int y, mo, d, h, mi, s;
  if (!take_digits(text, pos, 4, y) || !take_char(text, pos, '-') ||
      !take_digits(text, pos, 2, mo) || !take_char(text, pos, '-') ||
      !take_digits(text, pos, 2, d) || !take_char(text, pos, 'T') ||
      !take_digits(text, pos, 2, h) || !take_char(text, pos, ':') ||
      !take_digits(text, pos, 2, mi) || !take_char(text, pos, ':') ||
      !take_digits(text, pos, 2, s)) {
    return std::nullopt;
  }
  CivilDate date{y, mo, d};
  if (!is_valid_date(date) || h > 23 || mi > 59 || s > 60) return std::nullopt;
  if (s == 60) s = 59;  // clamp leap seconds; the archive is second-precision

  // Optional fractional seconds, truncated.
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::size_t digits = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
  }

  std::int64_t offset_seconds = 0;
  if (pos < text.size() && (text[pos] == 'Z' || text[pos] == 'z')) {
    ++pos;
  } else if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    int sign = text[pos] == '+' ? 1 : -1;
    ++pos;
    int oh, om;
    if (!take_digits(text, pos, 2, oh) || !take_char(text, pos, ':') ||
        !take_digits(text, pos, 2, om)) {
      return std::nullopt;
    }
    if (oh > 14 || om > 59) return std::nullopt;
    offset_seconds = sign * (oh * 3600LL + om * 60LL);
  } else {
    return std::nullopt;
  }
  if (pos != text.size()) return std::nullopt;

  std::int64_t local = days_from_epoch(date) * 86400 + h * 3600LL + mi * 60LL + s;
  return UtcInstant{local - offset_seconds};
}

}  // namespace tp
