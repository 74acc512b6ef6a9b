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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tweetpulse/calendar.hpp"
#include "tweetpulse/errors.hpp"
#include "tweetpulse/ingest.hpp"

using namespace tp;

TEST_CASE("date parsing accepts real dates and rejects impossible ones") {
  auto d = CivilDate::parse("2020-03-12");
  REQUIRE(d.has_value());
  CHECK(d->year == 2020);
  CHECK(d->month == 3);
  CHECK(d->day == 12);
  CHECK(d->to_string() == "2020-03-12");

  CHECK(CivilDate::parse("2020-02-29").has_value());   // leap year
  CHECK(!CivilDate::parse("2021-02-29").has_value());
  CHECK(!CivilDate::parse("2100-02-29").has_value());  // century, not leap
  CHECK(!CivilDate::parse("2020-02-30").has_value());
  CHECK(!CivilDate::parse("2020-13-01").has_value());
  CHECK(!CivilDate::parse("2020-00-10").has_value());
  CHECK(!CivilDate::parse("2020-3-12").has_value());   // width is fixed
  CHECK(!CivilDate::parse("2020-03-12 ").has_value());
  CHECK(!CivilDate::parse("20-03-12").has_value());
  CHECK(!CivilDate::parse("").has_value());
}

TEST_CASE("epoch day arithmetic round-trips and orders dates") {
  CHECK(days_from_epoch({1970, 1, 1}) == 0);
  CHECK(days_from_epoch({1970, 1, 2}) == 1);
  CHECK(days_from_epoch({1969, 12, 31}) == -1);
  CHECK(days_from_epoch({2020, 3, 12}) == 18333);

  // Round trip over a dense range crossing two leap years.
  std::int64_t start = days_from_epoch({2019, 12, 1});
  for (std::int64_t i = 0; i < 900; ++i) {
    CivilDate d = date_from_days(start + i);
    CHECK(days_from_epoch(d) == start + i);
    CHECK(is_valid_date(d));
  }

  CHECK(add_days({2020, 2, 28}, 1) == CivilDate{2020, 2, 29});
  CHECK(add_days({2020, 2, 28}, 2) == CivilDate{2020, 3, 1});
  CHECK(add_days({2020, 3, 12}, 91) == CivilDate{2020, 6, 11});
  CHECK((CivilDate{2020, 3, 11} < CivilDate{2020, 3, 12}));
}

TEST_CASE("timestamp parsing handles UTC, offsets, fractions, leap seconds") {
  auto t = parse_iso8601_utc("2020-03-12T00:00:00Z");
  REQUIRE(t.has_value());
  CHECK(t->seconds == 18333LL * 86400);
  CHECK(t->date() == CivilDate{2020, 3, 12});

  // A +08:00 stamp early in the local morning lands on the prior UTC day.
  auto off = parse_iso8601_utc("2020-03-12T07:30:00+08:00");
  REQUIRE(off.has_value());
  CHECK(off->date() == CivilDate{2020, 3, 11});
  CHECK(off->seconds == parse_iso8601_utc("2020-03-11T23:30:00Z")->seconds);

  auto neg = parse_iso8601_utc("2020-03-11T20:00:00-05:00");
  REQUIRE(neg.has_value());
  CHECK(neg->date() == CivilDate{2020, 3, 12});

  // Fractional seconds are truncated, not rounded.
  auto frac = parse_iso8601_utc("2020-03-12T10:15:30.999Z");
  REQUIRE(frac.has_value());
  CHECK(frac->seconds == parse_iso8601_utc("2020-03-12T10:15:30Z")->seconds);

  // A leap second is clamped onto the final ordinary second.
  auto leap = parse_iso8601_utc("2016-12-31T23:59:60Z");
  REQUIRE(leap.has_value());
  CHECK(leap->seconds == parse_iso8601_utc("2016-12-31T23:59:59Z")->seconds);

  CHECK(!parse_iso8601_utc("2020-03-12T24:00:00Z").has_value());
  CHECK(!parse_iso8601_utc("2020-03-12T10:00:00").has_value());    // no zone
  CHECK(!parse_iso8601_utc("2020-03-12T10:00:00+8:00").has_value());
  CHECK(!parse_iso8601_utc("2020-03-12T10:00:00+15:00").has_value());
  CHECK(!parse_iso8601_utc("2020-03-12T10:00:00.Z").has_value());  // empty fraction
  CHECK(!parse_iso8601_utc("2020-03-12T10:00:00Zx").has_value());
  CHECK(!parse_iso8601_utc("2020-02-30T10:00:00Z").has_value());
}

TEST_CASE("instants before the epoch floor to the right calendar day") {
  CHECK((UtcInstant{-1}).date() == CivilDate{1969, 12, 31});
  CHECK((UtcInstant{-86400}).date() == CivilDate{1969, 12, 31});
  CHECK((UtcInstant{-86401}).date() == CivilDate{1969, 12, 30});
  CHECK((UtcInstant{0}).date() == CivilDate{1970, 1, 1});
}

TEST_CASE("study window validates its inputs") {
  CHECK_THROWS_AS(StudyWindow::make({2020, 3, 12}, 0), ValidationError);
  CHECK_THROWS_AS(StudyWindow::make({2020, 3, 12}, -3), ValidationError);
  CHECK_THROWS_AS(StudyWindow::make({2020, 2, 30}, 13), ValidationError);
  CHECK_NOTHROW(StudyWindow::make({2020, 3, 12}, 1));
}

TEST_CASE("week bucketing splits the window into consecutive 7-day blocks") {
  StudyWindow w = StudyWindow::make({2020, 3, 12}, 13);
  CHECK(w.week_start(0) == CivilDate{2020, 3, 12});
  CHECK(w.week_start(1) == CivilDate{2020, 3, 19});
  CHECK(w.week_start(12) == CivilDate{2020, 6, 4});
  CHECK(w.end_exclusive() == CivilDate{2020, 6, 11});

  std::int64_t base = days_from_epoch(w.start_date) * 86400;
  for (int day = 0; day < 91; ++day) {
    UtcInstant first{base + day * 86400LL};
    UtcInstant last{base + day * 86400LL + 86399};
    REQUIRE(week_index(first, w) == day / 7);
    REQUIRE(week_index(last, w) == day / 7);
  }
  CHECK(!week_index(UtcInstant{base - 1}, w).has_value());
  CHECK(!week_index(UtcInstant{base + 91 * 86400LL}, w).has_value());
}

TEST_CASE("week index is monotone over random instants inside the window") {
  StudyWindow w = StudyWindow::make({2020, 3, 12}, 13);
  std::int64_t base = days_from_epoch(w.start_date) * 86400;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> dist(0, 91 * 86400LL - 1);
  std::int64_t a = dist(rng), b = dist(rng);
  for (int i = 0; i < 2000; ++i, a = dist(rng), b = dist(rng)) {
    if (a > b) std::swap(a, b);
    auto wa = week_index(UtcInstant{base + a}, w);
    auto wb = week_index(UtcInstant{base + b}, w);
    REQUIRE(wa.has_value());
    REQUIRE(wb.has_value());
    REQUIRE(*wa <= *wb);
  }
}
