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

#include <sstream>

#include "test_util.hpp"
#include "tweetpulse/errors.hpp"
#include "tweetpulse/report.hpp"

using namespace tp;

TEST_CASE("field quoting touches only fields that need it") {
  CHECK(csv_quote("plain") == "plain");
  CHECK(csv_quote("") == "");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_quote("two\nlines") == "\"two\nlines\"");
}

TEST_CASE("the sentiment csv is date,stat,value at six decimals") {
  std::vector<SeriesPoint> series = {
      {{2020, 3, 12}, "", "mean_sentiment", 2.0 / 3.0},
      {{2020, 3, 14}, "", "mean_sentiment", -1.25},
  };
  std::ostringstream out;
  write_sentiment_csv(out, series, SeriesStat::mean);
  CHECK(out.str() ==
        "date,stat,value\n"
        "2020-03-12,mean,0.666667\n"
        "2020-03-14,mean,-1.250000\n");
}

TEST_CASE("the emotions csv has one column per emotion in label order") {
  StudyWindow w = StudyWindow::make({2020, 3, 12}, 13);
  EmotionProportions row;
  row.week = 1;
  row.region = "SG";
  row.shares = {0.1, 0.2, 0.05, 0.25, 0.05, 0.15, 0.1, 0.1};
  std::ostringstream out;
  write_emotions_csv(out, std::vector<EmotionProportions>{row}, w);
  CHECK(out.str() ==
        "week_start,region,anger,fear,anticipation,trust,surprise,sadness,joy,disgust\n"
        "2020-03-19,SG,0.100000,0.200000,0.050000,0.250000,0.050000,0.150000,0.100000,"
        "0.100000\n");
}

TEST_CASE("the topics csv lists the dominant topic per week with ranked words") {
  TopicModel m;
  m.topic_count = 2;
  m.vocab = {"mask", "travel", "virus"};
  m.phi = {{0.5, 0.1, 0.4}, {0.1, 0.8, 0.1}};
  // Week 0 prefers topic 1; week 1 is an exact tie, so topic 0 wins.
  m.theta = {{0.3, 0.7}, {0.5, 0.5}};
  StudyWindow w = StudyWindow::make({2020, 3, 12}, 2);
  std::ostringstream out;
  write_topics_csv(out, m, w, 2);
  CHECK(out.str() ==
        "week_start,topic,rank,word,probability\n"
        "2020-03-12,1,1,travel,0.800000\n"
        "2020-03-12,1,2,mask,0.100000\n"
        "2020-03-19,0,1,mask,0.500000\n"
        "2020-03-19,0,2,virus,0.400000\n");
}

TEST_CASE("equal phi probabilities rank alphabetically") {
  TopicModel m;
  m.topic_count = 1;
  m.vocab = {"zeta", "echo", "alto"};
  m.phi = {{1.0 / 3, 1.0 / 3, 1.0 / 3}};
  m.theta = {{1.0}};
  StudyWindow w = StudyWindow::make({2020, 3, 12}, 1);
  std::ostringstream out;
  write_topics_csv(out, m, w, 3);
  auto text = out.str();
  CHECK(text.find("1,alto") != std::string::npos);
  CHECK(text.find("2,echo") != std::string::npos);
  CHECK(text.find("3,zeta") != std::string::npos);
}

TEST_CASE("event files load with or without a header row") {
  tptest::TempDir tmp("events");
  tptest::write_file(tmp.file("with_header.csv"),
                     "date,label\n2020-03-12,lockdown announced\n2020-04-07,curbs extended\n");
  auto events = load_events(tmp.file("with_header.csv"));
  REQUIRE(events.size() == 2);
  CHECK(events[0].date == CivilDate{2020, 3, 12});
  CHECK(events[0].label == "lockdown announced");

  tptest::write_file(tmp.file("bare.csv"), "2020-03-12,news\n");
  CHECK(load_events(tmp.file("bare.csv")).size() == 1);

  tptest::write_file(tmp.file("bad.csv"), "date,label\n2020-03-12,ok\nMarch 13,not a date\n");
  CHECK_THROWS_WITH_AS(load_events(tmp.file("bad.csv")), doctest::Contains("line 3"),
                       ValidationError);
  CHECK_THROWS_AS(load_events(tmp.file("missing.csv")), ValidationError);
}

TEST_CASE("annotation joins labels by date and reports unmatched events") {
  std::istringstream series(
      "date,stat,value\n"
      "2020-03-12,mean,0.500000\n"
      "2020-03-13,mean,0.250000\n");
  std::vector<Event> events = {
      {{2020, 3, 12}, "lockdown"},
      {{2020, 3, 12}, "schools close"},
      {{2020, 5, 1}, "reopening"},  // no series row
  };
  std::ostringstream out;
  AnnotateResult r = annotate_events(series, out, events);
  CHECK(out.str() ==
        "date,stat,value,event\n"
        "2020-03-12,mean,0.500000,lockdown; schools close\n"
        "2020-03-13,mean,0.250000,\n");
  CHECK(r.matched_rows == 1);
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("2020-05-01") != std::string::npos);
}

TEST_CASE("labels containing commas are quoted in the annotated output") {
  std::istringstream series("date,stat,value\n2020-03-12,mean,1.000000\n");
  std::vector<Event> events = {{{2020, 3, 12}, "borders, schools shut"}};
  std::ostringstream out;
  annotate_events(series, out, events);
  CHECK(out.str() ==
        "date,stat,value,event\n"
        "2020-03-12,mean,1.000000,\"borders, schools shut\"\n");
}

TEST_CASE("the shipped events fixture parses") {
  auto events = load_events(std::string(TP_REPO_DIR) + "/configs/events.csv");
  CHECK(events.size() >= 3);
}
