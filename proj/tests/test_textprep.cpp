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

#include "test_util.hpp"
#include "tweetpulse/errors.hpp"
#include "tweetpulse/porter.hpp"
#include "tweetpulse/textprep.hpp"

using namespace tp;

namespace {

TextPrep tiny_prep() {
  return TextPrep({"at", "the", "a", "is"}, {{"mice", "mouse"}, {"went", "go"}});
}

std::string join(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

}  // namespace

TEST_CASE("the canonical tweet normalizes to four tokens") {
  TextPrep prep = tiny_prep();
  TokenizedDoc doc = prep.preprocess("Staying SAFE at home! #covid https://t.co/x", "t1");
  CHECK(doc.tweet_id == "t1");
  CHECK(doc.surface_tokens == std::vector<std::string>{"staying", "safe", "home", "covid"});
  CHECK(doc.stems == std::vector<std::string>{"stai", "safe", "home", "covid"});
}

TEST_CASE("inflections collapse to a shared stem") {
  TextPrep prep = tiny_prep();
  TokenizedDoc doc = prep.preprocess("running runs");
  CHECK(doc.stems == std::vector<std::string>{"run", "run"});
}

TEST_CASE("markup stripping removes urls and mentions but keeps hashtag bodies") {
  TextPrep prep = tiny_prep();
  CHECK(prep.preprocess("see www.example.com now").surface_tokens ==
        std::vector<std::string>{"see", "now"});
  CHECK(prep.preprocess("ask @dr_bob2 about it").surface_tokens ==
        std::vector<std::string>{"ask", "about", "it"});
  CHECK(prep.preprocess("#StayHome orders").surface_tokens ==
        std::vector<std::string>{"stayhome", "orders"});
  CHECK(prep.preprocess("HTTP://CAPS.example/page works").surface_tokens ==
        std::vector<std::string>{"works"});
  CHECK(prep.preprocess("# @ !").surface_tokens.empty());
}

TEST_CASE("pure numbers drop but alphanumeric blends survive") {
  TextPrep prep = tiny_prep();
  TokenizedDoc doc = prep.preprocess("2020 covid19 cases 7");
  CHECK(doc.surface_tokens == std::vector<std::string>{"covid19", "cases"});
}

TEST_CASE("stopwords drop before lemmatization sees them") {
  TextPrep prep = tiny_prep();
  TokenizedDoc doc = prep.preprocess("the mice went at home");
  // "mice" -> "mouse", "went" -> "go"; "the"/"at" never reach the table.
  CHECK(doc.surface_tokens == std::vector<std::string>{"mouse", "go", "home"});
  CHECK(doc.stems == std::vector<std::string>{"mous", "go", "home"});
}

TEST_CASE("accented latin letters stay inside tokens; other scripts split") {
  TextPrep prep = tiny_prep();
  CHECK(prep.preprocess("CAFÉ open").surface_tokens ==
        std::vector<std::string>{"café", "open"});
  CHECK(prep.preprocess("naïve plan").surface_tokens ==
        std::vector<std::string>{"naïve", "plan"});
  // Emoji and CJK are boundaries, not token characters.
  CHECK(prep.preprocess("stay🏠safe").surface_tokens ==
        std::vector<std::string>{"stay", "safe"});
  CHECK(prep.preprocess("好 news").surface_tokens == std::vector<std::string>{"news"});
  // The multiplication sign sits inside the Latin-1 range but is a symbol.
  CHECK(prep.preprocess("3×4 grid").surface_tokens == std::vector<std::string>{"grid"});
}

TEST_CASE("malformed utf-8 bytes become boundaries instead of corrupting tokens") {
  TextPrep prep = tiny_prep();
  std::string text = "good";
  text.push_back(static_cast<char>(0xC3));  // truncated two-byte sequence
  text += " news";
  TokenizedDoc doc = prep.preprocess(text);
  CHECK(doc.surface_tokens == std::vector<std::string>{"good", "news"});
}

TEST_CASE("surface and stem lists always align") {
  TextPrep prep = tiny_prep();
  std::mt19937_64 rng(3);
  const char* pool[] = {"Staying", "safe", "#tag", "@who", "2020", "the",
                        "mice",    "ran",  "!!!",  "x9",   "café", "https://a.b/c"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    int n = static_cast<int>(rng() % 12);
    for (int i = 0; i < n; ++i) {
      text += pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
      text += ' ';
    }
    TokenizedDoc doc = prep.preprocess(text);
    REQUIRE(doc.surface_tokens.size() == doc.stems.size());
    for (std::size_t i = 0; i < doc.stems.size(); ++i) {
      REQUIRE(doc.stems[i] == porter_stem(doc.surface_tokens[i]));
      REQUIRE(!doc.surface_tokens[i].empty());
    }
  }
}

TEST_CASE("re-preprocessing the surface tokens is a fixed point") {
  TextPrep prep = tiny_prep();
  std::mt19937_64 rng(5);
  const char* pool[] = {"The Mice WENT home!", "#covid19 cases RISING fast",
                        "stay @home www.x.io", "très bien, merci", "a 1000 times"};
  for (int trial = 0; trial < 50; ++trial) {
    std::string text;
    for (int i = 0; i < 3; ++i) {
      text += pool[rng() % (sizeof(pool) / sizeof(pool[0]))];
      text += ' ';
    }
    TokenizedDoc once = prep.preprocess(text);
    TokenizedDoc twice = prep.preprocess(join(once.surface_tokens));
    REQUIRE(twice.surface_tokens == once.surface_tokens);
    REQUIRE(twice.stems == once.stems);
  }
}

TEST_CASE("a lemma table that is not idempotent is rejected") {
  CHECK_THROWS_AS(TextPrep({}, {{"a1", "b1"}, {"b1", "c1"}}), ValidationError);
  CHECK_THROWS_AS(TextPrep({"the"}, {{"thee", "the"}}), ValidationError);
  CHECK_NOTHROW(TextPrep({}, {{"geese", "goose"}, {"mice", "mouse"}}));
}

TEST_CASE("table files load with comments and report bad lines") {
  tptest::TempDir tmp("textprep");
  tptest::write_file(tmp.file("stop.txt"), "# comment\nAT\nthe\n\n");
  tptest::write_file(tmp.file("lemma.tsv"), "# irregulars\nmice\tmouse\nwent\tgo\n");
  TextPrep prep = TextPrep::load(tmp.file("stop.txt"), tmp.file("lemma.tsv"));
  CHECK(prep.stopword_count() == 2);  // lowercased, blank lines skipped
  CHECK(prep.lemma_rule_count() == 2);
  CHECK(prep.preprocess("at the mice").surface_tokens == std::vector<std::string>{"mouse"});

  tptest::write_file(tmp.file("bad.tsv"), "mice\tmouse\nnotabs\n");
  CHECK_THROWS_WITH_AS(TextPrep::load(tmp.file("stop.txt"), tmp.file("bad.tsv")),
                       doctest::Contains("line 2"), ValidationError);
  CHECK_THROWS_AS(TextPrep::load(tmp.file("missing.txt"), tmp.file("lemma.tsv")),
                  ValidationError);
}

TEST_CASE("the shipped tables load and keep the canonical example intact") {
  TextPrep prep = TextPrep::load(tptest::data_path("stopwords.txt"),
                                 tptest::data_path("lemma_rules.tsv"));
  CHECK(prep.stopword_count() > 100);
  TokenizedDoc doc = prep.preprocess("Staying SAFE at home! #covid https://t.co/x");
  CHECK(doc.surface_tokens == std::vector<std::string>{"staying", "safe", "home", "covid"});
}

TEST_CASE("corpus preprocessing matches across execution policies") {
  TextPrep prep = tiny_prep();
  std::vector<Tweet> tweets(120);
  for (std::size_t i = 0; i < tweets.size(); ++i) {
    tweets[i].id = std::to_string(i);
    tweets[i].text = "Case " + std::to_string(i) + " rising fast #covid @user" +
                     std::to_string(i);
  }
  auto serial = preprocess_corpus(tweets, prep, Exec::serial);
  auto parallel = preprocess_corpus(tweets, prep, Exec::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    REQUIRE(serial[i].tweet_id == parallel[i].tweet_id);
    REQUIRE(serial[i].surface_tokens == parallel[i].surface_tokens);
    REQUIRE(serial[i].stems == parallel[i].stems);
  }
}
