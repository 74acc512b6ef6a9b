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

#include <cmath>
#include <random>

#include "tweetpulse/emotion.hpp"
#include "tweetpulse/porter.hpp"

using namespace tp;

namespace {

EmoMask mask_of(std::initializer_list<const char*> labels) {
  EmoMask m = 0;
  for (const char* l : labels) m = static_cast<EmoMask>(m | (1u << *emo_label_index(l)));
  return m;
}

EmoLexicon emotion_lexicon() {
  EmoLexicon lex;
  lex.insert("panic", mask_of({"fear", "negative"}));
  lex.insert("happy", mask_of({"joy", "trust", "positive"}));
  lex.insert("abandon", mask_of({"fear", "sadness", "negative"}));
  lex.insert("hope", mask_of({"anticipation", "trust", "positive"}));
  lex.insert("rot", mask_of({"disgust", "negative"}));
  lex.insert("rage", mask_of({"anger", "negative"}));
  lex.insert("sudden", mask_of({"surprise"}));
  lex.insert("plain", 0);
  return lex;
}

TokenizedDoc make_doc(std::vector<std::string> surfaces) {
  TokenizedDoc doc;
  doc.tweet_id = "t";
  for (auto& s : surfaces) {
    doc.stems.push_back(porter_stem(s));
    doc.surface_tokens.push_back(std::move(s));
  }
  return doc;
}

// Independent tally: walk every token and every label bit by hand.
EmotionTally oracle_tally(const TokenizedDoc& doc, const EmoLexicon& lex) {
  EmotionTally tally;
  for (std::size_t i = 0; i < doc.surface_tokens.size(); ++i) {
    auto mask = lex.lookup(doc.surface_tokens[i], doc.stems[i]);
    if (!mask) continue;
    for (int b = 0; b < kEmotionCount; ++b) {
      if (*mask & (1u << b)) ++tally.counts[static_cast<std::size_t>(b)];
    }
    if (*mask & (1u << 8)) ++tally.polarity_counts[0];
    if (*mask & (1u << 9)) ++tally.polarity_counts[1];
  }
  return tally;
}

}  // namespace

TEST_CASE("a token feeds every emotion it is associated with") {
  EmoLexicon lex = emotion_lexicon();
  EmotionTally t = tally_emotions(make_doc({"abandon", "happy", "table"}), lex);
  CHECK(t.counts[*emo_label_index("fear")] == 1);
  CHECK(t.counts[*emo_label_index("sadness")] == 1);
  CHECK(t.counts[*emo_label_index("joy")] == 1);
  CHECK(t.counts[*emo_label_index("trust")] == 1);
  CHECK(t.counts[*emo_label_index("anger")] == 0);
  CHECK(t.polarity_counts[0] == 1);
  CHECK(t.polarity_counts[1] == 1);
}

TEST_CASE("repeated tokens count every occurrence") {
  EmoLexicon lex = emotion_lexicon();
  EmotionTally t = tally_emotions(make_doc({"panic", "panic", "panic"}), lex);
  CHECK(t.counts[*emo_label_index("fear")] == 3);
  CHECK(t.polarity_counts[0] == 3);
}

TEST_CASE("random docs agree with the hand tally") {
  EmoLexicon lex = emotion_lexicon();
  const char* pool[] = {"panic", "happy",  "abandon", "hope",  "rot",
                        "rage",  "sudden", "plain",   "table", "panicking"};
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<std::string> words;
    for (int i = 0; i < static_cast<int>(rng() % 15); ++i) words.push_back(pool[rng() % 10]);
    TokenizedDoc doc = make_doc(std::move(words));
    REQUIRE(tally_emotions(doc, lex) == oracle_tally(doc, lex));
  }
}

TEST_CASE("tally merging adds componentwise") {
  EmotionTally a, b;
  a.counts[0] = 2;
  a.polarity_counts[1] = 5;
  b.counts[0] = 3;
  b.counts[7] = 1;
  a += b;
  CHECK(a.counts[0] == 5);
  CHECK(a.counts[7] == 1);
  CHECK(a.polarity_counts[1] == 5);
}

TEST_CASE("corpus tallies match across execution policies") {
  EmoLexicon lex = emotion_lexicon();
  std::vector<TokenizedDoc> docs;
  std::mt19937_64 rng(59);
  const char* pool[] = {"panic", "happy", "abandon", "hope", "plain"};
  for (int i = 0; i < 250; ++i) {
    std::vector<std::string> words;
    for (int j = 0; j < static_cast<int>(rng() % 9); ++j) words.push_back(pool[rng() % 5]);
    docs.push_back(make_doc(std::move(words)));
  }
  auto serial = tally_corpus(docs, lex, Exec::serial);
  auto parallel = tally_corpus(docs, lex, Exec::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) REQUIRE(serial[i] == parallel[i]);
}

TEST_CASE("weekly shares normalize over the eight emotions only") {
  std::map<CellKey, EmotionTally> cells;
  EmotionTally t;
  t.counts = {1, 2, 3, 4, 0, 0, 0, 0};
  t.polarity_counts = {100, 200};  // must not enter the denominator
  cells[{0, "SG"}] = t;
  auto rows = weekly_emotion_proportions(cells);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].week == 0);
  CHECK(rows[0].region == "SG");
  CHECK(rows[0].shares[0] == doctest::Approx(0.1));
  CHECK(rows[0].shares[1] == doctest::Approx(0.2));
  CHECK(rows[0].shares[2] == doctest::Approx(0.3));
  CHECK(rows[0].shares[3] == doctest::Approx(0.4));
  double total = 0;
  for (double s : rows[0].shares) total += s;
  CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("cells without emotion hits produce no row") {
  std::map<CellKey, EmotionTally> cells;
  EmotionTally polarity_only;
  polarity_only.polarity_counts = {7, 9};
  cells[{0, "SG"}] = polarity_only;   // no emotion mass at all
  cells[{1, "GB"}] = EmotionTally{};  // fully empty
  EmotionTally real;
  real.counts[3] = 5;
  cells[{2, "US"}] = real;
  auto rows = weekly_emotion_proportions(cells);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].week == 2);
  CHECK(rows[0].shares[3] == doctest::Approx(1.0));
}

TEST_CASE("rows come out sorted by week then region") {
  std::map<CellKey, EmotionTally> cells;
  EmotionTally t;
  t.counts[0] = 1;
  cells[{1, "US"}] = t;
  cells[{0, "US"}] = t;
  cells[{0, "GB"}] = t;
  cells[{1, "GB"}] = t;
  auto rows = weekly_emotion_proportions(cells);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].week == 0);
  CHECK(rows[0].region == "GB");
  CHECK(rows[1].week == 0);
  CHECK(rows[1].region == "US");
  CHECK(rows[2].week == 1);
  CHECK(rows[2].region == "GB");
  CHECK(rows[3].week == 1);
  CHECK(rows[3].region == "US");
}

TEST_CASE("scaling every count by the same factor leaves shares unchanged") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    EmotionTally t, scaled;
    for (int b = 0; b < kEmotionCount; ++b) {
      long c = static_cast<long>(rng() % 50);
      t.counts[static_cast<std::size_t>(b)] = c;
      scaled.counts[static_cast<std::size_t>(b)] = 7 * c;
    }
    std::map<CellKey, EmotionTally> cells{{{0, "SG"}, t}};
    std::map<CellKey, EmotionTally> cells7{{{0, "SG"}, scaled}};
    auto rows = weekly_emotion_proportions(cells);
    auto rows7 = weekly_emotion_proportions(cells7);
    REQUIRE(rows.size() == rows7.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (int b = 0; b < kEmotionCount; ++b) {
        REQUIRE(std::abs(rows[i].shares[static_cast<std::size_t>(b)] -
                         rows7[i].shares[static_cast<std::size_t>(b)]) < 1e-9);
      }
    }
  }
}
