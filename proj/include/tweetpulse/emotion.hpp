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

#include <array>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tweetpulse/exec.hpp"
#include "tweetpulse/lexicons.hpp"
#include "tweetpulse/textprep.hpp"

namespace tp {

// Token-occurrence counts per emotion and per polarity. All keys are
// always present; zero is a valid count.
struct EmotionTally {
  std::array<long, kEmotionCount> counts{};    // kEmoLabels[0..7] order
  std::array<long, 2> polarity_counts{};       // negative, positive

  EmotionTally& operator+=(const EmotionTally& other);

  friend bool operator==(const EmotionTally&, const EmotionTally&) = default;
};

// Every token occurrence contributes +1 to each label it is associated
// with; one word may feed several emotions at once.
EmotionTally tally_emotions(const TokenizedDoc& doc, const EmoLexicon& lex);

std::vector<EmotionTally> tally_corpus(std::span<const TokenizedDoc> docs,
                                       const EmoLexicon& lex,
                                       Exec exec = Exec::parallel);

struct EmotionProportions {
  int week = 0;
  std::string region;  // country code or "global"
  std::array<double, kEmotionCount> shares{};

  friend bool operator==(const EmotionProportions&, const EmotionProportions&) = default;
};

using CellKey = std::pair<int, std::string>;  // (week, region)

// Shares normalize over the eight emotions only; the polarity counts never
// enter the denominator. Cells with no emotion hits produce no row.
// Output is sorted by (week, region).
std::vector<EmotionProportions> weekly_emotion_proportions(
    const std::map<CellKey, EmotionTally>& cells);

}  // namespace tp
