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

#include "tweetpulse/emotion.hpp"

namespace tp {

EmotionTally& EmotionTally::operator+=(const EmotionTally& other) {
  for (int i = 0; i < kEmotionCount; ++i) counts[static_cast<std::size_t>(i)] += other.counts[static_cast<std::size_t>(i)];
  polarity_counts[0] += other.polarity_counts[0];
  polarity_counts[1] += other.polarity_counts[1];
  return *this;
}

EmotionTally tally_emotions(const TokenizedDoc& doc, const EmoLexicon& lex) {
  EmotionTally tally;
  for (std::size_t i = 0; i < doc.surface_tokens.size(); ++i) {
    auto hit = lex.lookup(doc.surface_tokens[i], doc.stems[i]);
    if (!hit) continue;
    EmoMask mask = *hit;
    for (int e = 0; e < kEmotionCount; ++e) {
      if (mask & (1u << e)) tally.counts[static_cast<std::size_t>(e)] += 1;
    }
    if (mask & (1u << kEmotionCount)) tally.polarity_counts[0] += 1;      // negative
    if (mask & (1u << (kEmotionCount + 1))) tally.polarity_counts[1] += 1;  // positive
  }
  return tally;
}

std::vector<EmotionTally> tally_corpus(std::span<const TokenizedDoc> docs, const EmoLexicon& lex,
                                       Exec exec) {
  return map_indexed<EmotionTally>(docs.size(), exec,
                                   [&](std::size_t i) { return tally_emotions(docs[i], lex); });
}

std::vector<EmotionProportions> weekly_emotion_proportions(
    const std::map<CellKey, EmotionTally>& cells) {
  std::vector<EmotionProportions> rows;
  for (const auto& [key, tally] : cells) {
    long total = 0;
    for (long c : tally.counts) total += c;
    if (total == 0) continue;
    EmotionProportions row;
    row.week = key.first;
    row.region = key.second;
    for (int e = 0; e < kEmotionCount; ++e) {
      row.shares[static_cast<std::size_t>(e)] =
          static_cast<double>(tally.counts[static_cast<std::size_t>(e)]) / static_cast<double>(total);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace tp
