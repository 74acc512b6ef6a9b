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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace tp {

// Valence lexicon: word -> integer score in [-5,-1] or [1,5]. Score 0 is
// invalid by construction.
class AfinnLexicon {
 public:
  // TSV word \t score. Throws ValidationError naming the word and line for
  // out-of-range scores and duplicate words.
  static AfinnLexicon load(const std::string& path);

  // Writes entries back out sorted by word; load(save(x)) == x.
  void save(const std::string& path) const;

  std::optional<int> score(std::string_view word) const;

  // Surface form first, stemmed form as fallback.
  std::optional<int> lookup(std::string_view surface, std::string_view stem) const;

  std::size_t size() const { return scores_.size(); }
  const std::map<std::string, int>& entries() const { return scores_; }

  void insert(std::string word, int score);  // validates the range rule

  friend bool operator==(const AfinnLexicon&, const AfinnLexicon&) = default;

 private:
  std::map<std::string, int> scores_;
};

// The eight emotions, in report-column order, then the two polarities.
inline constexpr int kEmotionCount = 8;
inline constexpr std::array<std::string_view, 10> kEmoLabels = {
    "anger", "fear", "anticipation", "trust", "surprise",
    "sadness", "joy", "disgust", "negative", "positive"};

// Bit i set <=> the word is associated with kEmoLabels[i].
using EmoMask = std::uint16_t;

std::optional<int> emo_label_index(std::string_view label);

// Word-emotion association lexicon over the eight emotions plus the
// negative/positive polarities.
class EmoLexicon {
 public:
  // Long TSV format word \t label \t flag. Flag 1 adds the association,
  // flag 0 adds nothing (the word still gets an entry). Unknown labels and
  // flags outside {0,1} are errors.
  static EmoLexicon load(const std::string& path);

  // Writes every word with all ten flags, sorted; load(save(x)) == x.
  void save(const std::string& path) const;

  std::optional<EmoMask> associations(std::string_view word) const;
  std::optional<EmoMask> lookup(std::string_view surface, std::string_view stem) const;

  std::size_t size() const { return assoc_.size(); }
  const std::map<std::string, EmoMask>& entries() const { return assoc_; }

  void insert(std::string word, EmoMask mask);

  friend bool operator==(const EmoLexicon&, const EmoLexicon&) = default;

 private:
  std::map<std::string, EmoMask> assoc_;
};

}  // namespace tp
