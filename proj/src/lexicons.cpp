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

#include "tweetpulse/lexicons.hpp"

#include <charconv>
#include <fstream>

#include "tweetpulse/errors.hpp"

namespace tp {

namespace {

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 0x20) : c);
  }
  return out;
}

[[noreturn]] void fail(const std::string& path, long line_number, const std::string& what) {
  throw ValidationError("lexicon " + path + ": line " + std::to_string(line_number) + ": " + what);
}

}  // namespace

std::optional<int> emo_label_index(std::string_view label) {
  for (int i = 0; i < static_cast<int>(kEmoLabels.size()); ++i) {
    if (kEmoLabels[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

AfinnLexicon AfinnLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("lexicon: cannot open " + path);
  AfinnLexicon lex;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.rfind('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      fail(path, line_number, "expected word<TAB>valence");
    }
    std::string word = lowercase(std::string_view(line).substr(0, tab));
    std::string_view value_text = std::string_view(line).substr(tab + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc{} || ptr != value_text.data() + value_text.size()) {
      fail(path, line_number, "valence is not an integer");
    }
    if (value < -5 || value > 5 || value == 0) {
      fail(path, line_number, "valence for \"" + word + "\" must lie in [-5,-1] or [1,5]");
    }
    if (lex.scores_.contains(word)) {
      fail(path, line_number, "duplicate word \"" + word + "\"");
    }
    lex.scores_[std::move(word)] = value;
  }
  return lex;
}

void AfinnLexicon::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("lexicon: cannot write " + path);
  for (const auto& [word, value] : scores_) {
    out << word << '\t' << value << '\n';
  }
}

std::optional<int> AfinnLexicon::score(std::string_view word) const {
  auto it = scores_.find(std::string(word));
  if (it == scores_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> AfinnLexicon::lookup(std::string_view surface, std::string_view stem) const {
  if (auto hit = score(surface)) return hit;
  return score(stem);
}

void AfinnLexicon::insert(std::string word, int value) {
  if (value < -5 || value > 5 || value == 0) {
    throw ValidationError("lexicon: valence for \"" + word + "\" must lie in [-5,-1] or [1,5]");
  }
  scores_[std::move(word)] = value;
}

EmoLexicon EmoLexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("lexicon: cannot open " + path);
  EmoLexicon lex;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t t1 = line.find('\t');
    std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos || t1 == 0) {
      fail(path, line_number, "expected word<TAB>label<TAB>flag");
    }
    std::string word = lowercase(std::string_view(line).substr(0, t1));
    std::string label = line.substr(t1 + 1, t2 - t1 - 1);
    std::string_view flag = std::string_view(line).substr(t2 + 1);
    auto index = emo_label_index(label);
    if (!index) fail(path, line_number, "unknown label \"" + label + "\"");
    if (flag != "0" && flag != "1") fail(path, line_number, "flag must be 0 or 1");
    auto [it, inserted] = lex.assoc_.try_emplace(std::move(word), 0);
    if (flag == "1") it->second |= static_cast<EmoMask>(1u << *index);
  }
  return lex;
}

void EmoLexicon::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw ValidationError("lexicon: cannot write " + path);
  for (const auto& [word, mask] : assoc_) {
    for (std::size_t i = 0; i < kEmoLabels.size(); ++i) {
      out << word << '\t' << kEmoLabels[i] << '\t' << ((mask >> i) & 1u) << '\n';
    }
  }
}

std::optional<EmoMask> EmoLexicon::associations(std::string_view word) const {
  auto it = assoc_.find(std::string(word));
  if (it == assoc_.end()) return std::nullopt;
  return it->second;
}

std::optional<EmoMask> EmoLexicon::lookup(std::string_view surface, std::string_view stem) const {
  if (auto hit = associations(surface)) return hit;
  return associations(stem);
}

void EmoLexicon::insert(std::string word, EmoMask mask) {
  assoc_[std::move(word)] = mask;
}

}  // namespace tp
