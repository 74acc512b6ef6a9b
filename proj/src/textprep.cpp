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

#include "tweetpulse/textprep.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>

#include "tweetpulse/errors.hpp"
#include "tweetpulse/porter.hpp"

namespace tp {

namespace {

bool is_ascii_alnum(char c) {
  unsigned char uc = static_cast<unsigned char>(c);
  return uc < 0x80 && std::isalnum(uc);
}

bool is_word_char(char c) {
  return is_ascii_alnum(c) || c == '_';
}

bool starts_with_ci(std::string_view text, std::size_t pos, std::string_view prefix) {
  if (pos + prefix.size() > text.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(text[pos + i])) != prefix[i]) return false;
  }
  return true;
}

// Removes URLs (http..., www...) up to the next whitespace, @mentions, and
// '#' markers. Everything else passes through untouched.
std::string strip_markup(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (starts_with_ci(text, i, "http://") || starts_with_ci(text, i, "https://") ||
        starts_with_ci(text, i, "www.")) {
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      continue;
    }
    if (c == '@' && i + 1 < text.size() && is_word_char(text[i + 1])) {
      ++i;
      while (i < text.size() && is_word_char(text[i])) ++i;
      continue;
    }
    if (c == '@' || c == '#') {
      ++i;  // bare marker; a hashtag body stays in the text
      continue;
    }
    out.push_back(c);
    ++i;
  }
  return out;
}

// Decodes one UTF-8 codepoint. Malformed bytes decode as U+FFFD, which is
// never a letter, so they split tokens instead of corrupting the scan.
std::uint32_t decode_utf8(std::string_view text, std::size_t& i) {
  constexpr std::uint32_t kReplacement = 0xFFFD;
  unsigned char c0 = static_cast<unsigned char>(text[i]);
  auto cont = [&](std::size_t offset) {
    return i + offset < text.size() &&
           (static_cast<unsigned char>(text[i + offset]) & 0xC0) == 0x80;
  };
  if (c0 < 0x80) {
    i += 1;
    return c0;
  }
  if ((c0 & 0xE0) == 0xC0 && cont(1)) {
    std::uint32_t cp = (static_cast<std::uint32_t>(c0 & 0x1F) << 6) |
                       (static_cast<unsigned char>(text[i + 1]) & 0x3F);
    i += 2;
    return cp;
  }
  if ((c0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
    std::uint32_t cp = (static_cast<std::uint32_t>(c0 & 0x0F) << 12) |
                       ((static_cast<unsigned char>(text[i + 1]) & 0x3F) << 6) |
                       (static_cast<unsigned char>(text[i + 2]) & 0x3F);
    i += 3;
    return cp;
  }
  if ((c0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
    std::uint32_t cp = (static_cast<std::uint32_t>(c0 & 0x07) << 18) |
                       ((static_cast<unsigned char>(text[i + 1]) & 0x3F) << 12) |
                       ((static_cast<unsigned char>(text[i + 2]) & 0x3F) << 6) |
                       (static_cast<unsigned char>(text[i + 3]) & 0x3F);
    i += 4;
    return cp;
  }
  i += 1;
  return kReplacement;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Letters outside ASCII are limited to the Latin ranges; symbols, emoji
// and other scripts split tokens since the lexicons cannot match them.
bool is_latin_letter(std::uint32_t cp) {
  if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;
  return false;
}

std::uint32_t lower_latin(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  return cp;
}

// Lowercases and splits on non-alphanumeric boundaries.
std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    std::uint32_t cp = decode_utf8(text, i);
    bool token_char = (cp < 0x80 && std::isalnum(static_cast<int>(cp))) || is_latin_letter(cp);
    if (token_char) {
      append_utf8(current, lower_latin(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool all_digits(std::string_view token) {
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

TextPrep::TextPrep(std::unordered_set<std::string> stopwords,
                   std::unordered_map<std::string, std::string> lemma_rules)
    : stopwords_(std::move(stopwords)), lemma_rules_(std::move(lemma_rules)) {
  for (const auto& [inflected, lemma] : lemma_rules_) {
    if (auto it = lemma_rules_.find(lemma); it != lemma_rules_.end() && it->second != lemma) {
      throw ValidationError("lemma rules: \"" + inflected + "\" -> \"" + lemma +
                            "\" is rewritten again by another rule; the table must be idempotent");
    }
    if (stopwords_.contains(lemma)) {
      throw ValidationError("lemma rules: lemma \"" + lemma +
                            "\" is a stopword; normalized text would not re-tokenize to itself");
    }
  }
}

TextPrep TextPrep::load(const std::string& stopword_path, const std::string& lemma_path) {
  std::unordered_set<std::string> stopwords;
  std::ifstream stops(stopword_path);
  if (!stops) throw ValidationError("textprep: cannot open " + stopword_path);
  std::string line;
  while (std::getline(stops, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::string lowered;
    for (char c : line) lowered.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    stopwords.insert(lowered);
  }

  std::unordered_map<std::string, std::string> lemmas;
  std::ifstream rules(lemma_path);
  if (!rules) throw ValidationError("textprep: cannot open " + lemma_path);
  long line_number = 0;
  while (std::getline(rules, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ValidationError("lemma rules: line " + std::to_string(line_number) +
                            ": expected inflected_form<TAB>lemma");
    }
    lemmas[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return TextPrep(std::move(stopwords), std::move(lemmas));
}

TokenizedDoc TextPrep::preprocess(std::string_view text, std::string tweet_id) const {
  TokenizedDoc doc;
  doc.tweet_id = std::move(tweet_id);
  for (std::string& token : tokenize(strip_markup(text))) {
    if (all_digits(token) || stopwords_.contains(token)) continue;
    if (auto it = lemma_rules_.find(token); it != lemma_rules_.end()) token = it->second;
    doc.stems.push_back(porter_stem(token));
    doc.surface_tokens.push_back(std::move(token));
  }
  return doc;
}

std::vector<TokenizedDoc> preprocess_corpus(std::span<const Tweet> tweets, const TextPrep& prep,
                                            Exec exec) {
  return map_indexed<TokenizedDoc>(tweets.size(), exec, [&](std::size_t i) {
    return prep.preprocess(tweets[i].text, tweets[i].id);
  });
}

}  // namespace tp
