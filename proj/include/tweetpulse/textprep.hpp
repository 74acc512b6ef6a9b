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

#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tweetpulse/exec.hpp"
#include "tweetpulse/ingest.hpp"

namespace tp {

// Token lists after normalization. surface_tokens hold the post-lemmatize,
// pre-stem forms used for lexicon matching; stems align with them 1:1.
struct TokenizedDoc {
  std::string tweet_id;
  std::vector<std::string> surface_tokens;
  std::vector<std::string> stems;
};

// The normalization pipeline, in order: strip URLs and @mentions, strip
// '#' markers (hashtag bodies stay), lowercase, split on non-alphanumeric
// boundaries, drop stopwords and pure numbers, apply the lemma rule table,
// Porter-stem.
class TextPrep {
 public:
  TextPrep() = default;
  TextPrep(std::unordered_set<std::string> stopwords,
           std::unordered_map<std::string, std::string> lemma_rules);

  // stopwords: one word per line; lemma rules: TSV inflected_form \t lemma.
  // Throws ValidationError when a lemma rule's output is itself rewritten
  // by another rule or is a stopword (the table must be idempotent).
  static TextPrep load(const std::string& stopword_path, const std::string& lemma_path);

  TokenizedDoc preprocess(std::string_view text, std::string tweet_id = {}) const;

  std::size_t stopword_count() const { return stopwords_.size(); }
  std::size_t lemma_rule_count() const { return lemma_rules_.size(); }

 private:
  std::unordered_set<std::string> stopwords_;
  std::unordered_map<std::string, std::string> lemma_rules_;
};

std::vector<TokenizedDoc> preprocess_corpus(std::span<const Tweet> tweets,
                                            const TextPrep& prep,
                                            Exec exec = Exec::parallel);

}  // namespace tp
