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

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "tweetpulse/textprep.hpp"

namespace tp {

// Bag-of-words corpus over a fixed vocabulary of stems.
struct Corpus {
  enum class Mode { weekly_pooled, per_tweet };

  std::vector<std::string> vocab;      // sorted, unique
  std::vector<std::vector<int>> docs;  // vocab indices; empty docs allowed
  Mode mode = Mode::weekly_pooled;

  long total_tokens() const;
};

// weekly_pooled concatenates each week's stems into one document (one doc
// per week, empty weeks included); per_tweet keeps one doc per tweet.
// Vocabulary keeps stems with corpus frequency >= min_count. Throws
// ValidationError when no tokens survive.
Corpus build_corpus(std::span<const TokenizedDoc> docs,
                    std::span<const int> week_of_doc,
                    int num_weeks,
                    Corpus::Mode mode,
                    int min_count = 2);

struct LdaConfig {
  int topic_count = 1;
  double alpha = 1.0;  // per-topic, symmetric
  double beta = 0.01;
  int iterations = 1000;
  std::uint64_t seed = 0;
};

struct TopicModel {
  int topic_count = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> vocab;
  std::vector<std::vector<double>> phi;          // K x V, rows on the simplex
  std::vector<std::vector<double>> theta;        // D x K, rows on the simplex
  std::vector<std::vector<int>> assignments;     // per-token topic labels
};

// Collapsed Gibbs sampler over token-topic assignments. One chain is
// strictly sequential; independent chains may run concurrently.
class GibbsSampler {
 public:
  GibbsSampler(const Corpus& corpus, const LdaConfig& config);

  void sweep();  // one full pass over every token

  TopicModel estimate() const;  // posterior means from current counts

  // Count surfaces for the sampler invariants.
  const std::vector<std::vector<long>>& doc_topic_counts() const { return n_dk_; }
  const std::vector<std::vector<long>>& topic_word_counts() const { return n_kw_; }
  const std::vector<long>& topic_totals() const { return n_k_; }
  const std::vector<std::vector<int>>& assignments() const { return z_; }
  const std::vector<std::vector<int>>& docs() const { return docs_; }
  long total_tokens() const { return total_tokens_; }

 private:
  std::vector<std::vector<int>> docs_;
  std::vector<std::string> vocab_;
  int topic_count_;
  double alpha_, beta_;
  std::uint64_t seed_;
  std::vector<std::vector<long>> n_dk_;  // D x K
  std::vector<std::vector<long>> n_kw_;  // K x V
  std::vector<long> n_k_;                // K
  std::vector<std::vector<int>> z_;
  long total_tokens_ = 0;
  std::mt19937_64 rng_;
  std::vector<double> weight_buf_;

  double next_unit();
  int draw_topic(int doc, int word);
};

// Runs `iterations` full sweeps from a seeded random initialization.
// Identical corpus, config, and seed give bit-identical output.
TopicModel fit_lda(const Corpus& corpus, const LdaConfig& config);

struct PerplexityResult {
  double value = 0.0;
  long evaluated_tokens = 0;
  long skipped_tokens = 0;  // held-out tokens absent from the vocabulary
};

// Document-completion perplexity: theta for each held-out document is
// estimated by Gibbs fold-in on its observed half (even token positions)
// with phi frozen; the score is exp(-mean log p(w|d)) over the completion
// half (odd positions). Tokens missing from the model vocabulary are
// skipped and tallied.
PerplexityResult perplexity(const TopicModel& model,
                            std::span<const std::vector<std::string>> heldout_docs,
                            int fold_in_iterations);

// Core evaluator over pre-indexed observed/completion splits.
PerplexityResult perplexity_split(const TopicModel& model,
                                  std::span<const std::vector<int>> observed,
                                  std::span<const std::vector<int>> completion,
                                  int fold_in_iterations);

struct SelectConfig {
  double alpha = -1.0;  // <= 0 means 50/K
  double beta = 0.01;
  int iterations = 1000;
  int fold_in_iterations = 50;
  std::uint64_t seed = 0;
  int heldout_percent = 10;  // completion share of each document's tokens
  Exec exec = Exec::parallel;
};

struct CandidateResult {
  int topic_count = 0;
  std::optional<double> perplexity;
  std::string error;  // set when the fit for this K failed
};

struct SelectionResult {
  int best_topic_count = 0;
  std::vector<CandidateResult> candidates;
};

// Splits each document's tokens 90/10 with a seeded shuffle (one split,
// shared by every candidate), fits each K on the 90% side, and scores
// document-completion perplexity on the 10% side. Documents of 2..9
// tokens hold out one token so short corpora stay scoreable. Smallest
// perplexity wins; ties break toward the smaller K. Per-K fits are
// independent and may run in parallel without changing the result.
SelectionResult select_topic_count(const Corpus& corpus,
                                   std::span<const int> candidates,
                                   const SelectConfig& config);

// The n highest-probability words of topic k, ties broken
// lexicographically; n beyond the vocabulary size truncates.
std::vector<std::string> top_words(const TopicModel& model, int topic, int n);

// Structured text export: topic count, priors, seed, vocabulary, and the
// phi/theta matrices row-major at 9 significant digits.
void save_model(const TopicModel& model, const std::string& path);

}  // namespace tp
