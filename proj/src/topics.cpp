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

#include "tweetpulse/topics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <stdexcept>

#include "tweetpulse/errors.hpp"
#include "tweetpulse/exec.hpp"

namespace tp {

namespace {

// Mapping the raw 64-bit draw to [0,1) by hand keeps one chain's sequence
// identical across standard libraries.
double unit_from_bits(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// floor(u * n) with u in [0,1) never reaches n, but guard the boundary
// against rounding anyway.
int bounded_draw(std::mt19937_64& rng, int n) {
  int value = static_cast<int>(unit_from_bits(rng()) * n);
  return value < n ? value : n - 1;
}

// Fisher-Yates with the portable draw above; std::shuffle's sequence is
// implementation-defined, which would break cross-platform determinism.
void portable_shuffle(std::vector<int>& values, std::mt19937_64& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded_draw(rng, static_cast<int>(i)));
    std::swap(values[i - 1], values[j]);
  }
}

void check_priors(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw ValidationError("lda: alpha and beta must be positive");
  }
}

}  // namespace

long Corpus::total_tokens() const {
  long total = 0;
  for (const auto& doc : docs) total += static_cast<long>(doc.size());
  return total;
}

Corpus build_corpus(std::span<const TokenizedDoc> docs, std::span<const int> week_of_doc,
                    int num_weeks, Corpus::Mode mode, int min_count) {
  if (mode == Corpus::Mode::weekly_pooled && docs.size() != week_of_doc.size()) {
    throw ValidationError("corpus: week assignment count does not match document count");
  }
  if (min_count < 1) throw ValidationError("corpus: min_count must be >= 1");

  std::map<std::string, long> freq;
  for (const TokenizedDoc& doc : docs) {
    for (const std::string& stem : doc.stems) ++freq[stem];
  }

  Corpus corpus;
  corpus.mode = mode;
  std::map<std::string, int> index;
  for (const auto& [stem, count] : freq) {
    if (count >= min_count) {
      index.emplace(stem, static_cast<int>(corpus.vocab.size()));
      corpus.vocab.push_back(stem);
    }
  }

  auto encode = [&](const TokenizedDoc& doc, std::vector<int>& out) {
    for (const std::string& stem : doc.stems) {
      if (auto it = index.find(stem); it != index.end()) out.push_back(it->second);
    }
  };

  if (mode == Corpus::Mode::weekly_pooled) {
    if (num_weeks < 1) throw ValidationError("corpus: weekly pooling needs num_weeks >= 1");
    corpus.docs.resize(static_cast<std::size_t>(num_weeks));
    for (std::size_t i = 0; i < docs.size(); ++i) {
      int week = week_of_doc[i];
      if (week < 0 || week >= num_weeks) continue;
      encode(docs[i], corpus.docs[static_cast<std::size_t>(week)]);
    }
  } else {
    corpus.docs.resize(docs.size());
    for (std::size_t i = 0; i < docs.size(); ++i) encode(docs[i], corpus.docs[i]);
  }

  if (corpus.total_tokens() == 0) {
    throw ValidationError("corpus: no tokens survive the frequency threshold");
  }
  return corpus;
}

GibbsSampler::GibbsSampler(const Corpus& corpus, const LdaConfig& config)
    : docs_(corpus.docs),
      vocab_(corpus.vocab),
      topic_count_(config.topic_count),
      alpha_(config.alpha),
      beta_(config.beta),
      seed_(config.seed),
      rng_(config.seed) {
  if (topic_count_ < 1) throw ValidationError("lda: topic count must be >= 1");
  check_priors(alpha_, beta_);
  if (vocab_.empty()) throw ValidationError("lda: empty vocabulary");
  long corpus_tokens = 0;
  for (const auto& doc : docs_) corpus_tokens += static_cast<long>(doc.size());
  if (static_cast<long>(topic_count_) > corpus_tokens) {
    throw ValidationError("lda: topic count exceeds the corpus token count");
  }

  std::size_t d_count = docs_.size();
  std::size_t v_count = vocab_.size();
  n_dk_.assign(d_count, std::vector<long>(static_cast<std::size_t>(topic_count_), 0));
  n_kw_.assign(static_cast<std::size_t>(topic_count_), std::vector<long>(v_count, 0));
  n_k_.assign(static_cast<std::size_t>(topic_count_), 0);
  z_.resize(d_count);
  weight_buf_.resize(static_cast<std::size_t>(topic_count_));

  for (std::size_t d = 0; d < d_count; ++d) {
    z_[d].resize(docs_[d].size());
    for (std::size_t t = 0; t < docs_[d].size(); ++t) {
      int w = docs_[d][t];
      if (w < 0 || w >= static_cast<int>(v_count)) {
        throw ValidationError("lda: token index out of vocabulary range");
      }
      int k = bounded_draw(rng_, topic_count_);
      z_[d][t] = k;
      ++n_dk_[d][static_cast<std::size_t>(k)];
      ++n_kw_[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)];
      ++n_k_[static_cast<std::size_t>(k)];
      ++total_tokens_;
    }
  }
}

double GibbsSampler::next_unit() { return unit_from_bits(rng_()); }

int GibbsSampler::draw_topic(int doc, int word) {
  const auto& dk = n_dk_[static_cast<std::size_t>(doc)];
  double v_beta = static_cast<double>(vocab_.size()) * beta_;
  double total = 0.0;
  for (int k = 0; k < topic_count_; ++k) {
    std::size_t ks = static_cast<std::size_t>(k);
    double weight = (static_cast<double>(dk[ks]) + alpha_) *
                    (static_cast<double>(n_kw_[ks][static_cast<std::size_t>(word)]) + beta_) /
                    (static_cast<double>(n_k_[ks]) + v_beta);
    total += weight;
    weight_buf_[ks] = total;  // cumulative
  }
  double r = next_unit() * total;
  for (int k = 0; k < topic_count_; ++k) {
    if (r < weight_buf_[static_cast<std::size_t>(k)]) return k;
  }
  return topic_count_ - 1;
}

void GibbsSampler::sweep() {
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    for (std::size_t t = 0; t < docs_[d].size(); ++t) {
      int w = docs_[d][t];
      int old_k = z_[d][t];
      --n_dk_[d][static_cast<std::size_t>(old_k)];
      --n_kw_[static_cast<std::size_t>(old_k)][static_cast<std::size_t>(w)];
      --n_k_[static_cast<std::size_t>(old_k)];
      int new_k = draw_topic(static_cast<int>(d), w);
      z_[d][t] = new_k;
      ++n_dk_[d][static_cast<std::size_t>(new_k)];
      ++n_kw_[static_cast<std::size_t>(new_k)][static_cast<std::size_t>(w)];
      ++n_k_[static_cast<std::size_t>(new_k)];
    }
  }
}

TopicModel GibbsSampler::estimate() const {
  TopicModel model;
  model.topic_count = topic_count_;
  model.alpha = alpha_;
  model.beta = beta_;
  model.seed = seed_;
  model.vocab = vocab_;
  model.assignments = z_;

  std::size_t v_count = vocab_.size();
  double v_beta = static_cast<double>(v_count) * beta_;
  model.phi.assign(static_cast<std::size_t>(topic_count_), std::vector<double>(v_count, 0.0));
  for (int k = 0; k < topic_count_; ++k) {
    std::size_t ks = static_cast<std::size_t>(k);
    double denom = static_cast<double>(n_k_[ks]) + v_beta;
    for (std::size_t w = 0; w < v_count; ++w) {
      model.phi[ks][w] = (static_cast<double>(n_kw_[ks][w]) + beta_) / denom;
    }
  }

  double k_alpha = static_cast<double>(topic_count_) * alpha_;
  model.theta.assign(docs_.size(), std::vector<double>(static_cast<std::size_t>(topic_count_), 0.0));
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    double denom = static_cast<double>(docs_[d].size()) + k_alpha;
    for (int k = 0; k < topic_count_; ++k) {
      std::size_t ks = static_cast<std::size_t>(k);
      model.theta[d][ks] = (static_cast<double>(n_dk_[d][ks]) + alpha_) / denom;
    }
  }
  return model;
}

TopicModel fit_lda(const Corpus& corpus, const LdaConfig& config) {
  if (config.iterations < 1) throw ValidationError("lda: iterations must be >= 1");
  GibbsSampler sampler(corpus, config);
  for (int i = 0; i < config.iterations; ++i) sampler.sweep();
  return sampler.estimate();
}

PerplexityResult perplexity(const TopicModel& model,
                            std::span<const std::vector<std::string>> heldout_docs,
                            int fold_in_iterations) {
  std::map<std::string, int> index;
  for (std::size_t w = 0; w < model.vocab.size(); ++w) {
    index.emplace(model.vocab[w], static_cast<int>(w));
  }
  std::vector<std::vector<int>> observed(heldout_docs.size());
  std::vector<std::vector<int>> completion(heldout_docs.size());
  long skipped = 0;
  for (std::size_t d = 0; d < heldout_docs.size(); ++d) {
    // Position parity is taken on the raw token sequence, before any
    // out-of-vocabulary token is dropped.
    for (std::size_t t = 0; t < heldout_docs[d].size(); ++t) {
      auto it = index.find(heldout_docs[d][t]);
      if (it == index.end()) {
        ++skipped;
        continue;
      }
      (t % 2 == 0 ? observed : completion)[d].push_back(it->second);
    }
  }
  PerplexityResult result = perplexity_split(model, observed, completion, fold_in_iterations);
  result.skipped_tokens += skipped;
  return result;
}

PerplexityResult perplexity_split(const TopicModel& model,
                                  std::span<const std::vector<int>> observed,
                                  std::span<const std::vector<int>> completion,
                                  int fold_in_iterations) {
  if (observed.size() != completion.size()) {
    throw ValidationError("perplexity: observed/completion document counts differ");
  }
  if (fold_in_iterations < 1) throw ValidationError("perplexity: fold-in iterations must be >= 1");
  int topic_count = model.topic_count;
  if (topic_count < 1 || model.phi.size() != static_cast<std::size_t>(topic_count)) {
    throw ValidationError("perplexity: malformed model");
  }
  check_priors(model.alpha, model.beta);

  PerplexityResult result;
  double log_sum = 0.0;
  std::vector<long> dk(static_cast<std::size_t>(topic_count));
  std::vector<double> cumulative(static_cast<std::size_t>(topic_count));
  std::vector<double> theta(static_cast<std::size_t>(topic_count));

  for (std::size_t d = 0; d < observed.size(); ++d) {
    // Fold-in: resample this document's assignments against frozen phi.
    // The chain is seeded per document, so evaluation order cannot change
    // any document's estimate.
    std::mt19937_64 rng(mix_seed(model.seed, 0xF01Du ^ (static_cast<std::uint64_t>(d) << 16)));
    std::fill(dk.begin(), dk.end(), 0);
    std::vector<int> z(observed[d].size());
    for (std::size_t t = 0; t < observed[d].size(); ++t) {
      int k = bounded_draw(rng, topic_count);
      z[t] = k;
      ++dk[static_cast<std::size_t>(k)];
    }
    for (int iter = 0; iter < fold_in_iterations; ++iter) {
      for (std::size_t t = 0; t < observed[d].size(); ++t) {
        int w = observed[d][t];
        --dk[static_cast<std::size_t>(z[t])];
        double total = 0.0;
        for (int k = 0; k < topic_count; ++k) {
          std::size_t ks = static_cast<std::size_t>(k);
          total += (static_cast<double>(dk[ks]) + model.alpha) *
                   model.phi[ks][static_cast<std::size_t>(w)];
          cumulative[ks] = total;
        }
        double r = unit_from_bits(rng()) * total;
        int new_k = topic_count - 1;
        for (int k = 0; k < topic_count; ++k) {
          if (r < cumulative[static_cast<std::size_t>(k)]) {
            new_k = k;
            break;
          }
        }
        z[t] = new_k;
        ++dk[static_cast<std::size_t>(new_k)];
      }
    }

    double denom = static_cast<double>(observed[d].size()) +
                   static_cast<double>(topic_count) * model.alpha;
    for (int k = 0; k < topic_count; ++k) {
      std::size_t ks = static_cast<std::size_t>(k);
      theta[ks] = (static_cast<double>(dk[ks]) + model.alpha) / denom;
    }

    for (int w : completion[d]) {
      if (w < 0 || w >= static_cast<int>(model.vocab.size())) {
        throw ValidationError("perplexity: completion token index out of range");
      }
      double p = 0.0;
      for (int k = 0; k < topic_count; ++k) {
        std::size_t ks = static_cast<std::size_t>(k);
        p += theta[ks] * model.phi[ks][static_cast<std::size_t>(w)];
      }
      log_sum += std::log(p);
      ++result.evaluated_tokens;
    }
  }

  result.value = result.evaluated_tokens == 0
                     ? std::numeric_limits<double>::quiet_NaN()
                     : std::exp(-log_sum / static_cast<double>(result.evaluated_tokens));
  return result;
}

SelectionResult select_topic_count(const Corpus& corpus, std::span<const int> candidates,
                                   const SelectConfig& config) {
  if (candidates.empty()) throw ValidationError("topic selection: no candidate topic counts");
  for (int k : candidates) {
    if (k < 1) throw ValidationError("topic selection: topic counts must be >= 1");
  }
  if (config.heldout_percent < 1 || config.heldout_percent > 50) {
    throw ValidationError("topic selection: heldout percent must lie in [1,50]");
  }

  // One seeded split, reused by every candidate so their scores compare the
  // same completion tokens.
  std::vector<std::vector<int>> observed(corpus.docs.size());
  std::vector<std::vector<int>> completion(corpus.docs.size());
  for (std::size_t d = 0; d < corpus.docs.size(); ++d) {
    std::size_t len = corpus.docs[d].size();
    std::vector<int> order(len);
    for (std::size_t i = 0; i < len; ++i) order[i] = static_cast<int>(i);
    std::mt19937_64 rng(mix_seed(config.seed, 0x51137u ^ (static_cast<std::uint64_t>(d) << 20)));
    portable_shuffle(order, rng);
    std::size_t completion_count =
        len * static_cast<std::size_t>(config.heldout_percent) / 100;
    // Short documents still contribute one completion token, as long as at
    // least one observed token remains for the fold-in.
    if (completion_count == 0 && len >= 2) completion_count = 1;
    std::vector<bool> held(len, false);
    for (std::size_t i = 0; i < completion_count; ++i) {
      held[static_cast<std::size_t>(order[i])] = true;
    }
    for (std::size_t i = 0; i < len; ++i) {
      (held[i] ? completion : observed)[d].push_back(corpus.docs[d][i]);
    }
  }

  Corpus train;
  train.vocab = corpus.vocab;
  train.docs = observed;
  train.mode = corpus.mode;

  std::vector<CandidateResult> results =
      map_indexed<CandidateResult>(candidates.size(), config.exec, [&](std::size_t i) {
        CandidateResult out;
        out.topic_count = candidates[i];
        try {
          LdaConfig fit_config;
          fit_config.topic_count = candidates[i];
          fit_config.alpha = config.alpha > 0.0 ? config.alpha : 50.0 / candidates[i];
          fit_config.beta = config.beta;
          fit_config.iterations = config.iterations;
          fit_config.seed = mix_seed(config.seed, static_cast<std::uint64_t>(candidates[i]));
          TopicModel model = fit_lda(train, fit_config);
          PerplexityResult score =
              perplexity_split(model, observed, completion, config.fold_in_iterations);
          if (!std::isfinite(score.value)) {
            out.error = "no completion tokens evaluated";
          } else {
            out.perplexity = score.value;
          }
        } catch (const std::exception& e) {
          out.error = e.what();
        }
        return out;
      });

  SelectionResult selection;
  selection.candidates = std::move(results);
  double best = std::numeric_limits<double>::infinity();
  int best_k = 0;
  for (const CandidateResult& c : selection.candidates) {
    if (!c.perplexity) continue;
    // Strict < plus ascending candidate order breaks ties toward smaller K
    // when candidates are sorted; an explicit tie rule keeps it true for
    // any order.
    if (*c.perplexity < best || (*c.perplexity == best && c.topic_count < best_k)) {
      best = *c.perplexity;
      best_k = c.topic_count;
    }
  }
  if (best_k == 0) {
    throw ValidationError("topic selection: every candidate failed");
  }
  selection.best_topic_count = best_k;
  return selection;
}

std::vector<std::string> top_words(const TopicModel& model, int topic, int n) {
  if (topic < 0 || topic >= model.topic_count) {
    throw ValidationError("top_words: topic index out of range");
  }
  if (n < 0) n = 0;
  const auto& row = model.phi[static_cast<std::size_t>(topic)];
  std::vector<std::size_t> order(model.vocab.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return model.vocab[a] < model.vocab[b];
  });
  std::size_t take = std::min(static_cast<std::size_t>(n), order.size());
  std::vector<std::string> words;
  words.reserve(take);
  for (std::size_t i = 0; i < take; ++i) words.push_back(model.vocab[order[i]]);
  return words;
}

void save_model(const TopicModel& model, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("lda: cannot write " + path);
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf);
  };
  out << "lda_model 1\n";
  out << "topics " << model.topic_count << '\n';
  out << "alpha " << fmt(model.alpha) << '\n';
  out << "beta " << fmt(model.beta) << '\n';
  out << "seed " << model.seed << '\n';
  out << "vocab " << model.vocab.size() << '\n';
  for (const std::string& w : model.vocab) out << w << '\n';
  out << "phi " << model.phi.size() << '\n';
  for (const auto& row : model.phi) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << fmt(row[i]);
    }
    out << '\n';
  }
  out << "theta " << model.theta.size() << '\n';
  for (const auto& row : model.theta) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << fmt(row[i]);
    }
    out << '\n';
  }
}

}  // namespace tp
