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

#include "tweetpulse/sentiment.hpp"

#include <map>

namespace tp {

std::string_view to_string(Polarity p) {
  switch (p) {
    case Polarity::negative: return "negative";
    case Polarity::neutral: return "neutral";
    case Polarity::positive: return "positive";
  }
  return "neutral";
}

std::string_view to_string(SeriesStat s) {
  return s == SeriesStat::mean ? "mean" : "sum";
}

SentimentResult score_tweet(const TokenizedDoc& doc, const AfinnLexicon& lex) {
  SentimentResult result;
  result.tweet_id = doc.tweet_id;
  for (std::size_t i = 0; i < doc.surface_tokens.size(); ++i) {
    if (auto hit = lex.lookup(doc.surface_tokens[i], doc.stems[i])) {
      result.score += *hit;
    }
  }
  if (result.score > 0) {
    result.polarity = Polarity::positive;
  } else if (result.score < 0) {
    result.polarity = Polarity::negative;
  }
  return result;
}

std::vector<SentimentResult> score_corpus(std::span<const TokenizedDoc> docs,
                                          const AfinnLexicon& lex, Exec exec) {
  return map_indexed<SentimentResult>(docs.size(), exec,
                                      [&](std::size_t i) { return score_tweet(docs[i], lex); });
}

std::vector<SeriesPoint> daily_sentiment_series(std::span<const DatedScore> scores,
                                                SeriesStat stat) {
  struct Bucket {
    long long sum = 0;
    long long count = 0;
  };
  std::map<CivilDate, Bucket> by_date;
  for (const DatedScore& s : scores) {
    Bucket& b = by_date[s.date];
    b.sum += s.score;
    b.count += 1;
  }
  std::vector<SeriesPoint> series;
  series.reserve(by_date.size());
  for (const auto& [date, bucket] : by_date) {
    SeriesPoint point;
    point.date = date;
    point.metric = std::string(to_string(stat)) + "_sentiment";
    point.value = stat == SeriesStat::sum
                      ? static_cast<double>(bucket.sum)
                      : static_cast<double>(bucket.sum) / static_cast<double>(bucket.count);
    series.push_back(std::move(point));
  }
  return series;
}

}  // namespace tp
