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

#include "tweetpulse/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tweetpulse/emotion.hpp"
#include "tweetpulse/errors.hpp"
#include "tweetpulse/gazetteer.hpp"
#include "tweetpulse/report.hpp"
#include "tweetpulse/textprep.hpp"

namespace tp {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void config_fail(const std::string& what) {
  throw ValidationError("config: " + what);
}

const ordered_json& require(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) config_fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string require_string(const ordered_json& j, const char* key) {
  const ordered_json& v = require(j, key);
  if (!v.is_string()) config_fail(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

void check_readable(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(std::string("config: cannot open ") + what + " file " + path);
  }
}

// One kept record of the normalized corpus; everything later stages need.
struct PipelineRecord {
  std::string id;
  CivilDate date;
  int week = 0;
  std::optional<std::string> region;
  std::optional<GeoSource> source;
  std::vector<std::string> surface;
  std::vector<std::string> stems;
};

struct IngestOutcome {
  std::vector<PipelineRecord> records;
  IngestStats stats;
  long outside_window = 0;
  std::map<std::string, long> by_country;
  long source_counts[3] = {0, 0, 0};  // gps, place, profile
  long unresolved = 0;
};

// Removes this invocation's outputs unless the run commits, so a failed
// run never leaves a partial report bundle behind.
class OutputTracker {
 public:
  ~OutputTracker() {
    if (committed_) return;
    for (const std::string& path : paths_) {
      std::error_code ec;
      fs::remove(path, ec);
    }
  }

  void track(const std::string& path) { paths_.push_back(path); }
  void commit() { committed_ = true; }

 private:
  std::vector<std::string> paths_;
  bool committed_ = false;
};

std::ofstream open_output(const std::string& path, const char* stage, OutputTracker& tracker) {
  tracker.track(path);
  std::ofstream out(path);
  if (!out) throw StageError(stage, "cannot write " + path);
  return out;
}

std::optional<GeoSource> source_from_string(std::string_view s) {
  if (s == "gps") return GeoSource::gps;
  if (s == "place") return GeoSource::place;
  if (s == "profile") return GeoSource::profile;
  return std::nullopt;
}

IngestOutcome run_ingest(const RunConfig& config, const StudyWindow& window,
                         const Gazetteer& gazetteer, const TextPrep& prep) {
  IngestResult archive = load_archive_file(config.archive);
  IngestOutcome outcome;
  outcome.stats = archive.stats;

  std::vector<std::optional<GeoLocation>> locations =
      resolve_corpus(archive.tweets, gazetteer, config.exec);
  std::vector<TokenizedDoc> docs = preprocess_corpus(archive.tweets, prep, config.exec);

  for (std::size_t i = 0; i < archive.tweets.size(); ++i) {
    const Tweet& tweet = archive.tweets[i];
    std::optional<int> week = week_index(tweet.created_at, window);
    if (!week) {
      ++outcome.outside_window;
      continue;
    }
    PipelineRecord record;
    record.id = tweet.id;
    record.date = tweet.created_at.date();
    record.week = *week;
    if (locations[i]) {
      record.region = locations[i]->country;
      record.source = locations[i]->source;
      ++outcome.by_country[locations[i]->country];
      ++outcome.source_counts[static_cast<int>(locations[i]->source)];
    } else {
      ++outcome.unresolved;
    }
    record.surface = std::move(docs[i].surface_tokens);
    record.stems = std::move(docs[i].stems);
    outcome.records.push_back(std::move(record));
  }
  return outcome;
}

void write_corpus_jsonl(const std::string& path, std::span<const PipelineRecord> records,
                        OutputTracker& tracker) {
  std::ofstream out = open_output(path, "ingest", tracker);
  for (const PipelineRecord& r : records) {
    ordered_json j;
    j["id"] = r.id;
    j["date"] = r.date.to_string();
    j["week"] = r.week;
    if (r.region) {
      j["region"] = *r.region;
      j["source"] = std::string(to_string(*r.source));
    } else {
      j["region"] = nullptr;
      j["source"] = nullptr;
    }
    j["surface"] = r.surface;
    j["stems"] = r.stems;
    out << j.dump() << '\n';
  }
  if (!out) throw StageError("ingest", "write failed for " + path);
}

std::vector<PipelineRecord> read_corpus_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StageError("score", "cannot open intermediate corpus " + path);
  std::vector<PipelineRecord> records;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    ordered_json j = ordered_json::parse(line, nullptr, false);
    auto malformed = [&](const std::string& what) -> ValidationError {
      return ValidationError("corpus " + path + ": line " + std::to_string(line_number) + ": " + what);
    };
    if (j.is_discarded()) throw malformed("not valid JSON");
    PipelineRecord r;
    try {
      r.id = j.at("id").get<std::string>();
      auto date = CivilDate::parse(j.at("date").get<std::string>());
      if (!date) throw malformed("bad date");
      r.date = *date;
      r.week = j.at("week").get<int>();
      if (!j.at("region").is_null()) {
        r.region = j.at("region").get<std::string>();
        auto source = source_from_string(j.at("source").get<std::string>());
        if (!source) throw malformed("bad source");
        r.source = *source;
      }
      r.surface = j.at("surface").get<std::vector<std::string>>();
      r.stems = j.at("stems").get<std::vector<std::string>>();
    } catch (const ordered_json::exception& e) {
      throw malformed(e.what());
    }
    if (r.surface.size() != r.stems.size()) throw malformed("surface/stem length mismatch");
    records.push_back(std::move(r));
  }
  return records;
}

TokenizedDoc to_doc(const PipelineRecord& r) {
  TokenizedDoc doc;
  doc.tweet_id = r.id;
  doc.surface_tokens = r.surface;
  doc.stems = r.stems;
  return doc;
}

struct StageOutputs {
  std::vector<SeriesPoint> sentiment;
  std::vector<EmotionProportions> emotions;
  std::optional<SelectionResult> selection;
  std::optional<TopicModel> model;
  std::vector<std::string> warnings;
  long afinn_token_hits = 0;
  long emolex_token_hits = 0;
  long tokens_total = 0;
  long topic_tokens_modeled = 0;
  long topic_tokens_skipped = 0;  // stems dropped by the min_count threshold
};

void run_score(const RunConfig& config, std::span<const PipelineRecord> records,
               const AfinnLexicon& afinn, const std::string& out_dir, OutputTracker& tracker,
               StageOutputs& outputs) {
  std::vector<TokenizedDoc> docs;
  docs.reserve(records.size());
  for (const PipelineRecord& r : records) docs.push_back(to_doc(r));
  std::vector<SentimentResult> scored = score_corpus(docs, afinn, config.exec);

  std::vector<DatedScore> dated;
  dated.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    dated.push_back({records[i].date, scored[i].score});
  }
  outputs.sentiment = daily_sentiment_series(dated, config.sentiment_stat);

  std::string path = out_dir + "/sentiment_daily.csv";
  std::ofstream out = open_output(path, "score", tracker);
  write_sentiment_csv(out, outputs.sentiment, config.sentiment_stat);
  if (!out) throw StageError("score", "write failed for " + path);
  out.close();

  if (config.events) {
    std::vector<Event> events = load_events(*config.events);
    std::ifstream series_in(path);
    if (!series_in) throw StageError("score", "cannot reopen " + path);
    std::string annotated_path = out_dir + "/sentiment_daily_annotated.csv";
    std::ofstream annotated = open_output(annotated_path, "score", tracker);
    AnnotateResult annotate = annotate_events(series_in, annotated, events);
    if (!annotated) throw StageError("score", "write failed for " + annotated_path);
    outputs.warnings.insert(outputs.warnings.end(), annotate.warnings.begin(),
                            annotate.warnings.end());
  }
}

void run_emotions(const RunConfig& config, std::span<const PipelineRecord> records,
                  const EmoLexicon& emolex, const StudyWindow& window,
                  const std::string& out_dir, OutputTracker& tracker, StageOutputs& outputs) {
  std::vector<TokenizedDoc> docs;
  docs.reserve(records.size());
  for (const PipelineRecord& r : records) docs.push_back(to_doc(r));
  std::vector<EmotionTally> tallies = tally_corpus(docs, emolex, config.exec);

  std::set<std::string> wanted(config.regions.begin(), config.regions.end());
  std::map<CellKey, EmotionTally> cells;
  for (std::size_t i = 0; i < records.size(); ++i) {
    cells[{records[i].week, "global"}] += tallies[i];
    if (records[i].region && wanted.contains(*records[i].region)) {
      cells[{records[i].week, *records[i].region}] += tallies[i];
    }
  }
  outputs.emotions = weekly_emotion_proportions(cells);

  std::string path = out_dir + "/emotions_weekly.csv";
  std::ofstream out = open_output(path, "emotions", tracker);
  write_emotions_csv(out, outputs.emotions, window);
  if (!out) throw StageError("emotions", "write failed for " + path);
}

void run_topics(const RunConfig& config, std::span<const PipelineRecord> records,
                const StudyWindow& window, const std::string& out_dir, OutputTracker& tracker,
                StageOutputs& outputs) {
  if (config.k_candidates.empty()) {
    throw ValidationError("config: topics.candidates must not be empty");
  }
  std::vector<TokenizedDoc> docs;
  std::vector<int> week_of_doc;
  docs.reserve(records.size());
  week_of_doc.reserve(records.size());
  for (const PipelineRecord& r : records) {
    docs.push_back(to_doc(r));
    week_of_doc.push_back(r.week);
  }

  Corpus corpus = build_corpus(docs, week_of_doc, window.num_weeks, config.lda_mode,
                               config.min_count);
  long stems_total = 0;
  for (const TokenizedDoc& doc : docs) stems_total += static_cast<long>(doc.stems.size());
  outputs.topic_tokens_modeled = corpus.total_tokens();
  outputs.topic_tokens_skipped = stems_total - corpus.total_tokens();

  SelectConfig select;
  select.alpha = config.alpha;
  select.beta = config.beta;
  select.iterations = config.iterations;
  select.fold_in_iterations = config.fold_in_iterations;
  select.seed = config.seed;
  select.exec = config.exec;
  outputs.selection = select_topic_count(corpus, config.k_candidates, select);

  int best_k = outputs.selection->best_topic_count;
  LdaConfig fit_config;
  fit_config.topic_count = best_k;
  fit_config.alpha = config.alpha > 0.0 ? config.alpha : 50.0 / best_k;
  fit_config.beta = config.beta;
  fit_config.iterations = config.iterations;
  fit_config.seed = mix_seed(config.seed, 0xF17A10ull ^ static_cast<std::uint64_t>(best_k));
  outputs.model = fit_lda(corpus, fit_config);

  std::string report_path = out_dir + "/topics_report.csv";
  std::ofstream report = open_output(report_path, "topics", tracker);
  write_topics_csv(report, *outputs.model, window, config.top_words);
  if (!report) throw StageError("topics", "write failed for " + report_path);
  report.close();

  std::string model_path = out_dir + "/lda_model.txt";
  tracker.track(model_path);
  save_model(*outputs.model, model_path);
}

void count_lexicon_hits(std::span<const PipelineRecord> records, const AfinnLexicon& afinn,
                        const EmoLexicon& emolex, StageOutputs& outputs) {
  for (const PipelineRecord& r : records) {
    for (std::size_t i = 0; i < r.surface.size(); ++i) {
      ++outputs.tokens_total;
      if (afinn.lookup(r.surface[i], r.stems[i])) ++outputs.afinn_token_hits;
      if (emolex.lookup(r.surface[i], r.stems[i])) ++outputs.emolex_token_hits;
    }
  }
}

// The manifest echoes the configuration without out_dir, so two runs that
// differ only in their output directory produce identical bytes.
ordered_json config_echo(const RunConfig& config) {
  ordered_json j;
  j["archive"] = config.archive;
  j["afinn"] = config.afinn;
  j["emolex"] = config.emolex;
  j["gazetteer_names"] = config.gazetteer_names;
  j["country_boxes"] = config.country_boxes;
  j["stopwords"] = config.stopwords;
  j["lemma_rules"] = config.lemma_rules;
  if (config.events) j["events"] = *config.events;
  j["start_date"] = config.start_date.to_string();
  j["num_weeks"] = config.num_weeks;
  j["regions"] = config.regions;
  j["sentiment_stat"] = std::string(to_string(config.sentiment_stat));
  j["lda_mode"] = config.lda_mode == Corpus::Mode::weekly_pooled ? "weekly_pooled" : "per_tweet";
  j["k_candidates"] = config.k_candidates;
  j["alpha"] = config.alpha;
  j["beta"] = config.beta;
  j["iterations"] = config.iterations;
  j["fold_in_iterations"] = config.fold_in_iterations;
  j["min_count"] = config.min_count;
  j["top_words"] = config.top_words;
  j["seed"] = config.seed;
  return j;
}

void write_manifest(const RunConfig& config, const IngestOutcome& ingest,
                    const StageOutputs& outputs, std::size_t afinn_words,
                    std::size_t emolex_words, const std::string& out_dir,
                    OutputTracker& tracker) {
  ordered_json j;
  j["tool"] = "tweetpulse";
  j["manifest_version"] = 1;
  j["config"] = config_echo(config);

  ordered_json ingest_j;
  ingest_j["records_read"] = ingest.stats.records_read;
  ingest_j["kept"] = ingest.stats.kept;
  ingest_j["duplicates_dropped"] = ingest.stats.duplicates_dropped;
  ingest_j["non_english_dropped"] = ingest.stats.non_english_dropped;
  ingest_j["outside_window"] = ingest.outside_window;
  ingest_j["in_window"] = static_cast<long>(ingest.records.size());
  j["ingest"] = ingest_j;

  ordered_json geo;
  geo["gps"] = ingest.source_counts[0];
  geo["place"] = ingest.source_counts[1];
  geo["profile"] = ingest.source_counts[2];
  geo["unresolved"] = ingest.unresolved;
  long resolved = ingest.source_counts[0] + ingest.source_counts[1] + ingest.source_counts[2];
  long in_window = static_cast<long>(ingest.records.size());
  geo["resolution_rate"] =
      in_window > 0 ? static_cast<double>(resolved) / static_cast<double>(in_window) : 0.0;
  ordered_json by_country = ordered_json::object();
  for (const auto& [code, count] : ingest.by_country) by_country[code] = count;
  geo["by_country"] = by_country;
  j["geolocation"] = geo;

  ordered_json lex;
  lex["afinn_words"] = afinn_words;
  lex["emolex_words"] = emolex_words;
  lex["tokens_total"] = outputs.tokens_total;
  lex["afinn_token_hits"] = outputs.afinn_token_hits;
  lex["emolex_token_hits"] = outputs.emolex_token_hits;
  j["lexicons"] = lex;

  if (outputs.selection) {
    ordered_json topics;
    topics["mode"] =
        config.lda_mode == Corpus::Mode::weekly_pooled ? "weekly_pooled" : "per_tweet";
    topics["vocabulary"] = outputs.model ? outputs.model->vocab.size() : 0;
    ordered_json candidates = ordered_json::array();
    for (const CandidateResult& c : outputs.selection->candidates) {
      ordered_json row;
      row["k"] = c.topic_count;
      if (c.perplexity) {
        row["perplexity"] = *c.perplexity;
      } else {
        row["perplexity"] = nullptr;
        row["error"] = c.error;
      }
      candidates.push_back(row);
    }
    topics["candidates"] = candidates;
    topics["selected_k"] = outputs.selection->best_topic_count;
    topics["tokens_modeled"] = outputs.topic_tokens_modeled;
    topics["tokens_skipped"] = outputs.topic_tokens_skipped;
    j["topics"] = topics;
  }

  j["warnings"] = outputs.warnings;

  std::string path = out_dir + "/run_manifest.json";
  std::ofstream out = open_output(path, "report", tracker);
  out << j.dump(2) << '\n';
  if (!out) throw StageError("report", "write failed for " + path);
}

}  // namespace

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot open " + path);
  ordered_json j = ordered_json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ValidationError("config: " + path + " is not valid JSON");

  RunConfig config;
  config.archive = require_string(j, "archive");
  const ordered_json& lexicons = require(j, "lexicons");
  config.afinn = require_string(lexicons, "afinn");
  config.emolex = require_string(lexicons, "emolex");
  const ordered_json& gazetteer = require(j, "gazetteer");
  config.gazetteer_names = require_string(gazetteer, "names");
  config.country_boxes = require_string(gazetteer, "boxes");
  config.stopwords = require_string(j, "stopwords");
  config.lemma_rules = require_string(j, "lemma_rules");
  if (j.contains("events")) config.events = require_string(j, "events");

  const ordered_json& window = require(j, "window");
  auto start = CivilDate::parse(require_string(window, "start"));
  if (!start) config_fail("window.start is not a valid date");
  config.start_date = *start;
  const ordered_json& weeks = require(window, "weeks");
  if (!weeks.is_number_integer()) config_fail("window.weeks must be an integer");
  config.num_weeks = weeks.get<int>();

  if (j.contains("regions")) {
    const ordered_json& regions = j["regions"];
    if (!regions.is_array()) config_fail("regions must be an array of country codes");
    for (const auto& r : regions) {
      if (!r.is_string()) config_fail("regions must be an array of country codes");
      config.regions.push_back(r.get<std::string>());
    }
  }

  if (j.contains("sentiment_stat")) {
    std::string stat = require_string(j, "sentiment_stat");
    if (stat == "mean") config.sentiment_stat = SeriesStat::mean;
    else if (stat == "sum") config.sentiment_stat = SeriesStat::sum;
    else config_fail("sentiment_stat must be \"mean\" or \"sum\"");
  }

  if (j.contains("topics")) {
    const ordered_json& topics = j["topics"];
    if (topics.contains("mode")) {
      std::string mode = require_string(topics, "mode");
      if (mode == "weekly_pooled") config.lda_mode = Corpus::Mode::weekly_pooled;
      else if (mode == "per_tweet") config.lda_mode = Corpus::Mode::per_tweet;
      else config_fail("topics.mode must be \"weekly_pooled\" or \"per_tweet\"");
    }
    if (topics.contains("candidates")) {
      const ordered_json& candidates = topics["candidates"];
      if (!candidates.is_array()) config_fail("topics.candidates must be an array");
      for (const auto& c : candidates) {
        if (!c.is_number_integer()) config_fail("topics.candidates must hold integers");
        config.k_candidates.push_back(c.get<int>());
      }
    }
    auto number = [&](const char* key, double fallback) {
      if (!topics.contains(key)) return fallback;
      if (!topics[key].is_number()) config_fail(std::string("topics.") + key + " must be a number");
      return topics[key].get<double>();
    };
    auto integer = [&](const char* key, int fallback) {
      if (!topics.contains(key)) return fallback;
      if (!topics[key].is_number_integer()) {
        config_fail(std::string("topics.") + key + " must be an integer");
      }
      return topics[key].get<int>();
    };
    config.alpha = number("alpha", config.alpha);
    config.beta = number("beta", config.beta);
    config.iterations = integer("iterations", config.iterations);
    config.fold_in_iterations = integer("fold_in_iterations", config.fold_in_iterations);
    config.min_count = integer("min_count", config.min_count);
    config.top_words = integer("top_words", config.top_words);
  }

  if (j.contains("seed")) {
    const ordered_json& seed = j["seed"];
    if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
      config_fail("seed must be a non-negative integer");
    }
    if (seed.is_number_integer() && seed.get<std::int64_t>() < 0) {
      config_fail("seed must be a non-negative integer");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("out_dir")) config.out_dir = require_string(j, "out_dir");
  if (j.contains("exec")) {
    std::string exec = require_string(j, "exec");
    if (exec == "serial") config.exec = Exec::serial;
    else if (exec == "parallel") config.exec = Exec::parallel;
    else config_fail("exec must be \"serial\" or \"parallel\"");
  }
  return config;
}

std::optional<Stage> parse_stage(std::string_view name) {
  if (name == "all") return Stage::all;
  if (name == "ingest") return Stage::ingest;
  if (name == "score") return Stage::score;
  if (name == "emotions") return Stage::emotions;
  if (name == "topics") return Stage::topics;
  return std::nullopt;
}

void run_pipeline(const RunConfig& config, Stage stage) {
  if (config.out_dir.empty()) throw ValidationError("config: out_dir is not set");

  // Fail before any stage starts if an input is unreadable.
  check_readable(config.archive, "archive");
  check_readable(config.afinn, "afinn lexicon");
  check_readable(config.emolex, "emotion lexicon");
  check_readable(config.gazetteer_names, "gazetteer names");
  check_readable(config.country_boxes, "country boxes");
  check_readable(config.stopwords, "stopword");
  check_readable(config.lemma_rules, "lemma rule");
  if (config.events) check_readable(*config.events, "events");

  StudyWindow window = StudyWindow::make(config.start_date, config.num_weeks);
  AfinnLexicon afinn = AfinnLexicon::load(config.afinn);
  EmoLexicon emolex = EmoLexicon::load(config.emolex);
  Gazetteer gazetteer = Gazetteer::load(config.gazetteer_names, config.country_boxes);
  TextPrep prep = TextPrep::load(config.stopwords, config.lemma_rules);

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw ValidationError("config: cannot create out_dir " + config.out_dir);

  OutputTracker tracker;
  std::string corpus_path = config.out_dir + "/corpus.jsonl";

  if (stage == Stage::all || stage == Stage::ingest) {
    IngestOutcome ingest = run_ingest(config, window, gazetteer, prep);
    if (ingest.records.empty()) throw StageError("ingest", "empty corpus");
    write_corpus_jsonl(corpus_path, ingest.records, tracker);
    if (stage == Stage::ingest) {
      tracker.commit();
      return;
    }
    StageOutputs outputs;
    run_score(config, ingest.records, afinn, config.out_dir, tracker, outputs);
    run_emotions(config, ingest.records, emolex, window, config.out_dir, tracker, outputs);
    run_topics(config, ingest.records, window, config.out_dir, tracker, outputs);
    count_lexicon_hits(ingest.records, afinn, emolex, outputs);
    write_manifest(config, ingest, outputs, afinn.size(), emolex.size(), config.out_dir,
                   tracker);
    tracker.commit();
    return;
  }

  // Single later stage: reuse the intermediate corpus when present,
  // otherwise produce it first.
  std::vector<PipelineRecord> records;
  if (fs::exists(corpus_path)) {
    records = read_corpus_jsonl(corpus_path);
  } else {
    IngestOutcome ingest = run_ingest(config, window, gazetteer, prep);
    write_corpus_jsonl(corpus_path, ingest.records, tracker);
    records = std::move(ingest.records);
  }
  if (records.empty()) throw StageError("ingest", "empty corpus");

  StageOutputs outputs;
  switch (stage) {
    case Stage::score:
      run_score(config, records, afinn, config.out_dir, tracker, outputs);
      break;
    case Stage::emotions:
      run_emotions(config, records, emolex, window, config.out_dir, tracker, outputs);
      break;
    case Stage::topics:
      run_topics(config, records, window, config.out_dir, tracker, outputs);
      break;
    case Stage::all:
    case Stage::ingest:
      break;  // handled above
  }
  tracker.commit();
}

}  // namespace tp
