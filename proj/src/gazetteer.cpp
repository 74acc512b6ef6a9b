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

#include "tweetpulse/gazetteer.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "tweetpulse/errors.hpp"

namespace tp {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

double parse_double(const std::string& text, const std::string& context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("gazetteer: " + context + ": bad number \"" + text + "\"");
  }
  return value;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string_view to_string(GeoSource s) {
  switch (s) {
    case GeoSource::gps: return "gps";
    case GeoSource::place: return "place";
    case GeoSource::profile: return "profile";
  }
  return "profile";
}

std::vector<std::string> normalize_place_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : text) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (std::isalnum(uc)) {
      current.push_back(static_cast<char>(std::tolower(uc)));
    } else if (uc >= 0x80) {
      current.push_back(c);  // keep non-ASCII bytes intact
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

void Gazetteer::add_name(std::string_view name, std::string_view country) {
  auto tokens = normalize_place_tokens(name);
  if (tokens.empty()) throw ValidationError("gazetteer: empty place name");
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) key.push_back(' ');
    key += tokens[i];
  }
  std::string code = upper(std::string(country));
  auto [it, inserted] = names_.emplace(key, code);
  if (!inserted && it->second != code) {
    throw ValidationError("gazetteer: name \"" + key + "\" maps to both " + it->second +
                          " and " + code);
  }
  max_name_tokens_ = std::max(max_name_tokens_, tokens.size());
  countries_.insert(code);
}

void Gazetteer::add_box(const BoundingBox& box) {
  if (box.lat_min > box.lat_max || box.lon_min > box.lon_max) {
    throw ValidationError("gazetteer: degenerate bounding box for " + box.country);
  }
  BoundingBox b = box;
  b.country = upper(b.country);
  countries_.insert(b.country);
  // Ordered insert keeps lookups correct after every addition; the table
  // is small enough that per-insert cost does not matter.
  auto before = [](const BoundingBox& x, const BoundingBox& y) {
    if (x.area() != y.area()) return x.area() < y.area();
    return x.country < y.country;
  };
  boxes_.insert(std::upper_bound(boxes_.begin(), boxes_.end(), b, before), std::move(b));
}

Gazetteer Gazetteer::load(const std::string& names_path, const std::string& boxes_path) {
  Gazetteer g;

  std::ifstream names(names_path);
  if (!names) throw ValidationError("gazetteer: cannot open " + names_path);
  std::string line;
  long line_number = 0;
  while (std::getline(names, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 2) {
      throw ValidationError("gazetteer: " + names_path + " line " +
                            std::to_string(line_number) + ": expected name<TAB>country_code");
    }
    g.add_name(fields[0], fields[1]);
  }

  std::ifstream boxes(boxes_path);
  if (!boxes) throw ValidationError("gazetteer: cannot open " + boxes_path);
  line_number = 0;
  while (std::getline(boxes, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    if (fields.size() != 5) {
      throw ValidationError("gazetteer: " + boxes_path + " line " + std::to_string(line_number) +
                            ": expected country_code<TAB>lat_min<TAB>lat_max<TAB>lon_min<TAB>lon_max");
    }
    std::string context = boxes_path + " line " + std::to_string(line_number);
    g.add_box(BoundingBox{fields[0], parse_double(fields[1], context),
                          parse_double(fields[2], context), parse_double(fields[3], context),
                          parse_double(fields[4], context)});
  }
  return g;
}

std::optional<std::string> Gazetteer::country_for_point(double lat, double lon) const {
  // boxes_ are ordered smallest first, so the first hit is the tightest.
  for (const auto& box : boxes_) {
    if (box.contains(lat, lon)) return box.country;
  }
  return std::nullopt;
}

std::optional<std::string> Gazetteer::match_profile(std::string_view text) const {
  auto tokens = normalize_place_tokens(text);
  if (tokens.empty() || names_.empty()) return std::nullopt;

  std::size_t longest = std::min(max_name_tokens_, tokens.size());
  std::string key;
  for (std::size_t len = longest; len >= 1; --len) {
    const std::string* found = nullptr;
    bool ambiguous = false;
    for (std::size_t start = 0; start + len <= tokens.size(); ++start) {
      key.clear();
      for (std::size_t i = 0; i < len; ++i) {
        if (i) key.push_back(' ');
        key += tokens[start + i];
      }
      auto it = names_.find(key);
      if (it == names_.end()) continue;
      if (found && *found != it->second) {
        ambiguous = true;
        break;
      }
      found = &it->second;
    }
    if (ambiguous) return std::nullopt;
    if (found) return *found;
  }
  return std::nullopt;
}

bool Gazetteer::known_country(std::string_view code) const {
  return countries_.contains(std::string(code));
}

std::optional<GeoLocation> resolve_location(const Tweet& t, const Gazetteer& g) {
  if (t.gps) {
    if (auto country = g.country_for_point(t.gps->lat, t.gps->lon)) {
      return GeoLocation{*country, GeoSource::gps};
    }
    return std::nullopt;
  }
  if (t.place_country) {
    if (g.known_country(*t.place_country)) {
      return GeoLocation{*t.place_country, GeoSource::place};
    }
    return std::nullopt;
  }
  if (t.profile_location) {
    if (auto country = g.match_profile(*t.profile_location)) {
      return GeoLocation{*country, GeoSource::profile};
    }
  }
  return std::nullopt;
}

std::vector<std::optional<GeoLocation>> resolve_corpus(std::span<const Tweet> tweets,
                                                       const Gazetteer& g, Exec exec) {
  return map_indexed<std::optional<GeoLocation>>(
      tweets.size(), exec, [&](std::size_t i) { return resolve_location(tweets[i], g); });
}

}  // namespace tp
