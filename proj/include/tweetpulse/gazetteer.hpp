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

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "tweetpulse/exec.hpp"
#include "tweetpulse/ingest.hpp"

namespace tp {

enum class GeoSource { gps, place, profile };

std::string_view to_string(GeoSource s);

struct GeoLocation {
  std::string country;  // ISO 3166-1 alpha-2
  GeoSource source = GeoSource::profile;

  friend bool operator==(const GeoLocation&, const GeoLocation&) = default;
};

// Country-level place-name table plus per-country bounding boxes for GPS
// lookup. Name matching is case-insensitive after normalization
// (lowercase, punctuation stripped, whitespace collapsed).
class Gazetteer {
 public:
  struct BoundingBox {
    std::string country;
    double lat_min, lat_max, lon_min, lon_max;

    bool contains(double lat, double lon) const {
      return lat >= lat_min && lat <= lat_max && lon >= lon_min && lon <= lon_max;
    }
    double area() const { return (lat_max - lat_min) * (lon_max - lon_min); }
  };

  // names file: TSV name \t country_code; boxes file: TSV country_code \t
  // lat_min \t lat_max \t lon_min \t lon_max. '#' lines are comments.
  static Gazetteer load(const std::string& names_path, const std::string& boxes_path);

  // Smallest-area box containing the point wins; ties go to the
  // lexicographically smaller country code.
  std::optional<std::string> country_for_point(double lat, double lon) const;

  // Normalizes the free-text string and matches token n-grams against the
  // name table. The longest match wins; if the longest matches disagree on
  // the country, the string is ambiguous and stays unresolved.
  std::optional<std::string> match_profile(std::string_view text) const;

  bool known_country(std::string_view code) const;

  std::size_t name_count() const { return names_.size(); }

  void add_name(std::string_view name, std::string_view country);
  void add_box(const BoundingBox& box);

 private:
  std::unordered_map<std::string, std::string> names_;  // normalized -> code
  std::vector<BoundingBox> boxes_;                       // sorted by (area, code)
  std::unordered_set<std::string> countries_;
  std::size_t max_name_tokens_ = 0;
};

// Lowercases, replaces punctuation with spaces, splits on whitespace.
std::vector<std::string> normalize_place_tokens(std::string_view text);

// Precedence: gps > place_country > profile_location. The first present
// field decides; when it cannot be resolved the tweet stays unresolved, so
// lower-precedence fields never override richer metadata.
std::optional<GeoLocation> resolve_location(const Tweet& t, const Gazetteer& g);

std::vector<std::optional<GeoLocation>> resolve_corpus(std::span<const Tweet> tweets,
                                                       const Gazetteer& g,
                                                       Exec exec = Exec::parallel);

}  // namespace tp
