#!/usr/bin/env python3
# Copyright 2026 The Tweetpulse Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the synthetic tweet archives used by the tests.

tweets_500.jsonl: 500 in-window English records (every day of the window
covered) plus duplicates, non-English records, and out-of-window records,
deterministically shuffled. tweets_gps10.jsonl: ten records, all with GPS.
tweets_empty.jsonl: zero records.
"""

import json
import os
import random

START = (2020, 3, 12)
DAYS = 91  # 13 weeks

THEMES = {
    "health": ["virus", "symptom", "hospital", "doctor", "nurse", "patient",
               "infection", "disease", "testing", "icu", "ventilator",
               "outbreak", "pandemic", "sick", "fear", "worry", "death"],
    "policy": ["lockdown", "quarantine", "restriction", "border", "travel",
               "school", "closed", "government", "minister", "police",
               "fine", "rules", "curfew", "mask", "distancing", "ban"],
    "recovery": ["vaccine", "recovery", "reopen", "hope", "support",
                 "community", "together", "volunteer", "donate", "heal",
                 "relief", "thank", "grateful", "win", "better", "safe"],
}

FILLERS = ["today", "really", "everyone", "city", "family", "friends",
           "week", "news", "update", "situation", "staying", "home",
           "watching", "reading", "thinking", "feeling"]

LOCATIONS = [
    ("gps", (1.29, 103.85)),          # Singapore
    ("gps", (51.50, -0.12)),          # London
    ("gps", (40.71, -74.00)),         # New York
    ("place", "SG"),
    ("place", "GB"),
    ("place", "US"),
    ("profile", "Singapore"),
    ("profile", "London, UK"),
    ("profile", "New York City"),
    ("profile", "somewhere on earth"),   # unmatchable
    ("profile", "london paris berlin"),  # ambiguous -> unresolved
    ("none", None),
]


def epoch_days(y, m, d):
    # days since 1970-01-01, proleptic Gregorian
    a = (14 - m) // 12
    y2 = y + 4800 - a
    m2 = m + 12 * a - 3
    jdn = d + (153 * m2 + 2) // 5 + 365 * y2 + y2 // 4 - y2 // 100 + y2 // 400 - 32045
    return jdn - 2440588


def iso(day_offset, seconds, offset_hours=None):
    total = (epoch_days(*START) + day_offset) * 86400 + seconds
    if offset_hours is not None:
        # emit the same instant in a local-offset representation
        local = total + offset_hours * 3600
        d, s = divmod(local, 86400)
        stamp = civil(d) + "T" + hms(s) + f"+{offset_hours:02d}:00"
        return stamp
    d, s = divmod(total, 86400)
    return civil(d) + "T" + hms(s) + "Z"


def civil(days):
    z = days + 719468
    era = z // 146097
    doe = z - era * 146097
    yoe = (doe - doe // 1460 + doe // 36524 - doe // 146096) // 365
    y = yoe + era * 400
    doy = doe - (365 * yoe + yoe // 4 - yoe // 100)
    mp = (5 * doy + 2) // 153
    d = doy - (153 * mp + 2) // 5 + 1
    m = mp + 3 if mp < 10 else mp - 9
    if m <= 2:
        y += 1
    return f"{y:04d}-{m:02d}-{d:02d}"


def hms(s):
    return f"{s // 3600:02d}:{s % 3600 // 60:02d}:{s % 60:02d}"


def make_text(rng, theme):
    words = rng.choices(THEMES[theme], k=rng.randint(5, 9))
    words += rng.choices(FILLERS, k=rng.randint(2, 4))
    rng.shuffle(words)
    text = " ".join(words)
    if rng.random() < 0.5:
        text += f" #{rng.choice(['covid', 'covid19', 'stayhome', 'lockdown'])}"
    if rng.random() < 0.3:
        text += f" @user{rng.randint(1, 99)}"
    if rng.random() < 0.3:
        text += " https://t.co/" + "".join(rng.choices("abcdefgh", k=6))
    if rng.random() < 0.1:
        text += " \U0001F637"  # masked-face emoji, dropped by tokenization
    return text


def make_record(rng, rid, day, theme):
    rec = {
        "id": rid,
        "created_at": iso(day, rng.randint(0, 86399),
                          8 if rng.random() < 0.05 else None),
        "text": make_text(rng, theme),
    }
    kind, value = rng.choice(LOCATIONS)
    if kind == "gps":
        rec["coordinates"] = [value[1], value[0]]  # wire order is [lon, lat]
    elif kind == "place":
        rec["place_country"] = value
    elif kind == "profile":
        rec["user_location"] = value
    if rng.random() < 0.6:
        rec["lang"] = "en"
    return rec


def main():
    fixture_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures")
    os.makedirs(fixture_dir, exist_ok=True)
    rng = random.Random(20200312)
    themes = list(THEMES)

    records = []
    for i in range(500):
        day = i % DAYS if i < 2 * DAYS else rng.randrange(DAYS)
        # Theme mix drifts from health/policy toward recovery over the window,
        # so topics differ across weeks.
        weights = [1.0 - 0.7 * day / DAYS, 0.8, 0.3 + 0.9 * day / DAYS]
        theme = rng.choices(themes, weights=weights)[0]
        records.append(make_record(rng, f"t{i:04d}", day, theme))

    dup_sources = rng.sample(records, 12)
    duplicates = [dict(r) for r in dup_sources]

    extras = []
    for i, lang in enumerate(["es", "fr", "de", "pt", "it", "ja", "zh", "ko"]):
        rec = make_record(rng, f"x{i:02d}", rng.randrange(DAYS), rng.choice(themes))
        rec["lang"] = lang
        extras.append(rec)
    for i in range(8):
        day = rng.choice([-20, -3, -1, DAYS, DAYS + 1, DAYS + 30])
        extras.append(make_record(rng, f"w{i:02d}", day, rng.choice(themes)))

    lines = records + duplicates + extras
    rng.shuffle(lines)
    # Keep each duplicate after its original so "first occurrence wins" is
    # well-defined against the generator's intent.
    seen = {}
    ordered = []
    deferred = []
    for rec in lines:
        if rec["id"] in seen:
            deferred.append(rec)
        else:
            seen[rec["id"]] = True
            ordered.append(rec)
    ordered.extend(deferred)

    with open(os.path.join(fixture_dir, "tweets_500.jsonl"), "w") as f:
        for rec in ordered:
            f.write(json.dumps(rec, sort_keys=True) + "\n")

    gps_points = [(1.29, 103.85), (51.5, -0.12), (40.71, -74.0), (48.85, 2.35),
                  (52.52, 13.40), (35.68, 139.69), (43.65, -79.38),
                  (-33.87, 151.21), (19.07, 72.88), (1.35, 103.82)]
    with open(os.path.join(fixture_dir, "tweets_gps10.jsonl"), "w") as f:
        for i, (lat, lon) in enumerate(gps_points):
            rec = {
                "id": f"g{i:02d}",
                "created_at": iso(i * 9, 43200),
                "text": "hope support recovery community #covid",
                "coordinates": [lon, lat],
            }
            f.write(json.dumps(rec, sort_keys=True) + "\n")

    open(os.path.join(fixture_dir, "tweets_empty.jsonl"), "w").close()

    print(f"tweets_500.jsonl: {len(ordered)} lines "
          f"({len(records)} unique in-window, {len(duplicates)} duplicates, "
          f"8 non-English, 8 out-of-window)")


if __name__ == "__main__":
    main()
