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
"""Writes the generated data files: stopwords, lemma rules, emotion lexicon.

The stopword list is scikit-learn's English list (the classic 318-word IR
list, which includes function words like "at"). Lemma rules are irregular
inflections only; rules whose input or output is a stopword are filtered
out so the normalization pipeline stays idempotent. The emotion lexicon is
a compact curated file in the standard long TSV format (word, label, flag),
listing all ten flags per word like the published lexicon does.
"""

import os

from sklearn.feature_extraction.text import ENGLISH_STOP_WORDS

LABELS = ["anger", "fear", "anticipation", "trust", "surprise", "sadness",
          "joy", "disgust", "negative", "positive"]

# Irregular inflected form -> lemma. Regular morphology is left to the
# stemmer; this table only rescues forms stemming cannot reach.
LEMMA_RULES = {
    "ate": "eat", "eaten": "eat",
    "began": "begin", "begun": "begin",
    "bought": "buy",
    "broke": "break", "broken": "break",
    "brought": "bring",
    "built": "build",
    "calves": "calf",
    "came": "come",
    "caught": "catch",
    "children": "child",
    "chose": "choose", "chosen": "choose",
    "drank": "drink", "drunk": "drink",
    "drove": "drive", "driven": "drive",
    "fell": "fall", "fallen": "fall",
    "feet": "foot",
    "felt": "feel",
    "flew": "fly", "flown": "fly",
    "fought": "fight",
    "gave": "give",
    "geese": "goose",
    "grew": "grow", "grown": "grow",
    "halves": "half",
    "heard": "hear",
    "held": "hold",
    "hid": "hide", "hidden": "hide",
    "kept": "keep",
    "knew": "know", "known": "know",
    "knives": "knife",
    "leaves": "leaf",
    "left": "leave",
    "lives": "life",
    "lost": "lose",
    "loaves": "loaf",
    "men": "man",
    "mice": "mouse",
    "met": "meet",
    "paid": "pay",
    "ran": "run",
    "rose": "rise", "risen": "rise",
    "said": "say",
    "sang": "sing", "sung": "sing",
    "sank": "sink",
    "sat": "sit",
    "saw": "see", "seen": "see",
    "selves": "self",
    "shelves": "shelf",
    "slept": "sleep",
    "sold": "sell",
    "spent": "spend",
    "spoke": "speak", "spoken": "speak",
    "stood": "stand",
    "swam": "swim",
    "taught": "teach",
    "teeth": "tooth",
    "thieves": "thief",
    "thought": "think",
    "threw": "throw", "thrown": "throw",
    "told": "tell",
    "took": "take", "taken": "take",
    "understood": "understand",
    "went": "go", "gone": "go",
    "wives": "wife",
    "woke": "wake", "woken": "wake",
    "wolves": "wolf",
    "women": "woman",
    "wore": "wear", "worn": "wear",
    "wrote": "write", "written": "write",
}

# Curated word -> emotion/polarity associations (Plutchik's eight emotions
# plus negative/positive). "abandon" carries its published associations.
EMOLEX = {
    "abandon": {"fear", "negative", "sadness"},
    "abuse": {"anger", "disgust", "fear", "negative", "sadness"},
    "alarm": {"fear", "negative", "surprise"},
    "alone": {"negative", "sadness"},
    "amazing": {"joy", "positive", "surprise"},
    "anger": {"anger", "negative"},
    "angry": {"anger", "disgust", "negative"},
    "anxious": {"anticipation", "fear", "negative"},
    "attack": {"anger", "fear", "negative"},
    "award": {"anticipation", "joy", "positive", "surprise", "trust"},
    "beautiful": {"joy", "positive"},
    "birthday": {"anticipation", "joy", "positive", "surprise"},
    "blessed": {"joy", "positive"},
    "brave": {"fear", "positive", "trust"},
    "calm": {"positive"},
    "celebrate": {"anticipation", "joy", "positive", "surprise"},
    "chaos": {"anger", "fear", "negative"},
    "cheer": {"anticipation", "joy", "positive", "surprise", "trust"},
    "comfort": {"anticipation", "joy", "positive", "trust"},
    "confident": {"joy", "positive", "trust"},
    "crisis": {"fear", "negative"},
    "cry": {"negative", "sadness"},
    "danger": {"fear", "negative", "sadness"},
    "dead": {"anger", "disgust", "fear", "negative", "sadness"},
    "death": {"anticipation", "fear", "negative", "sadness", "surprise"},
    "depressed": {"fear", "negative", "sadness"},
    "desperate": {"fear", "negative", "sadness"},
    "die": {"fear", "negative", "sadness"},
    "dirty": {"disgust", "negative"},
    "disaster": {"anger", "disgust", "fear", "negative", "sadness", "surprise"},
    "disease": {"anger", "disgust", "fear", "negative", "sadness"},
    "distress": {"anger", "disgust", "fear", "negative", "sadness", "surprise"},
    "doctor": {"positive", "trust"},
    "doubt": {"fear", "negative", "sadness", "trust"},
    "dread": {"anticipation", "fear", "negative"},
    "emergency": {"fear", "negative", "sadness", "surprise"},
    "encourage": {"joy", "positive", "trust"},
    "enjoy": {"anticipation", "joy", "positive", "trust"},
    "excited": {"anticipation", "joy", "positive", "surprise"},
    "fail": {"negative", "sadness"},
    "fake": {"negative"},
    "fear": {"anger", "fear", "negative"},
    "fight": {"anger", "fear", "negative"},
    "fraud": {"anger", "disgust", "negative"},
    "friend": {"joy", "positive", "trust"},
    "fun": {"anticipation", "joy", "positive"},
    "gift": {"anticipation", "joy", "positive", "surprise"},
    "glad": {"joy", "positive"},
    "gloom": {"negative", "sadness"},
    "government": {"fear", "negative", "trust"},
    "grateful": {"joy", "positive"},
    "grief": {"negative", "sadness"},
    "happy": {"anticipation", "joy", "positive", "trust"},
    "hate": {"anger", "disgust", "fear", "negative", "sadness"},
    "heal": {"anticipation", "joy", "positive", "trust"},
    "healthy": {"positive"},
    "hell": {"anger", "disgust", "fear", "negative", "sadness"},
    "help": {"positive", "trust"},
    "helpless": {"fear", "negative", "sadness"},
    "hero": {"anticipation", "joy", "positive", "surprise", "trust"},
    "home": {"anticipation", "joy", "positive", "trust"},
    "hope": {"anticipation", "joy", "positive", "surprise", "trust"},
    "hopeless": {"fear", "negative", "sadness"},
    "hospital": {"fear", "sadness", "trust"},
    "hurt": {"anger", "fear", "negative", "sadness"},
    "ill": {"fear", "negative", "sadness"},
    "infection": {"fear", "negative"},
    "inspire": {"anticipation", "joy", "positive", "trust"},
    "isolation": {"fear", "negative", "sadness"},
    "joy": {"joy", "positive"},
    "kill": {"anger", "fear", "negative", "sadness"},
    "kind": {"joy", "positive", "trust"},
    "laugh": {"joy", "positive", "surprise"},
    "lockdown": {"fear", "negative", "sadness"},
    "lonely": {"anger", "fear", "negative", "sadness"},
    "lose": {"anger", "fear", "negative", "sadness"},
    "loss": {"fear", "negative", "sadness"},
    "love": {"joy", "positive"},
    "lucky": {"joy", "positive", "surprise"},
    "mad": {"anger", "fear", "negative", "sadness"},
    "medicine": {"positive", "trust"},
    "miracle": {"anticipation", "joy", "positive", "surprise", "trust"},
    "music": {"joy", "positive", "sadness"},
    "nervous": {"anticipation", "fear", "negative"},
    "nurse": {"positive", "trust"},
    "outbreak": {"fear", "negative"},
    "pain": {"fear", "negative", "sadness"},
    "pandemic": {"fear", "negative", "sadness"},
    "panic": {"fear", "negative"},
    "peace": {"anticipation", "joy", "positive", "trust"},
    "perfect": {"anticipation", "joy", "positive", "trust"},
    "positive": {"joy", "positive", "trust"},
    "pray": {"anticipation", "fear", "joy", "positive", "surprise", "trust"},
    "protect": {"positive", "trust"},
    "proud": {"joy", "positive", "trust"},
    "quarantine": {"fear", "negative"},
    "recover": {"anticipation", "joy", "positive", "trust"},
    "relief": {"joy", "positive"},
    "rescue": {"anticipation", "joy", "positive", "surprise", "trust"},
    "risk": {"anticipation", "fear", "negative"},
    "sad": {"negative", "sadness"},
    "safe": {"joy", "positive", "trust"},
    "scared": {"fear", "negative"},
    "school": {"anticipation", "trust"},
    "sick": {"disgust", "negative", "sadness"},
    "smile": {"joy", "positive", "surprise", "trust"},
    "sorrow": {"negative", "sadness"},
    "stress": {"fear", "negative"},
    "strong": {"positive", "trust"},
    "struggle": {"anger", "fear", "negative", "sadness"},
    "success": {"anticipation", "joy", "positive"},
    "suffer": {"fear", "negative", "sadness"},
    "support": {"positive", "trust"},
    "surprise": {"anticipation", "joy", "positive", "surprise"},
    "terrible": {"anger", "disgust", "fear", "negative", "sadness"},
    "terror": {"fear", "negative"},
    "thank": {"joy", "positive"},
    "threat": {"anger", "fear", "negative"},
    "together": {"positive", "trust"},
    "tragedy": {"fear", "negative", "sadness"},
    "trouble": {"anger", "fear", "negative", "sadness"},
    "trust": {"positive", "trust"},
    "ugly": {"disgust", "negative"},
    "vaccine": {"anticipation", "positive", "trust"},
    "victory": {"anticipation", "joy", "positive", "trust"},
    "violence": {"anger", "fear", "negative", "sadness"},
    "virus": {"disgust", "fear", "negative"},
    "vulnerable": {"fear", "negative"},
    "war": {"anger", "fear", "negative", "sadness"},
    "warm": {"joy", "positive", "trust"},
    "weak": {"negative"},
    "welcome": {"joy", "positive"},
    "win": {"anticipation", "joy", "positive", "surprise", "trust"},
    "wonderful": {"joy", "positive", "surprise", "trust"},
    "worry": {"anticipation", "fear", "negative", "sadness"},
    "wrong": {"negative"},
}


def main():
    data_dir = os.path.join(os.path.dirname(__file__), "..", "data")
    os.makedirs(data_dir, exist_ok=True)

    stopwords = sorted(ENGLISH_STOP_WORDS)
    assert "at" in stopwords
    with open(os.path.join(data_dir, "stopwords.txt"), "w") as f:
        for word in stopwords:
            f.write(word + "\n")

    stopset = set(stopwords)
    kept, dropped = [], []
    for inflected, lemma in sorted(LEMMA_RULES.items()):
        if inflected in stopset or lemma in stopset:
            dropped.append((inflected, lemma))
        else:
            kept.append((inflected, lemma))
    # Idempotence: no rule output may be another rule's input.
    inputs = {i for i, _ in kept}
    for _, lemma in kept:
        assert lemma not in inputs or LEMMA_RULES.get(lemma) == lemma, lemma
    with open(os.path.join(data_dir, "lemma_rules.tsv"), "w") as f:
        f.write("# inflected_form<TAB>lemma; irregular inflections only\n")
        for inflected, lemma in kept:
            f.write(f"{inflected}\t{lemma}\n")

    for word, labels in EMOLEX.items():
        assert labels <= set(LABELS), word
    with open(os.path.join(data_dir, "emolex.tsv"), "w") as f:
        f.write("# word<TAB>label<TAB>flag over the eight emotions and two"
                " polarities; compact curated file in the standard long"
                " format\n")
        for word in sorted(EMOLEX):
            for label in LABELS:
                flag = 1 if label in EMOLEX[word] else 0
                f.write(f"{word}\t{label}\t{flag}\n")

    print(f"stopwords: {len(stopwords)}")
    print(f"lemma rules kept: {len(kept)}, dropped (stopword collision): {len(dropped)}")
    if dropped:
        print("  dropped:", ", ".join(f"{i}->{l}" for i, l in dropped))
    print(f"emolex words: {len(EMOLEX)}")


if __name__ == "__main__":
    main()
