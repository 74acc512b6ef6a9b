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
"""Generates the Porter stemmer conformance fixtures.

The stemmer below is a fresh transcription of the reference implementation's
semantics (the ANSI C version maintained by the algorithm's author),
including its documented departures from the original 1980 publication:

  * step 2 maps "bli" -> "ble" (originally "abli" -> "able");
  * step 2 includes "logi" -> "log";
  * words of length 1 or 2 are returned unchanged.

It is written and maintained separately from the C++ implementation so the
two can serve as cross-checks: tests/fixtures/porter/{voc,output}.txt are
produced here and the library must agree on every line.
"""

import itertools
import os


class ReferenceStemmer:
    """Reference-C-semantics Porter stemmer (stateful like the original)."""

    def __init__(self):
        self.b = []   # word as a list of chars, valid range [0..k]
        self.k = 0
        self.j = 0

    # b[i] is a consonant?
    def cons(self, i):
        ch = self.b[i]
        if ch in "aeiou":
            return False
        if ch == "y":
            return True if i == 0 else not self.cons(i - 1)
        return True

    # number of VC sequences in b[0..j]
    def m(self):
        n = 0
        i = 0
        while True:
            if i > self.j:
                return n
            if not self.cons(i):
                break
            i += 1
        i += 1
        while True:
            while True:
                if i > self.j:
                    return n
                if self.cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > self.j:
                    return n
                if not self.cons(i):
                    break
                i += 1
            i += 1

    def vowel_in_stem(self):
        return any(not self.cons(i) for i in range(self.j + 1))

    def doublec(self, j):
        if j < 1:
            return False
        if self.b[j] != self.b[j - 1]:
            return False
        return self.cons(j)

    def cvc(self, i):
        if i < 2 or not self.cons(i) or self.cons(i - 1) or not self.cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def ends(self, s):
        length = len(s)
        if length > self.k + 1:
            return False
        if self.b[self.k - length + 1 : self.k + 1] != list(s):
            return False
        self.j = self.k - length
        return True

    def setto(self, s):
        self.b[self.j + 1 : self.j + 1 + len(s)] = list(s)
        self.k = self.j + len(s)

    def r(self, s):
        if self.m() > 0:
            self.setto(s)

    def step1ab(self):
        if self.b[self.k] == "s":
            if self.ends("sses"):
                self.k -= 2
            elif self.ends("ies"):
                self.setto("i")
            elif self.b[self.k - 1] != "s":
                self.k -= 1
        if self.ends("eed"):
            if self.m() > 0:
                self.k -= 1
        elif (self.ends("ed") or self.ends("ing")) and self.vowel_in_stem():
            self.k = self.j
            if self.ends("at"):
                self.setto("ate")
            elif self.ends("bl"):
                self.setto("ble")
            elif self.ends("iz"):
                self.setto("ize")
            elif self.doublec(self.k):
                self.k -= 1
                if self.b[self.k] in "lsz":
                    self.k += 1
            elif self.m() == 1 and self.cvc(self.k):
                self.setto("e")

    def step1c(self):
        if self.ends("y") and self.vowel_in_stem():
            self.b[self.k] = "i"

    def step2(self):
        if self.k < 1:
            return
        ch = self.b[self.k - 1]
        if ch == "a":
            if self.ends("ational"):
                self.r("ate")
            elif self.ends("tional"):
                self.r("tion")
        elif ch == "c":
            if self.ends("enci"):
                self.r("ence")
            elif self.ends("anci"):
                self.r("ance")
        elif ch == "e":
            if self.ends("izer"):
                self.r("ize")
        elif ch == "l":
            if self.ends("bli"):
                self.r("ble")
            elif self.ends("alli"):
                self.r("al")
            elif self.ends("entli"):
                self.r("ent")
            elif self.ends("eli"):
                self.r("e")
            elif self.ends("ousli"):
                self.r("ous")
        elif ch == "o":
            if self.ends("ization"):
                self.r("ize")
            elif self.ends("ation"):
                self.r("ate")
            elif self.ends("ator"):
                self.r("ate")
        elif ch == "s":
            if self.ends("alism"):
                self.r("al")
            elif self.ends("iveness"):
                self.r("ive")
            elif self.ends("fulness"):
                self.r("ful")
            elif self.ends("ousness"):
                self.r("ous")
        elif ch == "t":
            if self.ends("aliti"):
                self.r("al")
            elif self.ends("iviti"):
                self.r("ive")
            elif self.ends("biliti"):
                self.r("ble")
        elif ch == "g":
            if self.ends("logi"):
                self.r("log")

    def step3(self):
        ch = self.b[self.k]
        if ch == "e":
            if self.ends("icate"):
                self.r("ic")
            elif self.ends("ative"):
                self.r("")
            elif self.ends("alize"):
                self.r("al")
        elif ch == "i":
            if self.ends("iciti"):
                self.r("ic")
        elif ch == "l":
            if self.ends("ical"):
                self.r("ic")
            elif self.ends("ful"):
                self.r("")
        elif ch == "s":
            if self.ends("ness"):
                self.r("")

    def step4(self):
        if self.k < 1:
            return
        ch = self.b[self.k - 1]
        if ch == "a":
            if not self.ends("al"):
                return
        elif ch == "c":
            if not (self.ends("ance") or self.ends("ence")):
                return
        elif ch == "e":
            if not self.ends("er"):
                return
        elif ch == "i":
            if not self.ends("ic"):
                return
        elif ch == "l":
            if not (self.ends("able") or self.ends("ible")):
                return
        elif ch == "n":
            if not (self.ends("ant") or self.ends("ement") or self.ends("ment")
                    or self.ends("ent")):
                return
        elif ch == "o":
            if self.ends("ion") and self.j >= 0 and self.b[self.j] in "st":
                pass
            elif self.ends("ou"):
                pass
            else:
                return
        elif ch == "s":
            if not self.ends("ism"):
                return
        elif ch == "t":
            if not (self.ends("ate") or self.ends("iti")):
                return
        elif ch == "u":
            if not self.ends("ous"):
                return
        elif ch == "v":
            if not self.ends("ive"):
                return
        elif ch == "z":
            if not self.ends("ize"):
                return
        else:
            return
        if self.m() > 1:
            self.k = self.j

    def step5(self):
        self.j = self.k
        if self.b[self.k] == "e":
            a = self.m()
            if a > 1 or (a == 1 and not self.cvc(self.k - 1)):
                self.k -= 1
        if self.b[self.k] == "l" and self.doublec(self.k) and self.m() > 1:
            self.k -= 1

    def stem(self, word):
        if len(word) <= 2:
            return word
        self.b = list(word)
        self.k = len(word) - 1
        self.j = 0
        self.step1ab()
        self.step1c()
        self.step2()
        self.step3()
        self.step4()
        self.step5()
        return "".join(self.b[: self.k + 1])


# Words drawn from the worked examples in the 1980 description, one per rule.
PAPER_EXAMPLES = """
caresses ponies ties caress cats feed agreed plastered bled motoring sing
conflated troubled sized hopping tanned falling hissing fizzed failing filing
happy sky relational conditional rational valenci hesitanci digitizer
conformabli radicalli differentli vileli analogousli vietnamization
predication operator feudalism decisiveness hopefulness callousness formaliti
sensitiviti sensibiliti triplicate formative formalize electriciti electrical
hopeful goodness revival allowance inference airliner gyroscopic adjustable
defensible irritant replacement adjustment dependent adoption homologou
communism activate angulariti homologous effective bowdlerize probate rate
cease controll roll
""".split()

COMMON_WORDS = """
the be to of and a in that have i it for not on with he as you do at this but
his by from they we say her she or an will my one all would there their what
so up out if about who get which go me when make can like time no just him
know take people into year your good some could them see other than then now
look only come its over think also back after use two how our work first well
way even new want because any these give day most us government company number
world health virus pandemic lockdown quarantine vaccine mask distance social
economy market school hospital doctor nurse patient symptom recovery death
travel flight border policy minister president country city week month news
report study research science test positive negative case wave spread infect
infection infectious protect protection protective safe safety danger
dangerous fear fearful anxious anxiety worry worried hope hopeful happy
happiness sad sadness anger angry trust trusting surprise surprising disgust
disgusting joy joyful anticipate anticipation panic crisis emergency support
relief stimulus unemployment employment employee employer business shop
restaurant closed closing closure open opening reopen reopening stay staying
home house family friend child children parent teacher student learning
learned teaching taught online remote distance meeting video call phone
message tweet post share sharing shared like liked follow following followed
run running runs ran walk walking walked talk talking talked eat eating ate
drink drinking drank sleep sleeping slept read reading write writing wrote
play playing played sing singing sang dance dancing danced cook cooking
cooked clean cleaning cleaned wash washing washed shop shopping shopped buy
buying bought sell selling sold pay paying paid cost costing costs price
prices money cash bank banking loan debt tax taxes income wage salary budget
plan planning planned organize organization organized organizing national
international global local regional community society public private personal
individual collective measure measures restriction restrictions rule rules
regulation regulations law laws order orders control controlled controlling
free freedom liberty right rights duty duties responsible responsibility
amaze amazed amazing amazement agree agreement agreeable disagree argue
argument arguing beauty beautiful beautifully ugly ugliness strong strength
strengthen weak weakness weaken quick quickly slow slowly fast faster fastest
big bigger biggest small smaller smallest large larger largest tall taller
short shorter long longer wide wider narrow narrower deep deeper shallow
high higher low lower early earlier late later soon sooner often frequent
frequently rare rarely usual usually normal normally strange strangely
special specially particular particularly general generally specific
specifically exact exactly certain certainly sure surely clear clearly
obvious obviously evident evidently apparent apparently probable probably
possible possibly impossible likely unlikely definite definitely absolute
absolutely complete completely total totally entire entirely full fully
partial partially major majority minor minority maximum minimum optimal
optimize optimization minimize minimization maximize maximization analyze
analysis analytical create creation creative creativity destroy destruction
destructive construct construction constructive develop development
developer developing developed improve improvement improving improved
increase increasing increased decrease decreasing decreased reduce reduction
reducing reduced expand expansion expanding expanded grow growth growing grew
shrink shrinking shrank change changing changed transform transformation
transforming transformed adapt adaptation adapting adapted adjust adjusting
adjusted evolve evolution evolving evolved revolve revolution revolving
revolved relate relation relative relatively relating related connect
connection connecting connected communicate communication communicating
communicated inform information informative informing informed educate
education educational educating educated operate operation operational
operating operated generate generation generating generated populate
population populating populated regulate regulating regulated stimulate
stimulation stimulating stimulated isolate isolation isolating isolated
separate separation separating separated combine combination combining
combined conclude conclusion concluding concluded decide decision deciding
decided provide provision providing provided divide division dividing divided
realize realization realizing realized recognize recognition recognizing
recognized emphasize emphasizing emphasized summarize summary summarizing
summarized categorize category categorizing categorized prioritize priority
prioritizing prioritized
""".split()

BASES = [
    "act", "add", "aid", "form", "hope", "help", "mark", "part", "plan",
    "point", "press", "rest", "sign", "test", "turn", "view", "wish", "work",
    "accept", "attach", "attend", "avoid", "borrow", "button", "cancel",
    "deliver", "discuss", "enjoy", "expect", "explain", "express", "finish",
    "happen", "listen", "number", "obtain", "offer", "perform", "question",
    "remain", "remember", "report", "result", "return", "reveal", "suffer",
    "suggest", "visit", "wonder",
]

SUFFIXES = [
    "", "s", "es", "ed", "ing", "ings", "er", "ers", "ly", "ness", "ful",
    "fulness", "less", "ment", "ments", "ation", "ations", "ational", "ize",
    "izer", "ization", "ive", "iveness", "ous", "ously", "ousness", "al",
    "ally", "aliti", "able", "ible", "ance", "ence", "ant", "ent", "ently",
    "ism", "ate", "ator", "iti", "biliti", "icate", "ative", "alize",
    "iciti", "ical", "ion", "eli", "enci", "anci",
]


def vocabulary():
    words = set(PAPER_EXAMPLES) | set(COMMON_WORDS)
    for base, suffix in itertools.product(BASES, SUFFIXES):
        words.add(base + suffix)
    # Short words and y-edge cases.
    words |= {"a", "i", "is", "as", "by", "be", "on", "no", "ox", "sky", "cry",
              "dry", "fly", "try", "say", "day", "way", "toy", "boy", "buy",
              "yes", "yet", "you", "year", "yearly", "ys", "yy", "ies", "eed",
              "ed", "ing", "sses", "ss", "s"}
    return sorted(words)


def main():
    out_dir = os.path.join(os.path.dirname(__file__), "..", "tests", "fixtures", "porter")
    os.makedirs(out_dir, exist_ok=True)
    stemmer = ReferenceStemmer()
    vocab = vocabulary()
    with open(os.path.join(out_dir, "voc.txt"), "w") as voc, \
         open(os.path.join(out_dir, "output.txt"), "w") as out:
        for word in vocab:
            voc.write(word + "\n")
            out.write(stemmer.stem(word) + "\n")
    print(f"wrote {len(vocab)} fixture pairs to {os.path.normpath(out_dir)}")


if __name__ == "__main__":
    main()
