#!/usr/bin/env python3
"""Regenerates the checked-in fixture data under data/.

Everything is seeded and deterministic. The four large lexicons are synthetic
term inventories whose aggregate statistics (class counts, pairwise overlaps,
agreement/disagreement breakdowns) equal the published figures the test suite
asserts; the terms themselves are generated pseudo-words, not the published
word lists. The demo corpus, external series and annotation sheets are small
synthetic inputs for the CLI walkthrough and the end-to-end tests.

Usage: python3 scripts/gen_fixtures.py [--check-only]
"""

import argparse
import json
import math
import os
import random

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

SEED = 20240811

NEG, NEU, POS = -1, 0, 1

# Joint class tables for the terms each pair of lexicons shares. Keys are
# (class in EL, class in the other lexicon).
EL_SSW = {
    (NEG, NEG): 1381, (NEU, NEU): 453, (POS, POS): 762,
    (NEG, NEU): 300, (NEG, POS): 400,
    (NEU, NEG): 100, (NEU, POS): 73,
    (POS, NEG): 300, (POS, NEU): 100,
}
EL_REN = {
    (NEG, NEG): 200, (POS, POS): 120,
    (NEG, POS): 100, (POS, NEG): 56,
    (NEU, NEG): 20, (NEU, POS): 18,
}
EL_LMD = {
    (NEG, NEG): 700, (POS, NEG): 60, (NEU, NEG): 80,
    (POS, POS): 50, (NEG, POS): 5, (NEU, POS): 5,
}
EL_ONLY = {NEG: 240, NEU: 349, POS: 798}
SSW_ONLY = {NEG: 3078, NEU: 9785, POS: 1575}
REN_ONLY = {NEG: 3724, POS: 3762}
LMD_ONLY = {NEG: 1515, POS: 294}

EXPECTED = {
    "el": (3326, 1098, 2246, 6670),
    "lmd": (2355, 0, 354, 2709),
    "ren": (4000, 0, 4000, 8000),
    "ssw": (4859, 10638, 2810, 18307),
}


class Words:
    ONSETS = ["b", "br", "c", "cl", "d", "dr", "f", "fl", "g", "gr", "h", "j",
              "k", "l", "m", "n", "p", "pl", "pr", "qu", "r", "s", "sl", "st",
              "t", "tr", "v", "w"]
    VOWELS = ["a", "e", "i", "o", "u", "au", "ea", "ou"]
    CODAS = ["", "b", "ck", "d", "g", "l", "m", "n", "nd", "nt", "p", "r",
             "rd", "rn", "s", "st", "t"]

    def __init__(self, rng):
        self.rng = rng
        self.seen = set()

    def word(self):
        while True:
            syllables = self.rng.randint(2, 3)
            w = "".join(self.rng.choice(self.ONSETS) + self.rng.choice(self.VOWELS) +
                        (self.rng.choice(self.CODAS) if s == syllables - 1 else "")
                        for s in range(syllables))
            if 4 <= len(w) <= 14 and w not in self.seen:
                self.seen.add(w)
                return w


def el_score(rng, cls):
    if cls == NEU:
        return 0.0
    # Annotation medians land on the 0.05 grid.
    return round(cls * rng.randint(1, 20) * 0.05, 2)


def ssw_score(rng, cls):
    if cls == NEU:
        return 0.0
    return round(cls * rng.uniform(0.001, 0.9999), 4)


def ren_score(rng, cls):
    return round(cls * rng.uniform(0.001, 0.9999), 3)


def make_lexicons(rng):
    words = Words(rng)
    el, ssw, ren, lmd = {}, {}, {}, {}
    for (cel, cother), count in sorted(EL_SSW.items()):
        for _ in range(count):
            w = words.word()
            el[w] = el_score(rng, cel)
            ssw[w] = ssw_score(rng, cother)
    for (cel, cother), count in sorted(EL_REN.items()):
        for _ in range(count):
            w = words.word()
            el[w] = el_score(rng, cel)
            ren[w] = ren_score(rng, cother)
    for (cel, cother), count in sorted(EL_LMD.items()):
        for _ in range(count):
            w = words.word()
            el[w] = el_score(rng, cel)
            lmd[w] = float(cother)
    for cls, count in sorted(EL_ONLY.items()):
        for _ in range(count):
            el[words.word()] = el_score(rng, cls)
    for cls, count in sorted(SSW_ONLY.items()):
        for _ in range(count):
            ssw[words.word()] = ssw_score(rng, cls)
    for cls, count in sorted(REN_ONLY.items()):
        for _ in range(count):
            ren[words.word()] = ren_score(rng, cls)
    for cls, count in sorted(LMD_ONLY.items()):
        for _ in range(count):
            lmd[words.word()] = float(cls)
    return {"el": el, "ssw": ssw, "ren": ren, "lmd": lmd}


def fmt(x):
    if x == int(x):
        return str(int(x))
    return repr(x)


def write_lexicon(name, entries):
    path = os.path.join(ROOT, "lexicons", name + ".tsv")
    with open(path, "w", newline="\n") as f:
        f.write(f"# {name}: synthetic fixture lexicon (scripts/gen_fixtures.py, seed {SEED})\n")
        f.write("term\tscore\n")
        for term in sorted(entries):
            f.write(f"{term}\t{fmt(entries[term])}\n")


def check_lexicons(lex):
    def cls(x):
        return NEG if x < 0 else (POS if x > 0 else NEU)

    for name, (en, eu, ep, et) in EXPECTED.items():
        entries = lex[name]
        n = sum(1 for v in entries.values() if v < 0)
        u = sum(1 for v in entries.values() if v == 0)
        p = sum(1 for v in entries.values() if v > 0)
        assert (n, u, p, len(entries)) == (en, eu, ep, et), (name, n, u, p, len(entries))

    el, ssw, ren = lex["el"], lex["ssw"], lex["ren"]
    common = [w for w in el if w in ssw]
    assert len(common) == 3869
    agree = [w for w in common if cls(el[w]) == cls(ssw[w])]
    assert len(agree) == 2596
    assert sum(1 for w in agree if el[w] < 0) == 1381
    assert sum(1 for w in agree if el[w] == 0) == 453
    assert sum(1 for w in agree if el[w] > 0) == 762
    assert len(common) - len(agree) == 1273
    assert len(el) - len(common) == 2801
    assert len(ssw) - len(common) == 14438

    ren_common = [w for w in el if w in ren]
    assert len(ren_common) == 514
    flips = sum(1 for w in ren_common
                if (el[w] < 0 and ren[w] > 0) or (el[w] > 0 and ren[w] < 0))
    assert flips == 156


# ---------------------------------------------------------------------------
# Demo corpus, lexicon, annotations and external series.

CONCEPTS = [
    "economy", "unemployment", "inflation", "gdp", "trade", "exports",
    "investment", "growth", "manufacturing", "employment", "productivity",
    "economic growth", "housing market", "interest rates", "labor market",
    "consumer spending",
]

DEMO_LEXICON = {
    "slumped": -0.8, "weakened": -0.6, "deteriorated": -0.7, "contracted": -0.65,
    "fell": -0.6, "stumbled": -0.5, "worsened": -0.7, "collapsed": -0.9,
    "crisis": -0.9, "slowdown": -0.55, "layoffs": -0.75, "recession": -0.85,
    "slump": -0.8, "downturn": -0.7, "sharply": -0.2, "plunged": -0.85,
    "rebounded": 0.7, "strengthened": 0.65, "improved": 0.6, "expanded": 0.55,
    "rose": 0.5, "surged": 0.75, "recovery": 0.7, "boom": 0.8, "optimism": 0.6,
    "hiring": 0.5, "steadily": 0.1, "robust": 0.65, "resilient": 0.55,
    "stabilized": 0.3, "credit crunch": -0.85, "soft landing": 0.55,
}

BAD_VERBS = ["slumped", "weakened", "deteriorated", "contracted", "fell",
             "stumbled", "worsened", "plunged"]
GOOD_VERBS = ["rebounded", "strengthened", "improved", "expanded", "rose", "surged"]
SOURCES = ["The Daily Ledger", "Coastal Times", "The Morning Wire"]
CITIES = ["Springfield", "Riverton", "Lakewood", "Fairview"]
MONTH_NAMES = ["January", "February", "March", "April", "May", "June", "July",
               "August", "September", "October", "November", "December"]


def sigmoid(x):
    return 1.0 / (1.0 + math.exp(-x))


def make_corpus(rng):
    months = 120  # 2010-01 .. 2019-12
    z = []
    level = 0.0
    for t in range(months + 6):
        level = 0.55 * level + rng.gauss(0.0, 0.28)
        z.append(0.85 * math.sin(2 * math.pi * t / 44.0 + 0.7) + level)
    recession = [1 if v + rng.gauss(0.0, 0.2) < -0.58 else 0 for v in z]

    def month_label(t):
        year = 2010 + t // 12
        return f"{year}-{t % 12 + 1:02d}"

    docs = []
    doc_id = 0
    for t in range(months):
        for _ in range(8 + rng.randint(0, 5)):
            day = rng.randint(1, 28)
            sentences = []
            for _ in range(rng.randint(1, 3)):
                concept = rng.choice(CONCEPTS)
                bad = rng.random() < sigmoid(-3.0 * z[t])
                verb = rng.choice(BAD_VERBS if bad else GOOD_VERBS)
                kind = rng.randint(0, 5)
                if kind == 0:
                    sentences.append(f"The {concept} {verb} in {MONTH_NAMES[t % 12]}.")
                elif kind == 1:
                    sentences.append(f"Analysts said the {concept} {verb} sharply.")
                elif kind == 2:
                    sentences.append(f"Reports showed the {concept} {verb} last month.")
                elif kind == 3 and bad:
                    sentences.append(f"A credit crunch hit the {concept}.")
                elif kind == 3:
                    sentences.append(f"Hopes of a soft landing lifted the {concept}.")
                elif kind == 4:
                    sentences.append(f"The weather in {rng.choice(CITIES)} stayed mild.")
                else:
                    sentences.append(f"Officials discussed the {concept} at length.")
            doc = {
                "id": f"art{doc_id:05d}",
                "date": f"{month_label(t)}-{day:02d}",
                "source": rng.choice(SOURCES),
                "title": f"Economic notes {doc_id}",
                "body": " ".join(sentences),
            }
            if rng.random() < 0.04:
                doc["topic"] = "sports"
                doc["body"] = "The home team won again. " + doc["body"]
            docs.append(doc)
            doc_id += 1

    with open(os.path.join(ROOT, "corpus", "news.jsonl"), "w", newline="\n") as f:
        for doc in docs:
            f.write(json.dumps(doc, sort_keys=True) + "\n")

    def write_series(name, values, length):
        with open(os.path.join(ROOT, "series", name + ".csv"), "w", newline="\n") as f:
            f.write("date,value\n")
            for t in range(length):
                f.write(f"{month_label(t)},{values[t]}\n")

    spread = [round(1.6 + 0.7 * z[t] + rng.gauss(0, 0.55), 4) for t in range(months + 6)]
    ads = [round(0.65 * z[t] + rng.gauss(0, 0.55), 4) for t in range(months + 6)]
    write_series("recession", recession, months + 6)
    write_series("spread", spread, months)
    write_series("ads", ads, months)

    assert 12 <= sum(recession[:months]) <= 60, sum(recession[:months])
    return docs, recession, spread, ads, z


def logit_check(docs, recession, spread, ads):
    """Quick IRLS on (spread, ads, ep) -> recession(t+3) to prove the bundled
    data yields a clean, separable-free logistic fit."""
    import numpy as np

    neg = {w for w, s in DEMO_LEXICON.items() if s < 0 and " " not in w}
    pos = {w for w, s in DEMO_LEXICON.items() if s > 0 and " " not in w}
    num = [0.0] * 120
    den = [0.0] * 120
    for doc in docs:
        if doc.get("topic") == "sports":
            continue
        t = (int(doc["date"][:4]) - 2010) * 12 + int(doc["date"][5:7]) - 1
        for sentence in doc["body"].split(". "):
            words = [w.strip(".,!").lower() for w in sentence.split()]
            if not any(c in words or f"{a} {b}" in CONCEPTS
                       for c in CONCEPTS for a, b in zip(words, words[1:])):
                # cheap concept check: unigram only
                if not any(c in words for c in CONCEPTS):
                    continue
            den[t] += len(words)
            num[t] += sum(1 for w in words if w in pos) - sum(1 for w in words if w in neg)
    ep = np.array([-n / d if d else 0.0 for n, d in zip(num, den)])
    ep = (ep - ep.mean()) / ep.std(ddof=1)

    X = np.column_stack([np.ones(117), np.array(spread[:117]), np.array(ads[:117]), ep[:117]])
    y = np.array(recession[3:120], dtype=float)
    assert 0 < y.sum() < len(y)
    beta = np.zeros(4)
    for _ in range(50):
        p = 1 / (1 + np.exp(-X @ beta))
        W = p * (1 - p)
        grad = X.T @ (y - p)
        H = X.T @ (X * W[:, None])
        step = np.linalg.solve(H, grad)
        beta = beta + step
        if np.abs(grad).max() < 1e-8:
            break
    p = 1 / (1 + np.exp(-X @ beta))
    assert np.abs(X.T @ (y - p)).max() < 1e-6, "logit did not converge on the bundled data"
    assert np.abs(X @ beta).max() < 15, "bundled data is close to separable"
    assert beta[3] > 0.2, "pessimism should predict recessions in the bundled data"
    return beta


def make_annotations(rng):
    terms = {
        "slump": -0.8, "downturn": -0.7, "layoffs": -0.75, "rally": 0.6,
        "rebound": 0.7, "expansion": 0.6, "stagnation": -0.6, "upswing": 0.65,
        "turmoil": -0.8, "stability": 0.4, "austerity": -0.5, "windfall": 0.55,
        "above": 0.1, "cycle": 0.0, "forecast": 0.1,
    }
    ambiguous = {"above", "cycle", "forecast"}
    with open(os.path.join(ROOT, "annotations", "annotations.csv"), "w", newline="\n") as f:
        f.write("term,annotator_id,score,phrase\n")
        for term, center in terms.items():
            for a in range(10):
                spread_width = 0.6 if term in ambiguous else 0.2
                score = max(-1.0, min(1.0, center + rng.uniform(-spread_width, spread_width)))
                score = round(score, 1)
                f.write(f"{term},ann{a:02d},{score},The {term} shaped the outlook\n")
    with open(os.path.join(ROOT, "annotations", "review_flags.csv"), "w", newline="\n") as f:
        f.write("term,flag_count\n")
        for term in sorted(ambiguous):
            f.write(f"{term},{rng.randint(1, 4)}\n")
        f.write("slump,0\n")
    with open(os.path.join(ROOT, "annotations", "votes.tsv"), "w", newline="\n") as f:
        f.write("# lemma<TAB>one vote per annotator (1 = conveys sentiment)\n")
        votes = {
            "suffer": "1\t1\t1\t0", "slowdown": "1\t1\t1\t1", "fall": "1\t1\t0\t1",
            "rise": "1\t1\t1\t0", "weak": "1\t1\t0\t0", "strong": "1\t0\t1\t1",
            "recover": "1\t1\t1\t1", "grow": "1\t1\t0\t1", "worry": "1\t1\t1\t0",
            "boom": "1\t1\t1\t1", "tighten": "0\t1\t1\t0", "ease": "1\t0\t1\t0",
            "china": "0\t0\t0\t1", "not": "0\t1\t0\t0", "asia": "0\t0\t0\t0",
        }
        for lemma, ballot in votes.items():
            f.write(f"{lemma}\t{ballot}\n")


def write_concepts():
    with open(os.path.join(ROOT, "concepts", "economic_concepts.txt"), "w", newline="\n") as f:
        f.write("# economic concept terms (unigrams and bigrams)\n")
        for c in CONCEPTS:
            f.write(c + "\n")


def write_demo_lexicon():
    with open(os.path.join(ROOT, "lexicons", "demo.tsv"), "w", newline="\n") as f:
        f.write("# demo lexicon for the bundled corpus walkthrough\n")
        f.write("term\tscore\n")
        for term in sorted(DEMO_LEXICON):
            f.write(f"{term}\t{fmt(DEMO_LEXICON[term])}\n")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--check-only", action="store_true",
                        help="regenerate in memory and verify the frozen statistics")
    args = parser.parse_args()

    for sub in ["lexicons", "corpus", "series", "concepts", "annotations"]:
        os.makedirs(os.path.join(ROOT, sub), exist_ok=True)

    rng = random.Random(SEED)
    lexicons = make_lexicons(rng)
    check_lexicons(lexicons)

    corpus_rng = random.Random(SEED + 1)
    if args.check_only:
        print("lexicon statistics verified")
        return
    for name, entries in lexicons.items():
        write_lexicon(name, entries)
    docs, recession, spread, ads, z = make_corpus(corpus_rng)
    beta = logit_check(docs, recession, spread, ads)
    make_annotations(random.Random(SEED + 2))
    write_concepts()
    write_demo_lexicon()
    print(f"wrote fixtures: {len(docs)} documents, "
          f"{sum(len(v) for v in lexicons.values())} lexicon rows, "
          f"logit beta={['%.2f' % b for b in beta]}")


if __name__ == "__main__":
    main()
