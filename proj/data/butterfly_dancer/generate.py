#!/usr/bin/env python3
"""Regenerate the synthetic "butterflies are dancers" fixture.

All values here are SYNTHETIC. They are hand-picked anchors plus seeded noise,
chosen to look like a plausible averaged association survey (a shared image
'woman' on both sides, a few strong cross associations). They are not human
data.

Writes survey.csv, interpretation.csv and similarity.csv next to this file.
"""

import csv
import pathlib
import random

HERE = pathlib.Path(__file__).resolve().parent

SOURCE_ROOT = "dancer"
TARGET_ROOT = "butterfly"
SOURCE_INITIALS = ["dance", "stage", "woman", "night", "dress", "music", "beauty", "grace"]
TARGET_INITIALS = ["flower", "fly", "woman", "wing", "sky", "spring", "transience", "color"]

# Strong cross associations source initial -> target initial (averaged Likert).
CROSS_ANCHORS = {
    # hubs: many associates of 'dancer' also call up 'woman' and 'flower'
    ("dress", "woman"): 3.95,
    ("beauty", "woman"): 4.2,
    ("grace", "woman"): 3.8,
    ("dance", "woman"): 3.3,
    ("stage", "woman"): 2.9,
    ("music", "woman"): 2.45,
    ("beauty", "flower"): 4.4,
    ("dress", "flower"): 3.6,
    ("grace", "flower"): 3.4,
    ("night", "flower"): 2.6,
    ("woman", "flower"): 3.5,
    # a few one-off strong pairs
    ("dance", "fly"): 4.1,
    ("night", "sky"): 3.05,
    ("dress", "color"): 2.75,
}

# Human agreement (1..5) that "<target> for butterfly is <source> for dancer".
INTERPRETATION_ANCHORS = {
    ("dance", "fly"): 4.6,
    ("stage", "sky"): 4.2,
    ("stage", "flower"): 3.6,
    ("dress", "wing"): 4.1,
    ("dress", "color"): 3.9,
    ("beauty", "color"): 3.7,
    ("beauty", "flower"): 3.5,
    ("grace", "fly"): 3.8,
    ("music", "wing"): 3.0,
    ("night", "transience"): 3.9,
    ("woman", "woman"): 3.2,
    ("woman", "flower"): 3.0,
}


def main() -> None:
    rng = random.Random(20241016)
    labels = [TARGET_ROOT, SOURCE_ROOT] + SOURCE_INITIALS + [
        t for t in TARGET_INITIALS if t not in SOURCE_INITIALS
    ]
    n = len(labels)
    idx = {l: i for i, l in enumerate(labels)}
    s = [[1.0] * n for _ in range(n)]

    def noisy(lo, hi):
        return round(rng.uniform(lo, hi), 2)

    for i in range(n):
        for j in range(n):
            if i != j:
                s[i][j] = noisy(1.0, 2.2)
    for root, initials in ((SOURCE_ROOT, SOURCE_INITIALS), (TARGET_ROOT, TARGET_INITIALS)):
        for x in initials:
            s[idx[root]][idx[x]] = noisy(3.4, 4.9)
        for p in initials:
            for q in initials:
                if p != q:
                    s[idx[p]][idx[q]] = noisy(1.4, 4.2)
    s[idx[TARGET_ROOT]][idx[SOURCE_ROOT]] = 1.85
    for b in SOURCE_INITIALS:
        for a in TARGET_INITIALS:
            if a == b:
                continue
            s[idx[b]][idx[a]] = CROSS_ANCHORS.get((b, a), noisy(1.05, 2.3))

    with open(HERE / "survey.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["label"] + labels)
        for i, l in enumerate(labels):
            w.writerow([l] + [f"{v:g}" for v in s[i]])

    with open(HERE / "similarity.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["source_label", "target_label", "value"])
        for b in SOURCE_INITIALS:
            for a in TARGET_INITIALS:
                if a == b:
                    sim = 1.0
                else:
                    sim = 0.05 + 0.11 * (s[idx[b]][idx[a]] - 1.0) + rng.gauss(0.0, 0.05)
                    sim = max(-1.0, min(1.0, sim))
                w.writerow([b, a, f"{sim:.4f}"])

    with open(HERE / "interpretation.csv", "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["source_label", "target_label", "value"])
        for b in SOURCE_INITIALS:
            for a in TARGET_INITIALS:
                v = INTERPRETATION_ANCHORS.get((b, a), noisy(1.3, 2.9))
                w.writerow([b, a, f"{v:g}"])


if __name__ == "__main__":
    main()
