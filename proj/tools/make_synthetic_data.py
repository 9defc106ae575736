#!/usr/bin/env python3
"""Generate data/synthetic_wordle.csv, a synthetic demo corpus.

The file mimics the shape of the daily results table: a sharp early
rise, a long decline to a plateau, a weekend dip, integer tries
percentages that sum to 100, and a handful of deliberately dirty rows
(word typos, one low-count outlier) for the cleaning pass to repair.
"""

import datetime as dt
import math
import random
import re
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
START = dt.date(2022, 1, 7)
END = dt.date(2022, 12, 31)
FIRST_CONTEST = 202

rng = random.Random(20230301)


def load_words() -> list[str]:
    text = (ROOT / "include/wordlecast/pos_words.hpp").read_text()
    words = re.findall(r'\{"([a-z]{5})",\s*\d\}', text)
    seen = []
    used = set()
    for w in words:
        if w not in used:
            used.add(w)
            seen.append(w)
    return seen


def reported_curve(i: int, weekend: bool) -> int:
    # rise to a peak around day 25, then exponential decline to a plateau
    if i < 25:
        base = 80000.0 + (360000.0 - 80000.0) * i / 25.0
    else:
        base = 20000.0 + (360000.0 - 20000.0) * math.exp(-0.012 * (i - 25))
    if weekend:
        base *= 0.95
    base *= 1.0 + rng.gauss(0.0, 0.03)
    return max(12000, int(round(base)))


def tries_distribution(group: int) -> list[int]:
    # three latent difficulty groups shift the distribution's center
    centers = {
        0: [0.6, 8.0, 26.0, 33.0, 21.0, 9.0, 2.4],   # easy
        1: [0.4, 5.5, 22.0, 33.0, 25.0, 11.0, 3.1],  # medium
        2: [0.2, 3.0, 15.0, 28.0, 29.0, 18.0, 6.8],  # hard
    }
    raw = [max(0.05, c * (1.0 + rng.gauss(0.0, 0.18))) for c in centers[group]]
    total = sum(raw)
    shares = [r / total * 100.0 for r in raw]
    ints = [int(math.floor(s)) for s in shares]
    remainder = 100 - sum(ints)
    order = sorted(range(7), key=lambda j: shares[j] - ints[j], reverse=True)
    for j in order[:remainder]:
        ints[j] += 1
    return ints


def main() -> None:
    words = load_words()
    rng.shuffle(words)
    n_days = (END - START).days + 1
    assert n_days == 359
    assert len(words) >= n_days

    rows = []
    for i in range(n_days):
        day = START + dt.timedelta(days=i)
        weekend = day.isoweekday() >= 6
        reported = reported_curve(i, weekend)
        group = rng.choices([0, 1, 2], weights=[0.3, 0.45, 0.25])[0]
        pct = tries_distribution(group)
        hard_share = 0.01 + 0.07 * i / n_days
        hard = int(reported * hard_share * (1.0 + rng.gauss(0.0, 0.05)))
        rows.append([day.isoformat(), FIRST_CONTEST + i, words[i], reported, hard] + pct)

    # dirty rows for the cleaning pass
    rows[40][2] = "clen"      # -> clean
    rows[90][2] = "rprobe"    # -> probe
    rows[150][2] = "tash"     # -> trash
    rows[210][2] = "naïve"  # -> naive
    rows[260][2] = rows[260][2].upper()  # case noise
    rows[180][3] = 2569       # interior outlier, both neighbors exceed 10000
    rows[180][4] = 183        # keep hard mode below the corrupted count

    header = "date,contest_number,word,reported_results,hard_mode,pct_1,pct_2,pct_3,pct_4,pct_5,pct_6,pct_x"
    lines = [header] + [",".join(str(v) for v in r) for r in rows]
    out = ROOT / "data" / "synthetic_wordle.csv"
    out.parent.mkdir(exist_ok=True)
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({len(rows)} rows)")


if __name__ == "__main__":
    main()
