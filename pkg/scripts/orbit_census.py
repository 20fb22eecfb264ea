#!/usr/bin/env python3
"""Census of orbit classes over random rational parameter cubes.

Draws cubes with small rational entries, classifies each one, and prints
the class frequencies together with a few sample cubes per class.  The
open class dominates quickly; the degenerate classes appear when entries
are drawn sparse.

Usage:
    python scripts/orbit_census.py [--cubes N] [--seed N] [--sparsity Q]
"""

import argparse
import random
from collections import Counter, defaultdict
from fractions import Fraction

from cubicjordan.coord8 import INDEX_TRIPLES, Hypermatrix
from cubicjordan.hvariety import classify_orbit


def random_cube(rng: random.Random, sparsity: float) -> Hypermatrix:
    entries = {}
    for triple in INDEX_TRIPLES:
        if rng.random() < sparsity:
            continue
        entries[triple] = Fraction(rng.randint(-3, 3), rng.randint(1, 2))
    return Hypermatrix(entries)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cubes", type=int, default=2000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--sparsity", type=float, default=0.6,
                        help="probability that an entry is zero")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    counts: Counter[str] = Counter()
    samples: dict[str, list[str]] = defaultdict(list)
    for _ in range(args.cubes):
        cube = random_cube(rng, args.sparsity)
        label = classify_orbit(cube).label
        counts[label] += 1
        if len(samples[label]) < 2:
            samples[label].append(cube.to_text())

    width = max(len(k) for k in counts)
    for label in sorted(counts):
        share = counts[label] / args.cubes
        print(f"{label:<{width}}  {counts[label]:6d}  {share:7.2%}")
    print()
    for label in sorted(samples):
        for text in samples[label]:
            print(f"{label:<{width}}  {text}")


if __name__ == "__main__":
    main()
