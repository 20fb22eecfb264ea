#!/usr/bin/env python3
"""Print the graded-ring numerology for a weight system.

Defaults to the standard positive grading (pairs and cube entries of
weight one, idempotent coordinates of weight two) and reports the
generator weights, the Hilbert numerator, and the invariants of the
threefold cut by nine weight-one sections.

Usage:
    python scripts/graded_ring_numbers.py [--weights FILE] [--sections N]
"""

import argparse
from pathlib import Path

from cubicjordan import grading, hvariety


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--weights", type=Path, default=None)
    parser.add_argument("--sections", type=int, default=9)
    args = parser.parse_args()

    if args.weights is not None:
        w = grading.parse_weight_file(args.weights.read_text())
        if isinstance(w, tuple):
            raise SystemExit("this script needs a single grading")
    else:
        w = grading.standard_weights()

    hom = grading.check_homogeneous(hvariety.equations(), w)
    print("homogeneous:", hom.ok)
    print("generator weights:", [str(g.weight) for g in hom.per_generator])

    can = grading.canonical_arithmetic(w)
    print(f"c = {can.c}, d = {can.d}, delta = {can.delta}")
    print(f"sum of weights = {can.weight_sum} (4d - c = {4 * can.d - can.c})")
    print(f"dualizing twists: ambient {can.ambient_dualizing_twist}, "
          f"variety {can.variety_dualizing_twist}")

    num = grading.hilbert_numerator(w)
    print("Hilbert numerator:", grading.poly1_str(num))
    print("palindromic:", grading.numerator_is_palindromic(num, int(can.delta)))

    fano = grading.fano_invariants(w, sections=args.sections)
    print(f"section of dimension {fano.dimension}: degree {fano.degree}, "
          f"h0 {fano.h0}, genus {fano.genus}")


if __name__ == "__main__":
    main()
