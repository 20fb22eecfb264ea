#!/usr/bin/env python3
"""Run every verification suite and write the machine-readable report.

Usage:
    python scripts/run_full_verification.py [--seed N] [--out report.json]
"""

import argparse
import sys
from pathlib import Path

from cubicjordan import cli


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=30)
    parser.add_argument("--out", type=Path, default=Path("verification_report.json"))
    args = parser.parse_args()
    return cli.run(["all", "--seed", str(args.seed),
                    "--samples", str(args.samples),
                    "--json", str(args.out)])


if __name__ == "__main__":
    sys.exit(main())
