#!/usr/bin/env python3
"""Print the derived planar pure braid relator tables.

The package derives these relators at call time from the braid action on
a free group, verifying every relator inside Aut(F_n).  This script just
prints the tables in the presentation file format, for inspection or for
refreshing the frozen snapshot in the test suite.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from braidhom.presentations import artin_pure_presentation, serialize_presentation


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--max-n", type=int, default=5, help="largest strand count to print"
    )
    ap.add_argument(
        "--min-n", type=int, default=2, help="smallest strand count to print"
    )
    args = ap.parse_args()
    if args.min_n < 1 or args.max_n < args.min_n:
        ap.error("need 1 <= min-n <= max-n")
    for n in range(args.min_n, args.max_n + 1):
        p = artin_pure_presentation(n)
        print(
            "# n = %d strands: %d generators, %d relators"
            % (n, p.num_generators, p.num_relators)
        )
        print(serialize_presentation(p))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
