#!/usr/bin/env python3
"""Print the decision table over the standard space list.

One row per (space, strand count, flavor): the status, the rule ids in
trace order, and the witness values.  Useful for eyeballing the full
case analysis at once; the numbers come from the same exact engine as
the CLI ``verdict`` subcommand.
"""

import argparse
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from braidhom.presentations import SpaceSpec
from braidhom.verdict import kahler_verdict

SPACES = [
    "sphere",
    "plane",
    "disk",
    "c-star",
    "genus:1",
    "genus:2",
    "genus:3",
    "hyperbolic:2",
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument(
        "--flavor", choices=("pure", "full", "both"), default="both"
    )
    args = ap.parse_args()
    flavors = ("pure", "full") if args.flavor == "both" else (args.flavor,)
    header = "%-14s %3s %-5s %-10s %-28s %s" % (
        "space", "n", "flv", "status", "rules", "witnesses"
    )
    print(header)
    print("-" * len(header))
    for space_id in SPACES:
        space = SpaceSpec.parse(space_id)
        for n in range(2, args.max_n + 1):
            for flavor in flavors:
                v = kahler_verdict(space, n, flavor)
                rules = []
                for step in v.trace:
                    if step.rule not in rules:
                        rules.append(step.rule)
                wit = ", ".join(
                    "%s=%s" % (k, v.witnesses[k]) for k in sorted(v.witnesses)
                )
                print(
                    "%-14s %3d %-5s %-10s %-28s %s"
                    % (space_id, n, flavor, v.status, "+".join(rules), wit)
                )
    return 0


if __name__ == "__main__":
    sys.exit(main())
