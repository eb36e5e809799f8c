#!/usr/bin/env python3
"""Write the component step function r -> #components for each corpus extension as long-form CSV."""

from __future__ import annotations

import argparse
import csv
import sys

from ramify.components import check_profile_laws, component_profile, profile_samples
from ramify.corpus import WORKED
from ramify.ramification import root_distances
from ramify.report import build_extension
from ramify.valrat import fmt


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="CSV path (default: stdout)")
    args = ap.parse_args()
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["base", "poly", "r", "count"])
    for base, poly in WORKED:
        prof = component_profile(root_distances(build_extension(base, [poly])).distances)
        check_profile_laws(prof)
        for r, c in profile_samples(prof):
            w.writerow([base, poly, fmt(r), c])
    if args.out:
        fh.close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
