#!/usr/bin/env python3
"""Tabulate invariants over the generated corpus and check the conductor bounds."""

from __future__ import annotations

import argparse
import csv
import sys

from ramify.corpus import full_corpus
from ramify.extension import ETALE, invariants
from ramify.ramification import conductor_result
from ramify.report import build_extension
from ramify.valrat import fmt


def sweep(pairs):
    rows = []
    for base, poly in pairs:
        ext = build_extension(base, [poly])
        inv = invariants(ext)
        cr = conductor_result(ext)
        lc = cr.c_log
        ok = (lc.lo <= (lc.value if lc.value is not None else lc.lo) <= lc.hi
              and (inv.cls == ETALE) == (cr.c == 0)
              and (inv.cls == ETALE or inv.different_vL < inv.e * cr.c))
        rows.append({
            "base": base, "poly": poly, "e": inv.e, "f": inv.f_res, "class": inv.cls,
            "different_vL": fmt(inv.different_vL), "c": fmt(cr.c),
            "c_log": fmt(lc.value) if lc.value is not None else f"[{fmt(lc.lo)},{fmt(lc.hi)}]",
            "ok": ok,
        })
    return rows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="CSV path (default: stdout)")
    args = ap.parse_args()
    rows = sweep(full_corpus())
    fh = open(args.out, "w", newline="") if args.out else sys.stdout
    w = csv.DictWriter(fh, fieldnames=list(rows[0]))
    w.writeheader()
    w.writerows(rows)
    if args.out:
        fh.close()
    bad = [r for r in rows if not r["ok"]]
    print(f"{len(rows)} extensions, {len(bad)} failing", file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
