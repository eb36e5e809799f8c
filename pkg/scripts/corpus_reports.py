#!/usr/bin/env python3
"""Emit ``report --json`` for every corpus input, concatenated, on stdout.

With ``--stdin`` the (base, poly) pairs are read as a JSON list instead of
being regenerated, which keeps repeated runs cheap.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from ramify.cli import run_command
from ramify.corpus import full_corpus


def reports(pairs) -> str:
    chunks = []
    for base, poly in pairs:
        out, err = io.StringIO(), io.StringIO()
        code = run_command(["report", "--base", base, "--poly", poly, "--json"], out, err)
        chunks.append(f"## {base} ; {poly} ; exit {code}\n")
        chunks.append(out.getvalue() or err.getvalue())
    return "".join(chunks)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--stdin", action="store_true", help="read [[base, poly], ...] from stdin")
    args = ap.parse_args()
    pairs = json.load(sys.stdin) if args.stdin else full_corpus()
    sys.stdout.write(reports(pairs))
    return 0


if __name__ == "__main__":
    sys.exit(main())
