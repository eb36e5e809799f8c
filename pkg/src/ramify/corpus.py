"""Deterministic example corpora for sweeps and tests."""

from __future__ import annotations

import random

from .errors import Inseparable
from .report import build_extension

BASES = ("laurent(p=2)", "laurent(p=3)", "laurent(p=2, k=Fp(u))")

# worked single-step examples: (base, poly)
WORKED = (
    ("laurent(p=2)", "X^2+t*X+t"),
    ("laurent(p=3)", "X^2-t"),
    ("laurent(p=2, k=Fp(u))", "X^2+t*X+u"),
    ("laurent(p=2, k=Fp(u))", "X^2+X+u"),
    ("laurent(p=2)", "X^2+X+1"),
    ("laurent(p=2)", "X^3+t"),
    ("laurent(p=3)", "X^3+t*X+t"),
    ("laurent(p=3)", "X^3-t*X^2+t"),
    ("laurent(p=3)", "X^2+X+2"),
    ("laurent(p=2, k=Fp(u))", "X^3+u*t*X+t"),
    ("laurent(p=2, k=Fp(u))", "X^2+u*t*X+t"),
    ("laurent(p=3, k=Fp(u))", "X^3+t*X+u"),
    ("laurent(p=2, k=Fq:w^2+w+1)", "X^2+w*t*X+t"),
    ("laurent(p=5)", "X^2-t"),
    ("laurent(p=2)", "X^2+t^3*X+t"),
)


def _coeff_choices(base: str) -> list:
    common = ["0", "t", "t^2", "t+t^2", "t^3"]
    if "Fp(u)" in base:
        common += ["u*t", "(u+1)*t^2"]
    if "p=3" in base:
        common += ["2*t", "-t^2"]
    return common


def _const_choices(base: str) -> list:
    out = ["t", "t+t^2", "t+t^3"]
    if "Fp(u)" in base:
        out += ["u*t", "(u^2+1)*t"]
    if "p=3" in base:
        out += ["2*t", "2*t+t^2"]
    return out


def eisenstein_corpus(per_base: int = 20, seed: int = 20240601) -> list:
    """(base, poly) pairs of separable Eisenstein polynomials of degrees 2..5."""
    rng = random.Random(seed)
    out = []
    for base in BASES:
        seen = set()
        tries = 0
        while sum(1 for b, _ in out if b == base) < per_base:
            tries += 1
            if tries > 5000:
                raise RuntimeError("corpus generation stalled")
            d = 2 + (len(seen) % 4)
            terms = [f"X^{d}"]
            for i in range(d - 1, 0, -1):
                c = rng.choice(_coeff_choices(base))
                if c != "0":
                    terms.append(f"({c})*X^{i}" if i > 1 else f"({c})*X")
            terms.append(f"({rng.choice(_const_choices(base))})")
            poly = "+".join(terms)
            if poly in seen:
                continue
            try:
                build_extension(base, [poly])
            except Inseparable:
                continue
            seen.add(poly)
            out.append((base, poly))
    return out


def full_corpus() -> list:
    return list(WORKED) + eisenstein_corpus()
