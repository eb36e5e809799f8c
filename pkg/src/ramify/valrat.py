"""Valuation values: exact rationals extended by +infinity."""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class Infinity:
    """The distinguished value +inf. A singleton; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __hash__(self):
        return hash("ramify.INF")

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArithmeticError("inf - inf")
        return self

    def __mul__(self, other):
        if other is self or other > 0:
            return self
        raise ArithmeticError(f"inf * {other}")

    __rmul__ = __mul__

    def __truediv__(self, other):
        if other is not self and other > 0:
            return self
        raise ArithmeticError(f"inf / {other}")

    def __reduce__(self):
        return (Infinity, ())


INF = Infinity()

ValRat = Union[Fraction, Infinity]


def valrat(x) -> ValRat:
    """Coerce ints, Fractions, "a/b" strings or "inf" to a ValRat."""
    if x is INF or x == "inf":
        return INF
    if isinstance(x, float):
        raise TypeError("floating-point valuations are not representable")
    return Fraction(x)


def is_finite(x) -> bool:
    return x is not INF


def fmt(x: ValRat) -> str:
    """Serialize as "num/den" (always with a denominator) or "inf"."""
    if x is INF:
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_valrat(s: str) -> ValRat:
    s = s.strip()
    if s == "inf":
        return INF
    return Fraction(s)
