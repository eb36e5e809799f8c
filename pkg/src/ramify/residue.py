"""Residue fields: F_p, F_q = F_p[w]/(m), F_p(u) and F_q(u).

Field objects are immutable descriptors; elements are plain hashable payloads
kept in canonical form so that ``==`` on payloads is field equality:

* ``PrimeField``: ints in ``range(p)``;
* ``GFq``: trimmed coefficient tuples over F_p of length ``< deg m``;
* ``RationalFunctionField``: ``(num, den)`` coefficient tuples over the
  constant field, coprime, ``den`` monic.

``ResidueElt`` wraps a payload with its field for operator-style use.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from . import upoly
from .errors import DivisionByZero, FieldMismatch, InputError


def _fmt_poly(coeffs, var: str, fmt_coeff, atomic) -> str:
    """Format ascending ``coeffs`` as a sum of terms, highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        s = fmt_coeff(c)
        if s == "0":
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if not mono:
            terms.append(s)
        elif s == "1":
            terms.append(mono)
        else:
            terms.append(f"{s}*{mono}" if atomic(c) else f"({s})*{mono}")
    return "+".join(terms) if terms else "0"


class ResidueField:
    """Common interface; concrete fields below."""

    p: int
    tag: str

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def eq(self, a, b) -> bool:
        return a == b

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def from_int(self, n: int):
        raise NotImplementedError

    def elt(self, payload) -> "ResidueElt":
        return ResidueElt(self, payload)

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def gens(self) -> dict:
        """Generator names usable in literals, mapped to payloads."""
        return {}

    def atomic(self, a) -> bool:
        """Whether ``format(a)`` needs no parentheses as a factor."""
        s = self.format(a)
        return all(ch not in s for ch in "+-/")


@dataclass(frozen=True)
class PrimeField(ResidueField):
    p: int

    def __post_init__(self):
        if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1)):
            raise InputError(f"{self.p} is not prime")

    tag = "Fp"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of 0 in F_%d" % self.p)
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, n: int):
        return n % self.p

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def order(self) -> int:
        return self.p

    def elements(self):
        return range(self.p)

    def pth_root(self, a):
        return a

    def format(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return "Fp"


@dataclass(frozen=True)
class GFq(ResidueField):
    """F_p[w]/(modulus); ``modulus`` is ascending over F_p, monic, irreducible."""

    p: int
    modulus: tuple

    tag = "Fq"

    def __post_init__(self):
        Fp = PrimeField(self.p)
        m = upoly.trim(Fp, [c % self.p for c in self.modulus])
        if not m or m[-1] != 1:
            raise InputError("defining polynomial of F_q must be monic")
        if not upoly.is_irreducible(Fp, m, self.p):
            raise InputError("defining polynomial of F_q is not irreducible over F_p",
                             modulus=list(m))
        object.__setattr__(self, "modulus", m)

    @cached_property
    def prime(self) -> PrimeField:
        return PrimeField(self.p)

    @property
    def n(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p ** self.n

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return (1,)

    @property
    def gen(self):
        return upoly.rem(self.prime, (0, 1), self.modulus)

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def gens(self) -> dict:
        return {"w": self.gen}

    def add(self, a, b):
        return upoly.add(self.prime, a, b)

    def neg(self, a):
        return upoly.neg(self.prime, a)

    def mul(self, a, b):
        return upoly.rem(self.prime, upoly.mul(self.prime, a, b), self.modulus)

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of 0 in F_q")
        g, s, _ = upoly.xgcd(self.prime, a, self.modulus)
        return upoly.rem(self.prime, s, self.modulus)

    def is_zero(self, a) -> bool:
        return not a

    def from_int(self, n: int):
        n %= self.p
        return (n,) if n else ()

    def from_prime(self, c: int):
        return self.from_int(c)

    def elements(self):
        for digits in itertools.product(range(self.p), repeat=self.n):
            yield upoly.trim(self.prime, digits)

    def pth_root(self, a):
        # Frobenius has order n on F_q, so its inverse is a -> a^(q/p).
        return self.pow(a, self.order // self.p)

    def format(self, a) -> str:
        return _fmt_poly(a, "w", str, lambda c: True)

    def describe(self) -> str:
        return "Fq:" + _fmt_poly(self.modulus, "w", str, lambda c: True)


@dataclass(frozen=True)
class RationalFunctionField(ResidueField):
    """const(u) for a finite constant field ``const``."""

    const: ResidueField

    @property
    def p(self) -> int:
        return self.const.p

    @property
    def tag(self) -> str:
        return "FpU" if isinstance(self.const, PrimeField) else "FqU"

    @property
    def zero(self):
        return ((), (self.const.one,))

    @property
    def one(self):
        return ((self.const.one,), (self.const.one,))

    @property
    def u(self):
        C = self.const
        return ((C.zero, C.one), (C.one,))

    @property
    def gens(self) -> dict:
        out = {"u": self.u}
        for name, g in self.const.gens.items():
            out[name] = self.from_const(g)
        return out

    def from_const(self, c):
        C = self.const
        return (((c,) if not C.is_zero(c) else ()), (C.one,))

    def from_int(self, n: int):
        return self.from_const(self.const.from_int(n))

    def make(self, num, den):
        """Canonical form of num/den (tuples over the constant field)."""
        C = self.const
        num = upoly.trim(C, num)
        den = upoly.trim(C, den)
        if not den:
            raise DivisionByZero("rational function with zero denominator")
        if not num:
            return self.zero
        if len(den) == 1:
            if den[0] == C.one:
                return num, den
            return upoly.scale(C, C.inv(den[0]), num), (C.one,)
        g = upoly.gcd(C, num, den)
        if len(g) > 1:
            num = upoly.divmod_(C, num, g)[0]
            den = upoly.divmod_(C, den, g)[0]
        lc = C.inv(den[-1])
        return upoly.scale(C, lc, num), upoly.scale(C, lc, den)

    def add(self, a, b):
        C = self.const
        (an, ad), (bn, bd) = a, b
        if ad == bd:
            return self.make(upoly.add(C, an, bn), ad)
        return self.make(upoly.add(C, upoly.mul(C, an, bd), upoly.mul(C, bn, ad)),
                         upoly.mul(C, ad, bd))

    def neg(self, a):
        return (upoly.neg(self.const, a[0]), a[1])

    def mul(self, a, b):
        C = self.const
        if not a[0] or not b[0]:
            return self.zero
        return self.make(upoly.mul(C, a[0], b[0]), upoly.mul(C, a[1], b[1]))

    def inv(self, a):
        if not a[0]:
            raise DivisionByZero("inverse of 0 in a rational function field")
        return self.make(a[1], a[0])

    def is_zero(self, a) -> bool:
        return not a[0]

    def is_constant(self, a) -> bool:
        return len(a[0]) <= 1 and len(a[1]) == 1

    def derivative(self, a):
        """d/du of a rational function."""
        C = self.const
        n, d = a
        dn = upoly.derivative(C, n)
        dd = upoly.derivative(C, d)
        return self.make(upoly.sub(C, upoly.mul(C, dn, d), upoly.mul(C, n, dd)),
                         upoly.mul(C, d, d))

    def is_pth_power(self, a) -> bool:
        # num/den coprime with monic den: a p-th power iff both parts are.
        return all(not any(c for i, c in enumerate(part) if i % self.p and not self.const.is_zero(c))
                   for part in a)

    def pth_root(self, a):
        if not self.is_pth_power(a):
            raise InputError("not a p-th power in the residue field")
        C = self.const
        p = self.p
        parts = []
        for part in a:
            parts.append(upoly.trim(C, [C.pth_root(part[i]) for i in range(0, len(part), p)]))
        return self.make(*parts)

    def format(self, a) -> str:
        C = self.const
        num = _fmt_poly(a[0], "u", C.format, C.atomic)
        if a[1] == (C.one,):
            return num
        den = _fmt_poly(a[1], "u", C.format, C.atomic)
        return f"({num})/({den})"

    def describe(self) -> str:
        if isinstance(self.const, PrimeField):
            return "Fp(u)"
        return "Fq(u):" + self.const.describe()[3:]


def prime_subfield(F: ResidueField) -> PrimeField:
    return PrimeField(F.p)


def constant_field(F: ResidueField) -> ResidueField:
    return F.const if isinstance(F, RationalFunctionField) else F


@dataclass(frozen=True)
class ResidueElt:
    """A residue-field element tagged with its field."""

    field: ResidueField
    value: object

    def _check(self, other) -> "ResidueElt":
        if isinstance(other, int):
            return ResidueElt(self.field, self.field.from_int(other))
        if not isinstance(other, ResidueElt):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.describe()} vs {other.field.describe()}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return ResidueElt(self.field, self.field.add(self.value, other.value))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return ResidueElt(self.field, self.field.sub(self.value, other.value))

    def __neg__(self):
        return ResidueElt(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        other = self._check(other)
        return ResidueElt(self.field, self.field.mul(self.value, other.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._check(other)
        return ResidueElt(self.field, self.field.div(self.value, other.value))

    def __pow__(self, n: int):
        return ResidueElt(self.field, self.field.pow(self.value, n))

    def inverse(self) -> "ResidueElt":
        return ResidueElt(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __str__(self):
        return self.field.format(self.value)


def rf_op(kind: str, a: ResidueElt, b: ResidueElt | int | None = None):
    """Exact residue-field arithmetic: add, mul, inv, neg, eq, pow."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inverse()
    if kind == "neg":
        return -a
    if kind == "eq":
        b = a._check(b)
        return a.field.eq(a.value, b.value)
    if kind == "pow":
        return a ** int(b)
    raise ValueError(f"unknown residue operation {kind!r}")
