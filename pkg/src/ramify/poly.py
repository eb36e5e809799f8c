"""Polynomials over K = k((t)), the monogenic rings O_K[z]/(P), resultants
and Newton polygons.

``KPoly`` keeps coefficients in descending order (leading coefficient
first) because that is how Newton-polygon indices are counted; arithmetic
internally works on ascending lists.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, InputError, PrecisionExhausted
from .series import LaurentField, TSeries, working_precision
from .valrat import INF, ValRat


# -- ascending coefficient lists over K ----------------------------------------

def _zero(K: LaurentField) -> TSeries:
    return K.zero()


def _degree(a: list) -> int:
    """Degree after dropping certified-zero top coefficients.

    An inexact zero on top makes the degree undetermined.
    """
    n = len(a) - 1
    while n >= 0:
        c = a[n]
        if c.coeffs:
            return n
        if not c.is_exact:
            raise PrecisionExhausted("polynomial degree undetermined: leading coefficient is O(t^%s)" % c.prec)
        n -= 1
    return -1


def _trim(a: list) -> list:
    n = _degree(a)
    return list(a[: n + 1])


def _add(K, a, b):
    n = max(len(a), len(b))
    z = K.zero()
    return [(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)]


def _sub(K, a, b):
    return _add(K, a, [-c for c in b])


def _mul(K, a, b):
    if not a or not b:
        return []
    out = [K.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x.is_certified_zero():
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _scale(a, c: TSeries):
    return [c * x for x in a]


def _prem(K, A, B):
    """Pseudo-remainder lc(B)^(degA-degB+1) * A mod B."""
    dA, dB = len(A) - 1, len(B) - 1
    lb = B[-1]
    R = list(A)
    e = dA - dB + 1
    while len(R) - 1 >= dB and R:
        dr = len(R) - 1
        lr = R[-1]
        shifted = [K.zero()] * (dr - dB) + [lr * c for c in B]
        R = [lb * x - y for x, y in zip(R, shifted)]
        R.pop()  # the top coefficient cancels by construction
        e -= 1
        R = _trim(R)
    if e > 0:
        f = lb ** e
        R = [f * c for c in R]
    return R


def _rem_monic(K, A, P):
    """A mod a monic P; the cancelled top coefficients are dropped exactly."""
    d = len(P) - 1
    R = list(A)
    while len(R) - 1 >= d:
        top = R.pop()
        k = len(R) - d
        if top.is_certified_zero():
            continue
        for j in range(d):
            R[k + j] = R[k + j] - top * P[j]
    return R


# -- KPoly -----------------------------------------------------------------------

@dataclass(frozen=True)
class KPoly:
    """A polynomial a_0 X^d + ... + a_d over a Laurent field."""

    field: LaurentField
    coeffs: tuple  # descending: coeffs[0] is the leading coefficient
    var: str = "X"

    def __post_init__(self):
        cs = list(self.coeffs)
        while cs and cs[0].is_certified_zero():
            cs.pop(0)
        if cs and not cs[0].coeffs:
            raise PrecisionExhausted("leading coefficient is not certified nonzero")
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def from_asc(K: LaurentField, asc, var: str = "X") -> "KPoly":
        return KPoly(K, tuple(reversed(list(asc))), var)

    @staticmethod
    def from_ints(K: LaurentField, desc, var: str = "X") -> "KPoly":
        return KPoly(K, tuple(c if isinstance(c, TSeries) else K.from_int(c) for c in desc), var)

    @property
    def asc(self) -> list:
        return list(reversed(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> TSeries:
        return self.coeffs[0]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == self.field.one()

    def coefficient(self, k: int) -> TSeries:
        """Coefficient of X^k."""
        d = self.degree
        if 0 <= k <= d:
            return self.coeffs[d - k]
        return self.field.zero()

    def _check(self, other: "KPoly"):
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "KPoly") -> "KPoly":
        self._check(other)
        return KPoly.from_asc(self.field, _add(self.field, self.asc, other.asc), self.var)

    def __sub__(self, other: "KPoly") -> "KPoly":
        self._check(other)
        return KPoly.from_asc(self.field, _sub(self.field, self.asc, other.asc), self.var)

    def __mul__(self, other: "KPoly") -> "KPoly":
        self._check(other)
        return KPoly.from_asc(self.field, _mul(self.field, self.asc, other.asc), self.var)

    def __neg__(self) -> "KPoly":
        return KPoly(self.field, tuple(-c for c in self.coeffs), self.var)

    def scale(self, c: TSeries) -> "KPoly":
        return KPoly.from_asc(self.field, _scale(self.asc, c), self.var)

    def derivative(self) -> "KPoly":
        K = self.field
        a = self.asc
        return KPoly.from_asc(K, [a[i] * K.from_int(i) for i in range(1, len(a))], self.var)

    def evaluate(self, x: TSeries) -> TSeries:
        acc = self.field.zero()
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def map_coeffs(self, fn, field: LaurentField) -> "KPoly":
        return KPoly(field, tuple(fn(c) for c in self.coeffs), self.var)

    def is_exact(self) -> bool:
        return all(c.is_exact for c in self.coeffs)

    def __str__(self) -> str:
        return format_kpoly(self)


def format_kpoly(f: KPoly, tvar: str = "t") -> str:
    from .series import format_series

    d = f.degree
    parts = []
    for i, c in enumerate(f.coeffs):
        if c.is_certified_zero():
            continue
        k = d - i
        mono = "" if k == 0 else (f.var if k == 1 else f"{f.var}^{k}")
        s = format_series(c, tvar)
        if not mono:
            parts.append(s if _atomic(s) else f"({s})")
        elif s == "1":
            parts.append(mono)
        else:
            parts.append(f"{s}*{mono}" if _atomic(s) else f"({s})*{mono}")
    return "+".join(parts) if parts else "0"


def _atomic(s: str) -> bool:
    return not any(ch in s for ch in "+-/")


# -- resultant ---------------------------------------------------------------------

def resultant(f: KPoly, g: KPoly) -> TSeries:
    """Res_X(f, g) = lc(f)^deg g * prod g(roots of f), by subresultants."""
    f._check(g)
    return _resultant_cached(f, g, working_precision())


@functools.lru_cache(maxsize=1024)
def _resultant_cached(f: KPoly, g: KPoly, _prec: int) -> TSeries:
    # the same Res(P, P') is needed for separability, the different and the discriminant
    return _resultant(f, g)


def _resultant(f: KPoly, g: KPoly) -> TSeries:
    K = f.field
    if f.degree < 1:
        raise InputError("resultant needs deg f >= 1")
    A, B = f.asc, g.asc
    if not B:
        return K.zero()
    s = K.one()
    dA, dB = len(A) - 1, len(B) - 1
    if dA < dB:
        A, B = B, A
        if (dA * dB) % 2:
            s = -s
        dA, dB = dB, dA
    if dB == 0:
        return s * B[0] ** dA
    gg = K.one()
    h = K.one()
    while True:
        delta = dA - dB
        if dA % 2 and dB % 2:
            s = -s
        R = _prem(K, A, B)
        A = B
        div = gg * h ** delta
        B = _trim([c / div for c in R])
        gg = A[-1]
        h = gg ** delta / h ** (delta - 1) if delta >= 1 else h
        dA = len(A) - 1
        if not B:
            return K.zero()
        dB = len(B) - 1
        if dB == 0:
            return s * B[0] ** dA / h ** (dA - 1)


def discriminant_resultant(P: KPoly) -> TSeries:
    return resultant(P, P.derivative())


# -- monogenic rings O_K[z]/(P) ------------------------------------------------------

@dataclass(frozen=True)
class MonogenicRing:
    """O_K[z]/(P) for a monic P; elements are ascending lists of length < deg P."""

    modulus: KPoly
    name: str = "z"

    def __post_init__(self):
        if not self.modulus.is_monic():
            raise InputError("monogenic ring needs a monic defining polynomial")

    @property
    def field(self) -> LaurentField:
        return self.modulus.field

    @property
    def degree(self) -> int:
        return self.modulus.degree

    def elt(self, asc) -> "OLElt":
        asc = list(asc)
        if len(asc) > self.degree:
            asc = _rem_monic(self.field, asc, self.modulus.asc)
        return OLElt(self, tuple(_strip_exact_top(asc)))

    def from_base(self, c: TSeries) -> "OLElt":
        return self.elt([c])

    def zero(self) -> "OLElt":
        return OLElt(self, ())

    def one(self) -> "OLElt":
        return self.from_base(self.field.one())

    def gen(self) -> "OLElt":
        if self.degree == 1:
            return self.from_base(-self.modulus.coefficient(0))
        return self.elt([self.field.zero(), self.field.one()])

    def poly_at(self, f: KPoly, x: "OLElt") -> "OLElt":
        acc = self.zero()
        for c in f.coeffs:
            acc = acc * x + self.from_base(c)
        return acc


def _strip_exact_top(a: list) -> list:
    a = list(a)
    while a and a[-1].is_certified_zero():
        a.pop()
    return a


@dataclass(frozen=True)
class OLElt:
    host: MonogenicRing
    coeffs: tuple  # ascending in z

    def _same(self, other: "OLElt"):
        if other.host != self.host:
            raise FieldMismatch("elements of different monogenic rings")

    def __add__(self, other: "OLElt") -> "OLElt":
        self._same(other)
        return self.host.elt(_add(self.host.field, list(self.coeffs), list(other.coeffs)))

    def __sub__(self, other: "OLElt") -> "OLElt":
        self._same(other)
        return self.host.elt(_sub(self.host.field, list(self.coeffs), list(other.coeffs)))

    def __neg__(self) -> "OLElt":
        return OLElt(self.host, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "OLElt") -> "OLElt":
        self._same(other)
        K = self.host.field
        return self.host.elt(_rem_monic(K, _mul(K, list(self.coeffs), list(other.coeffs)),
                                        self.host.modulus.asc))

    def __pow__(self, n: int) -> "OLElt":
        result = self.host.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: TSeries) -> "OLElt":
        return self.host.elt([c * x for x in self.coeffs])

    def is_certified_zero(self) -> bool:
        return all(c.is_certified_zero() for c in self.coeffs)

    @property
    def rep(self) -> KPoly:
        return KPoly.from_asc(self.host.field, self.coeffs, self.host.name)


def elt_val(a: OLElt) -> ValRat:
    """v(a) = v_K(Res(P, A)) / deg P, normalized so that v(t) = 1."""
    if a.is_certified_zero():
        return INF
    P = a.host.modulus
    A = a.rep
    if A.degree == 0:
        v = A.lc.valuation()
        return v if v is INF else Fraction(v)
    r = resultant(P, A)
    v = r.valuation()
    if v is INF:
        raise InputError("zero divisor in O_L: defining polynomial is reducible")
    return Fraction(v, P.degree)


def taylor_shift(P: KPoly, a: OLElt) -> list:
    """Coefficients of P(X + a) over O_L, descending."""
    R = a.host
    out: list = []  # descending
    for c in P.coeffs:
        # out <- out * (X + a) + c
        nxt = [R.zero() for _ in range(len(out) + 1)]
        for i, b in enumerate(out):
            nxt[i] = nxt[i] + b
            nxt[i + 1] = nxt[i + 1] + b * a
        nxt[-1] = nxt[-1] + R.from_base(c)
        out = nxt
    return out


def shifted_by_root(P: KPoly, a: OLElt, exact_root: bool = False) -> list:
    """Points (i, v) of the Newton polygon of P(X + a).

    With ``exact_root`` the caller certifies P(a) = 0, so the constant
    coefficient is taken to be exactly zero even when series precision
    would only show O(t^N).
    """
    coeffs = taylor_shift(P, a)
    pts = []
    d = len(coeffs) - 1
    for i, c in enumerate(coeffs):
        if exact_root and i == d:
            pts.append((i, INF))
        else:
            pts.append((i, elt_val(c)))
    return pts


# -- Newton polygons -------------------------------------------------------------------

@dataclass(frozen=True)
class NewtonPolygon:
    degree: int
    points: tuple  # (i, v) for every coefficient, v possibly INF
    vertices: tuple  # lower hull vertices (i, v), finite
    slopes: tuple  # (slope, length); a trailing (INF, n) for zero constant terms

    def finite_slopes(self) -> list:
        return [(s, n) for s, n in self.slopes if s is not INF]

    def slope_multiset(self) -> list:
        out = []
        for s, n in self.slopes:
            out.extend([s] * n)
        return out

    def breakpoints(self) -> list:
        """Indices where the slope changes, including the start of an infinite tail."""
        bps = [i for i, _ in self.vertices[1:-1]]
        if self.vertices and self.vertices[-1][0] < self.degree:
            bps.append(self.vertices[-1][0])
        return bps


@dataclass(frozen=True)
class NPType:
    breaks: tuple

    def __post_init__(self):
        b = tuple(self.breaks)
        if not b or b[0] != 0 or any(x > y for x, y in zip(b, b[1:])):
            raise InputError("Newton polygon type must be a nondecreasing sequence starting at 0")
        object.__setattr__(self, "breaks", b)


def newton_polygon_from_points(points) -> NewtonPolygon:
    pts = [(int(i), v if v is INF else Fraction(v)) for i, v in points]
    d = len(pts) - 1
    finite = [(i, v) for i, v in pts if v is not INF]
    if not finite:
        raise InputError("Newton polygon of the zero polynomial")
    hull: list = []
    for q in finite:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # drop hull[-1] if it lies on or above the segment hull[-2] -> q
            if (y2 - y1) * (q[0] - x1) >= (q[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(q)
    slopes = []
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        slopes.append((Fraction(y2 - y1) / (x2 - x1), x2 - x1))
    tail = d - hull[-1][0]
    if tail:
        slopes.append((INF, tail))
    if hull[0][0] != 0:
        raise InputError("leading coefficient must be nonzero")
    return NewtonPolygon(d, tuple(pts), tuple(hull), tuple(slopes))


def newton_polygon(f: KPoly) -> NewtonPolygon:
    pts = []
    for i, c in enumerate(f.coeffs):
        v = c.valuation()
        pts.append((i, v if v is INF else Fraction(v)))
    return newton_polygon_from_points(pts)


def np_type_matches(np: NewtonPolygon, ty: NPType) -> bool:
    """True iff the slope is constant on every open interval between breaks."""
    if ty.breaks[-1] != np.degree:
        raise InputError("type must end at the polynomial degree")
    allowed = set(ty.breaks)
    return all(b in allowed for b in np.breakpoints())


def segment_slope_on(np: NewtonPolygon, lo: int, hi: int):
    """The single slope of the hull over [lo, hi], or None if it bends there."""
    found = None
    x = 0
    for s, n in np.slopes:
        a, b = x, x + n
        if b > lo and a < hi:
            if found is None:
                found = s
            elif found != s:
                return None
        x = b
    return found
