"""Truncated Laurent series over a residue field, K = k((t)).

A ``TSeries`` stores ``coeffs[i]`` as the coefficient of ``t^(offset+i)`` and
is known modulo ``t^prec``; ``prec == math.inf`` marks an exactly known
Laurent polynomial. Arithmetic propagates precision; the valuation of an
element whose known coefficients all vanish is undetermined and raises
``PrecisionExhausted``.

Working precision (the relative number of terms kept when an exact
computation produces an infinite expansion, e.g. ``1/(1+t)``) lives in a
context variable. ``precision_retry`` re-runs a computation with doubled
working precision until it succeeds or the cap is reached.
"""

from __future__ import annotations

import contextlib
import contextvars
import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, FieldMismatch, PrecisionCapExceeded, PrecisionExhausted
from .residue import PrimeField, ResidueField
from .valrat import INF

DEFAULT_PRECISION = 16
DEFAULT_CAP = 512

_working = contextvars.ContextVar("ramify_working_precision", default=DEFAULT_PRECISION)
_cap = contextvars.ContextVar("ramify_precision_cap", default=DEFAULT_CAP)
_in_retry = contextvars.ContextVar("ramify_in_retry", default=False)


def working_precision() -> int:
    return _working.get()


def precision_cap() -> int:
    return _cap.get()


@contextlib.contextmanager
def precision(working: int | None = None, cap: int | None = None):
    """Temporarily set working precision and/or the retry cap."""
    tokens = []
    if working is not None:
        tokens.append((_working, _working.set(working)))
    if cap is not None:
        tokens.append((_cap, _cap.set(cap)))
    try:
        yield
    finally:
        for var, tok in reversed(tokens):
            var.reset(tok)


def precision_retry(fn):
    """Retry ``fn`` with doubled working precision on ``PrecisionExhausted``.

    Only the outermost decorated call drives retries; nested calls run once
    at whatever precision is current.
    """

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        if _in_retry.get():
            return fn(*args, **kwargs)
        flag = _in_retry.set(True)
        try:
            prec = _working.get()
            cap = _cap.get()
            while True:
                tok = _working.set(prec)
                try:
                    return fn(*args, **kwargs)
                except PrecisionCapExceeded:
                    raise
                except PrecisionExhausted as exc:
                    if prec >= cap:
                        raise PrecisionCapExceeded(
                            f"working precision cap {cap} exceeded: {exc.message}", cap=cap
                        ) from exc
                    prec = min(2 * prec, cap)
                finally:
                    _working.reset(tok)
        finally:
            _in_retry.reset(flag)

    return wrapper


@dataclass(frozen=True)
class LaurentField:
    """The complete discrete valuation field k((t)) with uniformizer t."""

    residue: ResidueField

    @property
    def p(self) -> int:
        return self.residue.p

    def describe(self) -> str:
        k = self.residue.describe()
        return f"laurent(p={self.p})" if k == "Fp" else f"laurent(p={self.p}, k={k})"

    # constructors
    def zero(self) -> "TSeries":
        return TSeries(self.residue, 0, (), math.inf)

    def one(self) -> "TSeries":
        return self.const(self.residue.one)

    def const(self, c) -> "TSeries":
        return TSeries.make(self.residue, 0, (c,), math.inf)

    def from_int(self, n: int) -> "TSeries":
        return self.const(self.residue.from_int(n))

    def t(self, k: int = 1) -> "TSeries":
        return TSeries(self.residue, k, (self.residue.one,), math.inf)

    def big_o(self, n: int) -> "TSeries":
        """The inexact zero O(t^n)."""
        return TSeries(self.residue, n, (), n)

    def from_dict(self, terms: dict, prec=math.inf) -> "TSeries":
        F = self.residue
        if not terms:
            return TSeries.make(F, 0 if prec == math.inf else prec, (), prec)
        lo = min(terms)
        hi = max(terms)
        coeffs = [F.zero] * (hi - lo + 1)
        for k, c in terms.items():
            coeffs[k - lo] = c
        return TSeries.make(F, lo, coeffs, prec)


@dataclass(frozen=True)
class TSeries:
    field: ResidueField
    offset: int
    coeffs: tuple
    prec: float | int = math.inf

    @staticmethod
    def make(field: ResidueField, offset: int, coeffs, prec=math.inf) -> "TSeries":
        """Normalize: drop leading/trailing zeros and coefficients past ``prec``."""
        if (prec == math.inf and coeffs and not field.is_zero(coeffs[0])
                and not field.is_zero(coeffs[-1])):
            return TSeries(field, offset, tuple(coeffs), prec)
        coeffs = list(coeffs)
        if prec != math.inf:
            keep = max(0, prec - offset)
            del coeffs[keep:]
        i = 0
        while i < len(coeffs) and field.is_zero(coeffs[i]):
            i += 1
        coeffs = coeffs[i:]
        offset += i
        while coeffs and field.is_zero(coeffs[-1]):
            coeffs.pop()
        if not coeffs:
            offset = 0 if prec == math.inf else prec
        return TSeries(field, offset, tuple(coeffs), prec)

    # -- queries ----------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.prec == math.inf

    def is_certified_zero(self) -> bool:
        return not self.coeffs and self.is_exact

    def is_known_nonzero(self) -> bool:
        return bool(self.coeffs)

    def valuation(self):
        if self.coeffs:
            return self.offset
        if self.is_exact:
            return INF
        raise PrecisionExhausted(f"valuation undetermined: element is O(t^{self.prec})")

    def coefficient(self, k: int):
        if self.prec != math.inf and k >= self.prec:
            raise PrecisionExhausted(f"coefficient of t^{k} beyond precision {self.prec}")
        i = k - self.offset
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def leading(self):
        if not self.coeffs:
            self.valuation()
            raise DivisionByZero("leading coefficient of zero")
        return self.coeffs[0]

    @property
    def rel_prec(self):
        return self.prec - self.offset

    def terms(self):
        for i, c in enumerate(self.coeffs):
            if not self.field.is_zero(c):
                yield self.offset + i, c

    def _same(self, other: "TSeries"):
        if not isinstance(other, TSeries):
            raise TypeError(f"expected TSeries, got {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch("series over different residue fields")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "TSeries") -> "TSeries":
        self._same(other)
        F = self.field
        prec = min(self.prec, other.prec)
        if not other.coeffs:
            return TSeries.make(F, self.offset, self.coeffs, prec)
        if not self.coeffs:
            return TSeries.make(F, other.offset, other.coeffs, prec)
        lo = min(self.offset, other.offset)
        hi = max(self.offset + len(self.coeffs), other.offset + len(other.coeffs))
        if prec != math.inf:
            hi = min(hi, prec)
        if hi <= lo:
            return TSeries.make(F, lo, (), prec)
        if type(F) is PrimeField:
            out = [0] * (hi - lo)
            for src in (self, other):
                base = src.offset - lo
                for i, c in enumerate(src.coeffs[:max(0, hi - src.offset)]):
                    out[base + i] += c
            return TSeries.make(F, lo, [c % F.p for c in out], prec)
        out = [F.zero] * (hi - lo)
        for src in (self, other):
            base = src.offset - lo
            for i, c in enumerate(src.coeffs):
                j = base + i
                if j >= len(out):
                    break
                out[j] = F.add(out[j], c)
        return TSeries.make(F, lo, out, prec)

    def __neg__(self) -> "TSeries":
        F = self.field
        return TSeries(F, self.offset, tuple(F.neg(c) for c in self.coeffs), self.prec)

    def __sub__(self, other: "TSeries") -> "TSeries":
        return self + (-other)

    def __mul__(self, other: "TSeries") -> "TSeries":
        self._same(other)
        F = self.field
        if self.is_certified_zero() or other.is_certified_zero():
            return TSeries(F, 0, (), math.inf)
        # Valuation lower bound of an inexact zero is its precision.
        oa = self.offset if self.coeffs else self.prec
        ob = other.offset if other.coeffs else other.prec
        prec = min(self.prec + ob, other.prec + oa)
        if not self.coeffs or not other.coeffs:
            return TSeries.make(F, prec, (), prec)
        lo = oa + ob
        n = len(self.coeffs) + len(other.coeffs) - 1
        if prec != math.inf:
            n = min(n, prec - lo)
        if n <= 0:
            return TSeries.make(F, prec, (), prec)
        bc = other.coeffs
        if type(F) is PrimeField:
            return TSeries.make(F, lo, _int_convolve(self.coeffs, bc, n, F.p), prec)
        out = [F.zero] * n
        for i, a in enumerate(self.coeffs):
            if i >= n:
                break
            if F.is_zero(a):
                continue
            for j in range(min(len(bc), n - i)):
                out[i + j] = F.add(out[i + j], F.mul(a, bc[j]))
        return TSeries.make(F, lo, out, prec)

    def scale(self, c) -> "TSeries":
        """Multiply by a residue scalar."""
        F = self.field
        if F.is_zero(c):
            return TSeries(F, 0, (), math.inf) if self.is_exact else TSeries.make(F, self.prec, (), self.prec)
        return TSeries.make(F, self.offset, [F.mul(c, x) for x in self.coeffs], self.prec)

    def scale_t(self, k: int) -> "TSeries":
        if not self.coeffs and self.is_exact:
            return self
        return TSeries(self.field, self.offset + k, self.coeffs, self.prec + k)

    def truncate(self, n) -> "TSeries":
        """Forget everything from t^n on."""
        if n >= self.prec:
            return self
        return TSeries.make(self.field, self.offset, self.coeffs, n)

    def clip(self, n) -> "TSeries":
        """Like ``truncate`` but keeps an exact series that already ends below t^n."""
        if self.is_exact and self.offset + len(self.coeffs) <= n:
            return self
        return self.truncate(n)

    def inverse(self, rel: int | None = None) -> "TSeries":
        F = self.field
        if not self.coeffs:
            if self.is_exact:
                raise DivisionByZero("inverse of the zero series")
            raise PrecisionExhausted(f"cannot invert O(t^{self.prec})")
        v = self.offset
        if self.is_exact and len(self.coeffs) == 1:
            return TSeries(F, -v, (F.inv(self.coeffs[0]),), math.inf)
        if self.is_exact:
            n = rel if rel is not None else working_precision()
        else:
            n = self.prec - v
        c = self.coeffs
        inv0 = F.inv(c[0])
        out = [inv0]
        for k in range(1, n):
            acc = F.zero
            for j in range(1, min(k, len(c) - 1) + 1):
                acc = F.add(acc, F.mul(c[j], out[k - j]))
            out.append(F.neg(F.mul(inv0, acc)))
        return TSeries.make(F, -v, out, -v + n)

    def __truediv__(self, other: "TSeries") -> "TSeries":
        self._same(other)
        if self.is_exact and other.is_exact and other.coeffs:
            q = _exact_quotient(self, other)
            if q is not None:
                return q
        return self * other.inverse()

    def __pow__(self, n: int) -> "TSeries":
        if n < 0:
            return self.inverse() ** (-n)
        result = TSeries.make(self.field, 0, (self.field.one,), math.inf)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def map_coeffs(self, fn, field: ResidueField) -> "TSeries":
        return TSeries.make(field, self.offset, [fn(c) for c in self.coeffs], self.prec)

    def substitute_power(self, m: int) -> "TSeries":
        """a(t) -> a(t^m)."""
        F = self.field
        if not self.coeffs:
            return self if self.is_exact else TSeries.make(F, self.prec * m, (), self.prec * m)
        out = [F.zero] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        prec = self.prec * m if self.prec != math.inf else math.inf
        return TSeries.make(F, self.offset * m, out, prec)

    def derivative(self) -> "TSeries":
        """Formal d/dt."""
        F = self.field
        terms = {}
        for k, c in self.terms():
            kc = F.mul(F.from_int(k), c)
            if not F.is_zero(kc):
                terms[k - 1] = kc
        prec = self.prec - 1 if self.prec != math.inf else math.inf
        return LaurentField(F).from_dict(terms, prec)

    def __str__(self) -> str:
        return format_series(self)


def _int_convolve(a, b, n: int, p: int) -> list:
    out = [0] * n
    for i, x in enumerate(a[:n]):
        if x:
            for j, y in enumerate(b[:n - i]):
                out[i + j] += x * y
    return [c % p for c in out]


def _exact_quotient(a: TSeries, b: TSeries):
    """a/b as an exact Laurent polynomial, or None if b does not divide a."""
    F = a.field
    if not a.coeffs:
        return a
    bc = b.coeffs
    if len(bc) == 1:
        inv = F.inv(bc[0])
        return TSeries(F, a.offset - b.offset, tuple(F.mul(inv, c) for c in a.coeffs), math.inf)
    # Long division in k[t] from the top degree; b has nonzero constant term.
    rem = list(a.coeffs)
    db = len(bc) - 1
    if len(rem) - 1 < db:
        return None
    inv_lc = F.inv(bc[-1])
    q = [F.zero] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        q[k - db] = c
        for j in range(db + 1):
            rem[k - db + j] = F.sub(rem[k - db + j], F.mul(c, bc[j]))
    if any(not F.is_zero(c) for c in rem[:db]):
        return None
    return TSeries.make(F, a.offset - b.offset, q, math.inf)


def format_series(a: TSeries, var: str = "t") -> str:
    F = a.field
    parts = []
    for k, c in sorted(a.terms(), key=lambda kc: -kc[0]):
        s = F.format(c)
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            parts.append(s)
        elif s == "1":
            parts.append(mono)
        else:
            parts.append(f"{s}*{mono}" if F.atomic(c) else f"({s})*{mono}")
    body = "+".join(parts)
    if not a.is_exact:
        o = f"O({var}^{a.prec})"
        return f"{body}+{o}" if body else o
    return body or "0"


def ts_op(kind: str, a: TSeries, b: TSeries | int | None = None) -> TSeries:
    """Series arithmetic entry point: add, mul, inv, scale_t."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "inv":
        return a.inverse()
    if kind == "scale_t":
        return a.scale_t(int(b))
    raise ValueError(f"unknown series operation {kind!r}")


def ts_val(a: TSeries):
    return a.valuation()


def as_fraction_val(a: TSeries) -> Fraction:
    v = a.valuation()
    return v if v is INF else Fraction(v)
