"""Roots of polynomials over k((t)): Newton-polygon descent plus Newton lifting."""

from __future__ import annotations

from fractions import Fraction

from . import resroots
from .errors import HenselFails, PrecisionExhausted
from .poly import KPoly, newton_polygon
from .series import LaurentField, TSeries, working_precision
from .valrat import INF


def shift(P: KPoly, a: TSeries) -> KPoly:
    """P(X + a) over K."""
    K = P.field
    out: list = []  # descending
    for c in P.coeffs:
        nxt = [K.zero() for _ in range(len(out) + 1)]
        for i, b in enumerate(out):
            nxt[i] = nxt[i] + b
            nxt[i + 1] = nxt[i + 1] + b * a
        nxt[-1] = nxt[-1] + c
        out = nxt
    return KPoly(K, tuple(out), P.var)


def newton_root(P: KPoly, x0: TSeries, target: int, max_iter: int = 200) -> TSeries:
    """Lift an approximate simple root x0 until it is certified mod t^target."""
    dP = P.derivative()
    x = x0
    for _ in range(max_iter):
        r = P.evaluate(x)
        if r.is_certified_zero():
            return x
        d = dP.evaluate(x)
        vd = d.valuation()
        if vd is INF:
            raise HenselFails("derivative vanishes at the approximate root")
        if not r.coeffs:
            cert = r.prec - vd
            if cert >= target:
                return x.truncate(cert)
            raise PrecisionExhausted("root not certified to the requested precision")
        vr = r.valuation()
        if vr - vd >= target:
            return x.truncate(vr - vd)
        x = (x - r / d).clip(target + vd + 1)
    raise PrecisionExhausted("Newton iteration did not reach the target precision")


def _residual(P: KPoly, i0: int, i1: int, lam: Fraction):
    """Residual polynomial (ascending, over k) of the hull segment [i0, i1]."""
    F = P.field.residue
    v0 = P.coeffs[i0].valuation()
    out = [F.zero] * (i1 - i0 + 1)
    for i in range(i0, i1 + 1):
        c = P.coeffs[i]
        if not c.coeffs:
            continue
        if c.offset == v0 + lam * (i - i0):
            out[i1 - i] = c.leading()
    return tuple(out)


def roots_in_field(P: KPoly, bound=None, depth: int = 0) -> list:
    """Roots of P in K with valuation > ``bound``, each certified to the working precision.

    Exact roots come back as exact series.
    """
    K = P.field
    F = K.residue
    if depth > 4 * working_precision():
        raise PrecisionExhausted("root separation needs more precision")
    found = []
    coeffs = list(P.coeffs)
    if coeffs and coeffs[-1].is_certified_zero():
        found.append(K.zero())
        while coeffs and coeffs[-1].is_certified_zero():
            coeffs.pop()
        P = KPoly(K, tuple(coeffs), P.var)
    if P.degree < 1:
        return found
    np = newton_polygon(P)
    x = 0
    for lam, n in np.slopes:
        i0, i1 = x, x + n
        x = i1
        if lam is INF or lam.denominator != 1:
            continue
        if bound is not None and lam <= bound:
            continue
        R = _residual(P, i0, i1, lam)
        for c in resroots.roots(F, R):
            if F.is_zero(c):
                continue
            m = resroots.multiplicity(F, R, c)
            x0 = K.const(c).scale_t(int(lam))
            target = int(lam) + working_precision()
            if m == 1:
                found.append(newton_root(P, x0, target))
            else:
                for y in roots_in_field(shift(P, x0), lam, depth + 1):
                    found.append(x0 + y)
    return found


def linear_factors(P: KPoly, rts) -> list:
    K = P.field
    return [KPoly(K, (K.one(), -r), P.var) for r in rts]
