"""Finite separable extensions presented as towers of monogenic steps.

Each step is either Eisenstein (totally ramified, the root is a uniformizer)
or residually generating (P mod t is q(X^(p^s)) with q separable and the
reduction irreducible, so e = 1 and the residue degree is deg P, with
inseparable part p^s). Step i+1 is a polynomial over the re-presented field
of step i (see ``rebase``).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction

from . import resroots, upoly
from .errors import (CompositeUnresolvable, HintRequired, InputError, Inseparable,
                     InvariantViolation, NotEisenstein, NotFierce, NotUnitMonogenic,
                     ReducibleResidue)
from .hensel import roots_in_field, shift
from .poly import KPoly, MonogenicRing, elt_val, resultant
from .rebase import Rebased, _reduction, rebase_step
from .series import LaurentField, TSeries, precision_retry
from .valrat import INF

EISENSTEIN = "Eisenstein"
UNIT = "UnitMonogenic"
KINDS = (EISENSTEIN, UNIT)

ETALE, TAME, WILD, FIERCE = "Etale", "Tame", "WildUnfierce", "Fierce"


@dataclass(frozen=True)
class ExtensionStep:
    kind: str
    poly: KPoly
    e: int
    f: int
    s: int

    @property
    def degree(self) -> int:
        return self.poly.degree

    @property
    def field(self) -> LaurentField:
        return self.poly.field


class _RebaseCache:
    def __init__(self):
        self.lock = threading.Lock()
        self.value = None


@dataclass(frozen=True)
class ExtensionDesc:
    base: LaurentField
    steps: tuple = ()
    _top: _RebaseCache = field(default_factory=_RebaseCache, compare=False, repr=False)
    # exact results keyed by analysis name; safe to share since steps are immutable
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def e(self) -> int:
        return _prod(s.e for s in self.steps)

    @property
    def f_res(self) -> int:
        return _prod(s.f for s in self.steps)

    @property
    def s_L(self) -> int:
        return sum(s.s for s in self.steps)

    @property
    def degree(self) -> int:
        return _prod(s.degree for s in self.steps)

    @property
    def p(self) -> int:
        return self.base.p

    def single(self) -> ExtensionStep:
        from .errors import UnsupportedTower

        if len(self.steps) != 1:
            raise UnsupportedTower(f"operation needs a single monogenic step, got {len(self.steps)}")
        return self.steps[0]

    def top_field(self) -> LaurentField:
        """The Laurent field presenting L (the base for a further step)."""
        if not self.steps:
            return self.base
        with self._top.lock:
            if self._top.value is None:
                last = self.steps[-1]
                self._top.value = rebase_step(last.kind, last.poly)
            return self._top.value.field

    def rebased(self) -> Rebased:
        self.top_field()
        return self._top.value


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# -- validation ------------------------------------------------------------------------

def _is_eisenstein(P: KPoly) -> bool:
    if not P.is_monic() or P.degree < 1:
        return False
    for c in P.coeffs[1:-1]:
        if not c.is_certified_zero() and c.valuation() < 1:
            return False
    return P.coeffs[-1].valuation() == 1


def detect_kind(P: KPoly) -> str:
    """Eisenstein if the valuation pattern says so, else residually generating."""
    return EISENSTEIN if _is_eisenstein(P) else UNIT


@precision_retry
def make_step(kind: str, P: KPoly) -> ExtensionStep:
    if kind not in KINDS:
        raise InputError(f"unknown step kind {kind!r}")
    if not P.is_monic():
        raise InputError("defining polynomial must be monic")
    if P.degree < 1:
        raise InputError("defining polynomial must have positive degree")
    d = P.degree
    if kind == EISENSTEIN:
        if not _is_eisenstein(P):
            pattern = [str(c.valuation()) for c in P.coeffs]
            raise NotEisenstein("coefficients do not have the Eisenstein valuation pattern",
                                valuations=pattern)
        step = ExtensionStep(kind, P, d, 1, 0)
    else:
        for c in P.coeffs:
            if not c.is_certified_zero() and c.valuation() < 0:
                raise NotUnitMonogenic("coefficients must be integral")
        F = P.field.residue
        Pbar = _reduction(P)
        if not resroots.is_irreducible(F, Pbar):
            raise ReducibleResidue("reduction mod t is not irreducible over the residue field")
        s = resroots.pth_power_exponent(F, Pbar)
        step = ExtensionStep(kind, P, 1, d, s)
    if resultant(P, P.derivative()).is_certified_zero():
        raise Inseparable("Res(P, P') = 0")
    return step


def make_extension(base: LaurentField, steps) -> ExtensionDesc:
    """Validate a tower; ``steps`` holds (kind, KPoly) pairs, kind may be None."""
    built = []
    ext = ExtensionDesc(base, ())
    for kind, P in steps:
        cur = ext.top_field()
        if P.field != cur:
            from .errors import FieldMismatch

            raise FieldMismatch("step polynomial is not over the field presented by the previous steps")
        built.append(make_step(kind or detect_kind(P), P))
        ext = ExtensionDesc(base, tuple(built))
    return ext


# -- different, discriminant, class --------------------------------------------------------

@precision_retry
def step_different(step: ExtensionStep) -> Fraction:
    """v_{L}(P'(z)) for one step, in the normalized valuation of the step's top field."""
    R = MonogenicRing(step.poly)
    z = R.gen()
    dP = R.poly_at(step.poly.derivative(), z)
    v = elt_val(dP)
    if v is INF:
        raise Inseparable("P'(z) = 0")
    return v * step.e


@precision_retry
def step_discriminant(step: ExtensionStep) -> Fraction:
    v = resultant(step.poly, step.poly.derivative()).valuation()
    if v is INF:
        raise Inseparable("Res(P, P') = 0")
    return Fraction(v)


def different_val(ext: ExtensionDesc) -> Fraction:
    D = Fraction(0)
    for st in ext.steps:
        D = step_different(st) + st.e * D
    return D


def discriminant_val(ext: ExtensionDesc) -> Fraction:
    delta = Fraction(0)
    f_so_far = 1
    for st in ext.steps:
        delta = st.degree * delta + f_so_far * step_discriminant(st)
        f_so_far *= st.f
    return delta


def classify(ext: ExtensionDesc, different=None) -> str:
    if ext.s_L >= 1:
        return FIERCE
    dv = different_val(ext) if different is None else different
    if dv == 0:
        return ETALE
    if dv == ext.e - 1:
        return TAME
    return WILD


@dataclass(frozen=True)
class InvariantReport:
    e: int
    f_res: int
    s_L: int
    degree: int
    different_vL: Fraction
    discriminant_vK: Fraction
    cls: str


def invariants(ext: ExtensionDesc) -> InvariantReport:
    dv = different_val(ext)
    rep = InvariantReport(ext.e, ext.f_res, ext.s_L, ext.degree, dv, discriminant_val(ext),
                          classify(ext, dv))
    if rep.degree != rep.e * rep.f_res:
        raise InvariantViolation("degree != e * f_res")
    if rep.different_vL < rep.e - 1:
        raise InvariantViolation("different below e - 1")
    return rep


# -- eliminating fierce ramification --------------------------------------------------------------

@dataclass(frozen=True)
class Radicial:
    """A lift c of x^(p^exponent) for a residue element x of L radicial over K."""

    lift: TSeries
    exponent: int = 1


@dataclass(frozen=True)
class FierceRound:
    radicial: Radicial
    lift_poly: KPoly
    new_base: ExtensionDesc  # K'/K
    new_ext: ExtensionDesc  # L'/K'
    before: tuple  # (v_K(discriminant), s)
    after: tuple
    construction: str


def _lex_key(ext: ExtensionDesc) -> tuple:
    return (discriminant_val(ext), ext.s_L)


def auto_radicial(ext: ExtensionDesc) -> Radicial:
    """Read a radicial element off a first residually generating step with linear q."""
    if ext.steps and ext.steps[0].kind == UNIT and ext.steps[0].s >= 1:
        st = ext.steps[0]
        F = st.field.residue
        q = resroots.deflate(F, _reduction(st.poly), st.s)
        if upoly.deg(q) == 1:
            return Radicial(st.field.const(F.neg(q[0])), st.s)
    raise HintRequired("no radicial element could be read off the presentation; pass one explicitly")


@precision_retry
def eliminate_fierce_step(ext: ExtensionDesc, radicial: Radicial | None = None) -> FierceRound:
    if ext.s_L == 0:
        raise NotFierce("extension is not fiercely ramified")
    if radicial is None:
        radicial = auto_radicial(ext)
    K = ext.base
    if radicial.lift.field != K.residue:
        from .errors import FieldMismatch

        raise FieldMismatch("radicial lift must lie in the base field")
    q = K.p ** radicial.exponent
    coeffs = [K.one()] + [K.zero()] * (q - 2) + [-K.t(), -radicial.lift]
    f = KPoly(K, tuple(coeffs))
    new_base = make_extension(K, [(UNIT, f)])
    Kp = new_base.top_field()
    before = _lex_key(ext)

    new_ext = None
    construction = ""
    if ext.steps[0].kind == UNIT and ext.steps[0].poly == f:
        new_ext = make_extension(Kp, [(st.kind, st.poly) for st in ext.steps[1:]])
        construction = "first step equals the lift: L' is the rest of the tower over K'"
    elif len(ext.steps) == 1:
        emb = new_base.rebased().embedding
        P = emb.map_poly(ext.steps[0].poly)
        if roots_in_field(P):
            new_ext = ExtensionDesc(Kp, ())
            construction = "P has a root in K': L' = K'"
        else:
            Fp = Kp.residue
            for r in resroots.roots(Fp, _reduction(P)):
                Q = shift(P, Kp.const(r))
                try:
                    new_ext = make_extension(Kp, [(EISENSTEIN, Q)])
                except NotEisenstein:
                    continue
                construction = f"P(W + {Fp.format(r)}) is Eisenstein over K'"
                break
    if new_ext is None:
        raise CompositeUnresolvable("L' = L.K' has no supported presentation over K'")
    after = _lex_key(new_ext)
    if not after < before:
        raise InvariantViolation(f"no lexicographic drop: {before} -> {after}")
    return FierceRound(radicial, f, new_base, new_ext, before, after, construction)


def eliminate_fierce_fully(ext: ExtensionDesc, hints=(), max_rounds: int = 16) -> list:
    trace = []
    hints = list(hints)
    while ext.s_L >= 1:
        if len(trace) >= max_rounds:
            raise InvariantViolation("fierce elimination did not terminate")
        hint = hints.pop(0) if hints else None
        rnd = eliminate_fierce_step(ext, hint)
        trace.append(rnd)
        ext = rnd.new_ext
    return trace
