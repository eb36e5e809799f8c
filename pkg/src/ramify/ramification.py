"""Root distances, conductors, Herbrand functions, the Newton-polygon tower
law and base-change transforms.

Root distances v(z_i - z) are read off as the finite slopes of the Newton
polygon of P(X + z) over O_L, so no splitting field is ever built. The
conductor is their sum plus their maximum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import resroots
from .errors import (EtaleInput, FierceInput, InputError, NotCoprime, NotEisenstein,
                     NotNormalizable, SplitsAfterBaseChange, TameInput, UndecidableResidue,
                     UnsupportedTower, WrongDegree)
from .extension import (EISENSTEIN, ETALE, TAME, UNIT, ExtensionDesc, _is_eisenstein,
                        classify, detect_kind, different_val, make_extension)
from .hensel import linear_factors, roots_in_field
from .poly import (KPoly, MonogenicRing, NPType, NewtonPolygon, newton_polygon_from_points,
                   np_type_matches, segment_slope_on, shifted_by_root)
from .rebase import Rebased, _reduction, rebase_step
from .series import LaurentField, precision_retry
from .valrat import INF


# -- root distances and the conductor ----------------------------------------------------

@dataclass(frozen=True)
class RootDistanceProfile:
    distances: tuple  # sorted multiset of v(z_i - z), i != 1
    newton: NewtonPolygon  # of P(X + z)

    @property
    def sum(self) -> Fraction:
        return sum(self.distances, Fraction(0))

    @property
    def sup(self) -> Fraction:
        return max(self.distances, default=Fraction(0))


def root_distances(ext: ExtensionDesc) -> RootDistanceProfile:
    if "root_distances" not in ext._memo:
        ext._memo["root_distances"] = _root_distances(ext)
    return ext._memo["root_distances"]


@precision_retry
def _root_distances(ext: ExtensionDesc) -> RootDistanceProfile:
    step = ext.single()
    P = step.poly
    R = MonogenicRing(P)
    pts = shifted_by_root(P, R.gen(), exact_root=True)
    np = newton_polygon_from_points(pts)
    dists = []
    for s, n in np.finite_slopes():
        dists.extend([s] * n)
    return RootDistanceProfile(tuple(sorted(dists)), np)


def conductor(ext: ExtensionDesc) -> Fraction:
    rd = root_distances(ext)
    return rd.sum + rd.sup


@dataclass(frozen=True)
class LogConductor:
    kind: str  # "exact" or "bounds"
    value: Fraction | None
    lo: Fraction
    hi: Fraction
    provenance: str


@dataclass(frozen=True)
class ConductorResult:
    c: Fraction
    c_log: LogConductor


def log_conductor(ext: ExtensionDesc, c: Fraction | None = None) -> LogConductor:
    if c is None:
        c = conductor(ext)
    lo, hi = max(c - 1, Fraction(0)), c
    if len(ext.steps) == 1:
        st = ext.steps[0]
        if st.kind == EISENSTEIN:
            return LogConductor("exact", lo, lo, hi, "uniformizer generator: log tube at a equals tube at a+1")
        if st.kind == UNIT and st.e == 1:
            return LogConductor("exact", hi, lo, hi, "unit generator with e=1: log constraint on t decouples")
    return LogConductor("bounds", None, lo, hi, "general bounds max(c-1,0) <= c_log <= c")


def conductor_result(ext: ExtensionDesc) -> ConductorResult:
    c = conductor(ext)
    return ConductorResult(c, log_conductor(ext, c))


# -- Herbrand functions ------------------------------------------------------------------------

@dataclass(frozen=True)
class HerbrandProfile:
    degree: int
    i_values: tuple  # v_L(sigma(z) - z) over the non-identity embeddings
    lower_breaks: tuple
    upper_breaks: tuple
    phi_breakpoints: tuple  # (u, phi(u)) at u = -1 and at each lower break

    def r(self, u) -> int:
        """Number of embeddings sigma with v_L(sigma - id) >= u + 1 (identity included)."""
        u = Fraction(u)
        return 1 + sum(1 for i in self.i_values if i >= u + 1)

    def _slope(self, u) -> Fraction:
        return Fraction(self.r(u), self.r(0))

    def phi(self, u) -> Fraction:
        u = Fraction(u)
        if u < -1:
            raise InputError("phi is defined on [-1, inf)")
        # integrate r_t / r_0 from 0 to u over the pieces ]b_k, b_{k+1}]
        cuts = sorted({Fraction(0), u, *[b for b in self.lower_breaks]})
        lo, hi = (Fraction(0), u) if u >= 0 else (u, Fraction(0))
        total = Fraction(0)
        pts = [x for x in cuts if lo <= x <= hi]
        for a, b in zip(pts, pts[1:]):
            total += (b - a) * self._slope(b)
        return total if u >= 0 else -total

    def psi(self, v) -> Fraction:
        v = Fraction(v)
        if v < self.phi(-1):
            raise InputError("psi is defined on [phi(-1), inf)")
        knots = sorted({Fraction(-1), Fraction(0), *[b for b in self.lower_breaks if b >= -1]})
        for a, b in zip(knots, knots[1:]):
            if self.phi(a) <= v <= self.phi(b):
                return a + (v - self.phi(a)) / self._slope(b)
        a = knots[-1]
        return a + (v - self.phi(a)) / self._slope(a + 1)


@precision_retry
def herbrand_profile(ext: ExtensionDesc) -> HerbrandProfile:
    step = ext.single()
    if step.s >= 1:
        raise FierceInput("Herbrand functions need an unfiercely ramified extension")
    rd = root_distances(ext)
    iv = tuple(sorted(step.e * d for d in rd.distances))
    lower = tuple(sorted({i - 1 for i in iv}))
    hp = HerbrandProfile(step.degree, iv, lower, (), ())
    upper = tuple(hp.phi(b) for b in lower)
    bps = [Fraction(-1)] + [b for b in lower if b > -1]
    phi_bps = tuple((b, hp.phi(b)) for b in bps)
    return HerbrandProfile(step.degree, iv, lower, upper, phi_bps)


def conductor_vs_classical(ext: ExtensionDesc) -> bool:
    hp = herbrand_profile(ext)
    top = max(hp.upper_breaks, default=Fraction(-1))
    return conductor(ext) == top + 1


def dif_ram_bound_check(ext: ExtensionDesc) -> bool:
    dv = different_val(ext)
    if classify(ext, dv) == ETALE:
        raise EtaleInput("the different bound concerns ramified extensions")
    return dv < ext.e * conductor(ext)


# -- rebasing and the tower law --------------------------------------------------------------------

def rebase(ext: ExtensionDesc) -> Rebased:
    step = ext.single()
    return rebase_step(step.kind, step.poly)


@dataclass(frozen=True)
class TowerNPReport:
    c_ML: Fraction
    e_LK: int
    b: Fraction
    points: tuple
    vertices: tuple
    type_ok: bool
    slope_ok: bool

    @property
    def passed(self) -> bool:
        return self.type_ok and self.slope_ok


@precision_retry
def np_tower_check(extL: ExtensionDesc, polyM: KPoly, p: int | None = None) -> TowerNPReport:
    p = p or extL.p
    if polyM.degree != p:
        raise WrongDegree(f"[M:L] must be p = {p}, got {polyM.degree}")
    L = extL.top_field()
    M = make_extension(L, [(None, polyM)])
    cls = classify(M)
    if cls == ETALE:
        raise EtaleInput("M/L is etale")
    if cls == TAME:
        raise TameInput("M/L is tamely ramified")
    rd = root_distances(M)
    c = rd.sum + rd.sup
    b = c / extL.e
    np = rd.newton
    type_ok = np_type_matches(np, NPType((0, p - 1, p)))
    # the polygon lives in the valuation of L; b is measured in that of K
    slope = segment_slope_on(np, 0, p - 1)
    slope_ok = slope is not None and slope / extL.e == b / p
    return TowerNPReport(c, extL.e, b, np.points, np.vertices, type_ok, slope_ok)


# -- base change --------------------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseChangeResult:
    ext: ExtensionDesc
    m: int
    shift: int  # z = s^shift * w

    @property
    def poly(self) -> KPoly:
        return self.ext.steps[0].poly


def _valuation_pattern(P: KPoly) -> list:
    return [str(c.valuation()) for c in P.coeffs]


@precision_retry
def tame_base_change(ext: ExtensionDesc, m: int) -> BaseChangeResult:
    """Adjoin an m-th root s of t, then renormalize z = s^k w, k = ceil(m/d) - 1."""
    step = ext.single()
    K = ext.base
    if m < 1:
        raise InputError("m must be positive")
    if m % K.p == 0:
        raise NotCoprime(f"m = {m} is divisible by p = {K.p}")
    if step.kind != EISENSTEIN:
        raise NotEisenstein("tame base change is implemented for Eisenstein steps")
    if m == 1:
        return BaseChangeResult(ext, 1, 0)
    P = step.poly
    d = P.degree
    k = -(-m // d) - 1
    Ks = LaurentField(K.residue)
    substituted = KPoly(Ks, tuple(c.substitute_power(m) for c in P.coeffs), P.var)
    # coefficient of w^j in P(s^k w) / s^(k d) is a_j(s^m) s^(k (j - d))
    asc = substituted.asc
    Q = KPoly.from_asc(Ks, [c.scale_t(k * (j - d)) for j, c in enumerate(asc)], "W")
    if not _is_eisenstein(Q):
        rts = roots_in_field(substituted)
        if rts:
            factors = [str(f) for f in linear_factors(substituted, rts)]
            raise SplitsAfterBaseChange(
                f"P(s^{m}) has {len(rts)} root(s) over k((s))", factors=factors)
        raise NotNormalizable("renormalized polynomial is not Eisenstein",
                              valuations=_valuation_pattern(Q), shift=k)
    return BaseChangeResult(make_extension(Ks, [(EISENSTEIN, Q)]), m, k)


@precision_retry
def unramified_base_change(ext: ExtensionDesc, residue_ext: ExtensionDesc) -> ExtensionDesc:
    step = ext.single()
    rstep = residue_ext.single()
    if residue_ext.base != ext.base:
        from .errors import FieldMismatch

        raise FieldMismatch("residue extension must be over the same base")
    if rstep.kind != UNIT or rstep.s != 0:
        raise InputError("residue extension must be unramified (residually separable, e = 1)")
    emb = residue_ext.rebased().embedding
    Kp = emb.target
    P = emb.map_poly(step.poly)
    kind = detect_kind(P)
    if kind == UNIT:
        Pbar = _reduction(P)
        if not resroots.is_irreducible(Kp.residue, Pbar):
            rts = roots_in_field(P)
            if rts:
                factors = [str(f) for f in linear_factors(P, rts)]
                raise SplitsAfterBaseChange(f"P has {len(rts)} root(s) over the enlarged base",
                                            factors=factors)
            raise UndecidableResidue("reduction factors without roots; not a supported step")
    return make_extension(Kp, [(kind, P)])
