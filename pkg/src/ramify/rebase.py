"""Re-present a monogenic extension L = K[z]/(P) as a Laurent field k_L((t_L)).

Eisenstein steps: the root z becomes the new uniformizer and t is solved
for as a power series T(z) by Newton iteration (the t-derivative of
P(z) is a unit, so this always converges).

Residually generating steps keep t as uniformizer and enlarge the residue
field:

* over a finite constant field, to the field of p^(n f) elements;
* over const(u) with constant reduction, by extending the constants;
* over const(u) with reduction A(X) + u B(X), gcd(A, B) = 1, the residue
  field of L is const(x) for the residue x of z, so the new field is
  const(u')((t)) with z = u' exactly and u = U(t) solved by Newton in u.

The embedding K -> L is stored lazily: images of t and u are computed at
the current working precision on first use.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from . import resroots, upoly
from .errors import HenselFails, PrecisionExhausted, UnsupportedResidue
from .hensel import newton_root
from .poly import KPoly
from .residue import GFq, PrimeField, RationalFunctionField, ResidueField
from .series import LaurentField, TSeries, working_precision
from .valrat import INF


class _Lazy:
    """Per-working-precision cache of a series-valued computation."""

    def __init__(self, fn):
        self._fn = fn
        self._cache: dict = {}
        self._lock = threading.Lock()

    def __call__(self) -> TSeries:
        key = working_precision()
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        val = self._fn()
        with self._lock:
            self._cache[key] = val
        return val


@dataclass(frozen=True, eq=False)
class Embedding:
    """A field map k((t)) -> k'((t')) given by images of w, u and t."""

    source: LaurentField
    target: LaurentField
    const_image: object = None  # image of the source generator w, if any
    u_solver: object = field(default=None, repr=False)  # None: u -> u
    t_solver: object = field(default=None, repr=False)  # None: t -> t'
    gen_solver: object = field(default=None, repr=False)

    def t_image(self) -> TSeries:
        return self.t_solver() if self.t_solver else self.target.t()

    def u_image(self) -> TSeries | None:
        return self.u_solver() if self.u_solver else None

    def generator_image(self) -> TSeries:
        if self.gen_solver is None:
            raise UnsupportedResidue("generator image not available for this embedding")
        return self.gen_solver()

    def _const(self, c):
        """Image of a constant-field payload in the target constant field."""
        src = self.source.residue
        C = src.const if isinstance(src, RationalFunctionField) else src
        tgt = self.target.residue
        D = tgt.const if isinstance(tgt, RationalFunctionField) else tgt
        if isinstance(C, PrimeField):
            return D.from_int(c)
        if self.const_image is None:
            return c
        return upoly.evaluate(D, tuple(D.from_int(x) for x in c), self.const_image)

    def map_residue(self, c) -> TSeries:
        src = self.source.residue
        tgt = self.target.residue
        K2 = self.target
        if not isinstance(src, RationalFunctionField):
            d = self._const(c)
            if isinstance(tgt, RationalFunctionField):
                d = tgt.from_const(d)
            return K2.const(d)
        num = tuple(self._const(x) for x in c[0])
        den = tuple(self._const(x) for x in c[1])
        U = self.u_image()
        if U is None:
            return K2.const(tgt.make(num, den))
        return _eval_const_poly(K2, num, U) / _eval_const_poly(K2, den, U)

    def map_series(self, a: TSeries) -> TSeries:
        K2 = self.target
        if a.is_certified_zero():
            return K2.zero()
        T = self.t_image()
        vT = T.valuation()
        if not a.coeffs:
            return K2.big_o(a.prec * vT)
        acc = K2.zero()
        for c in reversed(a.coeffs):
            acc = acc * T + self.map_residue(c)
        acc = acc * (T ** a.offset)
        if not a.is_exact:
            acc = acc + K2.big_o(a.prec * vT)
        return acc

    def map_poly(self, P: KPoly) -> KPoly:
        return KPoly(self.target, tuple(self.map_series(c) for c in P.coeffs), P.var)


def _eval_const_poly(K: LaurentField, coeffs, x: TSeries) -> TSeries:
    acc = K.zero()
    R = K.residue
    for c in reversed(coeffs):
        cc = R.from_const(c) if isinstance(R, RationalFunctionField) else c
        acc = acc * x + K.const(cc)
    return acc


@dataclass(frozen=True, eq=False)
class Rebased:
    field: LaurentField
    embedding: Embedding
    kind: str


def rebase_step(kind: str, P: KPoly) -> Rebased:
    if kind == "Eisenstein":
        return _rebase_eisenstein(P)
    return _rebase_unit(P)


# -- Eisenstein ------------------------------------------------------------------

def _rebase_eisenstein(P: KPoly) -> Rebased:
    K = P.field
    L = LaurentField(K.residue)
    ident = Embedding(K, L)

    def solve_t() -> TSeries:
        z = L.t()
        d = P.degree
        coeffs = P.asc  # a_0 .. a_d in ascending X-degree
        dcoeffs = [c.derivative() for c in coeffs]
        target = d + working_precision()

        def subst(a: TSeries, T: TSeries) -> TSeries:
            return Embedding(K, L, t_solver=lambda: T).map_series(a)

        def G(T):
            acc = L.zero()
            for c in reversed(coeffs):
                acc = acc * z + subst(c, T)
            return acc

        def dG(T):
            acc = L.zero()
            for c in reversed(dcoeffs):
                acc = acc * z + subst(c, T)
            return acc

        c1 = ident.map_residue(coeffs[0].leading())
        T = -(z ** d) / c1
        for _ in range(200):
            g = G(T)
            if g.is_certified_zero():
                return T
            dg = dG(T)
            if dg.valuation() != 0:
                raise HenselFails("t-derivative of the defining relation is not a unit")
            if not g.coeffs:
                if g.prec >= target:
                    return T.truncate(g.prec)
                raise PrecisionExhausted("uniformizer relation not certified")
            vg = g.valuation()
            if vg >= target:
                return T.truncate(vg)
            T = (T - g / dg).clip(target + 1)
        raise PrecisionExhausted("Newton iteration for t did not converge")

    t_lazy = _Lazy(solve_t)
    emb = Embedding(K, L, t_solver=t_lazy, gen_solver=lambda: L.t())
    return Rebased(L, emb, "Eisenstein")


# -- residually generating steps -----------------------------------------------------

def _reduction(P: KPoly):
    """P mod t as an ascending tuple over the residue field."""
    F = P.field.residue
    return upoly.trim(F, [c.coefficient(0) if c.coeffs or not c.is_exact else F.zero for c in P.asc])


def first_irreducible(p: int, n: int) -> tuple:
    Fp = PrimeField(p)
    for cand in upoly.monic_polys(Fp, range(p), n):
        if upoly.is_irreducible(Fp, cand, p):
            return cand
    raise AssertionError("no irreducible polynomial found")


def _extend_constants(C: ResidueField, Pbar_const) -> tuple:
    """Constant field of degree f over C containing a root of Pbar; returns
    (new field, image of the old generator, root)."""
    p = C.p
    f = upoly.deg(Pbar_const)
    if isinstance(C, PrimeField):
        if f == 1:
            return C, None, C.neg(Pbar_const[0])
        D = GFq(p, tuple(Pbar_const))
        return D, None, D.gen
    N = C.n * f
    D = GFq(p, first_irreducible(p, N))
    w_img = resroots.roots(D, tuple(D.from_int(x) for x in C.modulus))[0]
    mapped = tuple(upoly.evaluate(D, tuple(D.from_int(x) for x in c), w_img) for c in Pbar_const)
    root = resroots.roots(D, upoly.trim(D, mapped))[0]
    return D, w_img, root


def _rebase_unit(P: KPoly) -> Rebased:
    K = P.field
    F = K.residue
    Pbar = _reduction(P)
    if isinstance(F, RationalFunctionField) and not all(F.is_constant(c) for c in Pbar):
        return _rebase_unit_transcendental(P, Pbar)
    C = F.const if isinstance(F, RationalFunctionField) else F
    consts = [c[0][0] if c[0] else C.zero for c in Pbar] if isinstance(F, RationalFunctionField) else list(Pbar)
    D, w_img, root = _extend_constants(C, upoly.trim(C, consts))
    newres = RationalFunctionField(D) if isinstance(F, RationalFunctionField) else D
    L = LaurentField(newres)
    emb_holder: list = []

    def gen():
        PL = emb_holder[0].map_poly(P)
        r = newres.from_const(root) if isinstance(newres, RationalFunctionField) else root
        return newton_root(PL, L.const(r), working_precision())

    emb = Embedding(K, L, const_image=w_img, gen_solver=_Lazy(gen))
    emb_holder.append(emb)
    return Rebased(L, emb, "UnitMonogenic")


def _rebase_unit_transcendental(P: KPoly, Pbar) -> Rebased:
    K = P.field
    F = K.residue
    C = F.const
    split = resroots.linear_in_u(F, Pbar)
    if split is None:
        raise UnsupportedResidue(
            "rebasing needs a reduction of the form A(X) + u*B(X) over the constants")
    A, B = split
    L = LaurentField(RationalFunctionField(C))
    Fn = L.residue
    uprime = L.const(Fn.u)
    U0 = _eval_const_poly(L, A, uprime) / _eval_const_poly(L, B, uprime)
    U0 = -U0
    coeffs = P.asc

    def deriv_u(a: TSeries) -> TSeries:
        return K.from_dict({k: F.derivative(c) for k, c in a.terms()}, a.prec)

    dcoeffs = [deriv_u(c) for c in coeffs]

    def solve_u() -> TSeries:
        target = working_precision()
        U = U0
        for _ in range(200):
            emb = Embedding(K, L, u_solver=lambda: U)
            H = L.zero()
            for c in reversed(coeffs):
                H = H * uprime + emb.map_series(c)
            if H.is_certified_zero():
                return U
            dH = L.zero()
            for c in reversed(dcoeffs):
                dH = dH * uprime + emb.map_series(c)
            if dH.valuation() != 0:
                raise HenselFails("u-derivative of the defining relation is not a unit")
            if not H.coeffs:
                if H.prec >= target:
                    return U.truncate(H.prec)
                raise PrecisionExhausted("residue relation not certified")
            vh = H.valuation()
            if vh >= target:
                return U.truncate(vh)
            U = (U - H / dH).clip(target + 1)
        raise PrecisionExhausted("Newton iteration for u did not converge")

    emb = Embedding(K, L, u_solver=_Lazy(solve_u), gen_solver=lambda: uprime)
    return Rebased(L, emb, "UnitMonogenic")
