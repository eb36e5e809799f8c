"""Roots, factors and irreducibility of polynomials over residue fields.

Polynomials are ascending payload tuples (see ``upoly``). Over a finite
field everything is decidable by enumeration or Ben-Or; over const(u) we
decide the shapes that occur in practice and raise ``UndecidableResidue``
otherwise.
"""

from __future__ import annotations

import itertools

from . import upoly
from .errors import UndecidableResidue
from .residue import RationalFunctionField, ResidueField


def roots(F: ResidueField, a) -> list:
    """Distinct roots of ``a`` in ``F`` (deterministic order)."""
    a = upoly.trim(F, a)
    if upoly.deg(a) < 1:
        return []
    if F.is_finite:
        return [x for x in F.elements() if F.is_zero(upoly.evaluate(F, a, x))]
    if isinstance(F, RationalFunctionField):
        return _rational_roots(F, a)
    raise UndecidableResidue(f"root search over {F.describe()} is not supported")


def multiplicity(F: ResidueField, a, r) -> int:
    m = 0
    lin = (F.neg(r), F.one)
    while a:
        q, rem = upoly.divmod_(F, a, lin)
        if rem:
            break
        a = q
        m += 1
    return m


def factor_finite(C: ResidueField, a) -> list:
    """[(monic irreducible, multiplicity)] over a finite field, by trial division."""
    a = upoly.monic(C, upoly.trim(C, a))
    out = []
    d = 1
    elements = list(C.elements())
    while upoly.deg(a) >= 2 * d:
        for cand in upoly.monic_polys(C, elements, d):
            if not upoly.is_irreducible(C, cand, C.order):
                continue
            m = 0
            while True:
                q, r = upoly.divmod_(C, a, cand)
                if r:
                    break
                a, m = q, m + 1
            if m:
                out.append((cand, m))
        d += 1
    if upoly.deg(a) >= 1:
        # what is left is irreducible (or a repeat of an earlier factor)
        for i, (f, m) in enumerate(out):
            if f == a:
                out[i] = (f, m + 1)
                break
        else:
            out.append((a, 1))
    return sorted(out)


def monic_divisors(C: ResidueField, a) -> list:
    facs = factor_finite(C, a)
    divs = []
    for exps in itertools.product(*[range(m + 1) for _, m in facs]):
        d = (C.one,)
        for (f, _), e in zip(facs, exps):
            for _ in range(e):
                d = upoly.mul(C, d, f)
        divs.append(d)
    return sorted(divs, key=lambda x: (len(x), x))


def _clear_denominators(F: RationalFunctionField, a) -> list:
    C = F.const
    den = (C.one,)
    for c in a:
        g = upoly.gcd(C, den, c[1])
        den = upoly.divmod_(C, upoly.mul(C, den, c[1]), g)[0]
    out = []
    for n, d in a:
        out.append(upoly.mul(C, n, upoly.divmod_(C, den, d)[0]))
    return out


def _rational_roots(F: RationalFunctionField, a) -> list:
    C = F.const
    found = []
    polys = _clear_denominators(F, a)
    if not polys[0]:
        found.append(F.zero)
        while polys and not polys[0]:
            polys = polys[1:]
    if len(polys) >= 2:
        nums = monic_divisors(C, polys[0])
        dens = monic_divisors(C, polys[-1])
        units = [c for c in C.elements() if not C.is_zero(c)]
        seen = set()
        for n in nums:
            for d in dens:
                for c in units:
                    x = F.make(upoly.scale(C, c, n), d)
                    if x in seen:
                        continue
                    seen.add(x)
                    if F.is_zero(upoly.evaluate(F, a, x)):
                        found.append(x)
    return sorted(set(found), key=repr)


def pth_power_exponent(F: ResidueField, a) -> int:
    """Largest s with a in k[X^(p^s)]."""
    p = F.p
    exps = [i for i, c in enumerate(a) if i and not F.is_zero(c)]
    s = 0
    if not exps:
        return 0
    while all(e % p ** (s + 1) == 0 for e in exps):
        s += 1
    return s


def deflate(F: ResidueField, a, s: int):
    """q with a = q(X^(p^s))."""
    step = F.p ** s
    return upoly.trim(F, [a[i] for i in range(0, len(a), step)])


def is_irreducible(F: ResidueField, a) -> bool:
    """Decide irreducibility of a monic polynomial over a residue field."""
    a = upoly.monic(F, upoly.trim(F, a))
    n = upoly.deg(a)
    if n < 1:
        return False
    if n == 1:
        return True
    if F.is_finite:
        return upoly.is_irreducible(F, a, F.order)
    if not isinstance(F, RationalFunctionField):
        raise UndecidableResidue(f"irreducibility over {F.describe()}")
    C = F.const
    if all(F.is_constant(c) for c in a):
        # the constant field is algebraically closed in C(u)
        consts = [c[0][0] if c[0] else C.zero for c in a]
        return upoly.is_irreducible(C, upoly.trim(C, consts), C.order)
    nonzero = [i for i, c in enumerate(a) if not F.is_zero(c)]
    if nonzero == [0, n] and _is_prime_power(n, F.p):
        # X^(p^s) - c is irreducible iff c is not a p-th power
        return not F.is_pth_power(F.neg(a[0]))
    split = _linear_in_u(F, a)
    if split is not None:
        A, B = split
        # primitive and linear in u, so irreducible in C[u][X] (Gauss)
        return upoly.deg(upoly.gcd(C, A, B)) == 0
    if n <= 3:
        return not roots(F, a)
    raise UndecidableResidue(f"cannot decide irreducibility of a degree-{n} polynomial over {F.describe()}")


def _is_prime_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _linear_in_u(F: RationalFunctionField, a):
    """Write a = A(X) + u*B(X) with A, B over the constants, or return None."""
    C = F.const
    A, B = [], []
    for c in a:
        num, den = c
        if den != (C.one,) or len(num) > 2:
            return None
        A.append(num[0] if len(num) >= 1 else C.zero)
        B.append(num[1] if len(num) == 2 else C.zero)
    A, B = upoly.trim(C, A), upoly.trim(C, B)
    if not B:
        return None
    return A, B


def linear_in_u(F: RationalFunctionField, a):
    return _linear_in_u(F, a)
