"""Independent reference computations used to freeze expected values.

Nothing here imports the package's arithmetic: polynomials in t are plain
dicts {exponent: int mod p}, determinants are expanded by permutations,
and tube components are found from explicit disc radii.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

INF = float("inf")


# -- Laurent polynomials over F_p as dicts -----------------------------------------------

def lp_norm(a: dict, p: int) -> dict:
    return {k: v % p for k, v in a.items() if v % p}


def lp_add(a: dict, b: dict, p: int) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return lp_norm(out, p)


def lp_mul(a: dict, b: dict, p: int) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return lp_norm(out, p)


def lp_val(a: dict):
    return min(a) if a else INF


def sylvester_resultant(f: list, g: list, p: int) -> dict:
    """Res(f, g) for f, g given as descending lists of dict-coefficients."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    zero: dict = {}
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(f) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(g) + [zero] * (size - n - 1 - i))
    det: dict = {}
    for perm in itertools.permutations(range(size)):
        sign = _perm_sign(perm)
        term = {0: sign}
        for r, c in enumerate(perm):
            term = lp_mul(term, rows[r][c], p)
            if not term:
                break
        det = lp_add(det, term, p)
    return det


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# -- finite fields ------------------------------------------------------------------------------

# F_4 = {0, 1, w, w+1} with w^2 = w + 1, encoded as 2-bit integers (bit i = coefficient of w^i)
F4_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]
F4_ADD = [[a ^ b for b in range(4)] for a in range(4)]


def brute_irreducible(a: tuple, p: int) -> bool:
    """Monic a (ascending over F_p) is irreducible iff no monic divisor of degree 1..deg/2."""
    n = len(a) - 1
    if n < 1:
        return False
    for d in range(1, n // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            b = tuple(low) + (1,)
            if _divides(b, a, p):
                return False
    return True


def _divides(b: tuple, a: tuple, p: int) -> bool:
    r = list(a)
    db = len(b) - 1
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] % p
        if c:
            for j in range(db + 1):
                r[k - db + j] = (r[k - db + j] - c * b[j]) % p
    return not any(x % p for x in r[:db])


# -- classical local field invariants ---------------------------------------------------------

def artin_schreier_m1(p: int) -> dict:
    """Invariants of y^p - y = 1/t over F_p((t)) from Hilbert's different formula.

    Lower numbering: G_0 = G_1 = Z/p, G_2 = 1, so one lower break at 1,
    phi is the identity up to 1 and the upper break is 1 as well. The
    different exponent is sum_i (|G_i| - 1) = 2 (p - 1), the Artin conductor
    is upper break + 1. Via x = 1/y the extension is x^p + t x^(p-1) - t.
    """
    return {
        "poly": f"X^{p}+t*X^{p - 1}-t",
        "e": p,
        "different": Fraction(2 * (p - 1)),
        "discriminant": Fraction(2 * (p - 1)),
        "lower": [Fraction(1)],
        "upper": [Fraction(1)],
        "conductor": Fraction(2),
    }


def kummer_tame(n: int) -> dict:
    """x^n = t with p not dividing n: different n - 1, conductor 1, no lower break above 0."""
    return {
        "poly": f"X^{n}-t",
        "e": n,
        "different": Fraction(n - 1),
        "discriminant": Fraction(n - 1),
        "conductor": Fraction(1),
    }


# -- tube components from explicit disc radii --------------------------------------------------

def _g(row, i, rho):
    return sum(rho if k == i else min(rho, d) for k, d in enumerate(row))


def disc_radius(row, i, r) -> Fraction:
    """Least rho with g_i(rho) >= r; g_i is continuous, increasing, piecewise linear."""
    r = Fraction(r)
    knots = sorted({Fraction(d) for k, d in enumerate(row) if k != i})
    for b in knots:
        gb = _g(row, i, b)
        if gb >= r:
            # on the piece just left of b every d_k >= b exceeds rho
            slope = 1 + sum(1 for k, d in enumerate(row) if k != i and d >= b)
            return b - (gb - r) / slope
    last = knots[-1] if knots else Fraction(0)
    return last + (r - _g(row, i, last))


def disc_components(D, r) -> int:
    """#components of the union of the discs {v(x - z_i) >= rho_i(r)}.

    Two ultrametric discs meet iff the smaller centre lies in the larger,
    i.e. v(z_i - z_j) >= min(rho_i, rho_j).
    """
    n = len(D)
    radii = [disc_radius(D[i], i, r) for i in range(n)]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for i in range(n):
        for j in range(i + 1, n):
            if D[i][j] >= min(radii[i], radii[j]):
                parent[find(i)] = find(j)
    return len({find(i) for i in range(n)})


def random_ultrametric(rng, n: int) -> list:
    """Distance matrix of n distinct points given by digit strings; levels are random rationals."""
    depth = 4
    levels = []
    x = Fraction(rng.randint(0, 4), rng.randint(1, 3))
    for _ in range(depth):
        levels.append(x)
        x += Fraction(rng.randint(1, 6), rng.randint(1, 4))
    pts = set()
    while len(pts) < n:
        pts.add(tuple(rng.randint(0, 1 + rng.randint(0, 1)) for _ in range(depth)))
    pts = sorted(pts)
    rng.shuffle(pts)
    D = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                D[i][j] = None
                continue
            k = next(k for k in range(depth) if pts[i][k] != pts[j][k])
            D[i][j] = levels[k]
    return D


def sample_points(D) -> list:
    """Every edge threshold, midpoints between them, and points beyond both ends."""
    n = len(D)
    taus = sorted({_g([d if d is not None else INF for d in D[i]], i, D[i][j])
                   for i in range(n) for j in range(n) if i != j})
    if not taus:
        return [Fraction(0), Fraction(1)]
    pts = set(taus)
    pts.add(taus[0] - 1)
    pts.add(taus[-1] + 1)
    for a, b in zip(taus, taus[1:]):
        pts.add((a + b) / 2)
    return sorted(pts)


def matrix_with_inf(D) -> list:
    return [[INF if i == j else D[i][j] for j in range(len(D))] for i in range(len(D))]
