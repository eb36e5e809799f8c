"""Component step functions r -> #pi_0(X^r) for tubes X^r = {x : v(P(x)) >= r}.

For a point x whose nearest root is z_i at distance rho, every other root
is seen at distance min(rho, v(z_i - z_k)), so v(P(x)) = g_i(rho) with
g_i(rho) = sum_k min(rho, v(z_i - z_k)) (the k = i term contributing rho).
The tube near z_i is therefore a disc, and z_i, z_j share a component of
X^r exactly when g_i(v(z_i - z_j)) >= r; components are the transitive
closure of that relation.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import IncompleteSplitting, InputError, LawViolation, NotRepresentable, NotUltrametric
from .valrat import INF


class HomogeneousAssumptionUnverifiable(UserWarning):
    """A distance multiset from one root does not pin down a consistent profile."""


@dataclass(frozen=True)
class ComponentProfile:
    """Counts on ]-inf, a_1], ]a_1, a_2], ..., ]a_n, inf)."""

    jumps: tuple
    counts: tuple
    degree: int

    def __post_init__(self):
        for a in self.jumps:
            if not isinstance(a, (int, Fraction)) or isinstance(a, bool):
                raise NotRepresentable(f"jump {a!r} is not an exact rational")
        object.__setattr__(self, "jumps", tuple(Fraction(a) for a in self.jumps))
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if len(self.counts) != len(self.jumps) + 1:
            raise InputError("need exactly one more count than jumps")

    def count(self, r) -> int:
        r = Fraction(r)
        for a, c in zip(self.jumps, self.counts):
            if r <= a:
                return c
        return self.counts[-1]


def _g(row, i: int, rho) -> Fraction:
    return sum((rho if k == i else min(rho, d)) for k, d in enumerate(row))


def _check_matrix(D) -> list:
    n = len(D)
    M = [[INF if i == j else Fraction(D[i][j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        if len(D[i]) != n:
            raise InputError("distance matrix must be square")
        for j in range(n):
            if i != j and M[i][j] != M[j][i]:
                raise NotUltrametric(f"matrix not symmetric at ({i}, {j})")
            if i != j and M[i][j] < 0:
                raise InputError("root distances must be nonnegative")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if len({i, j, k}) == 3 and M[i][k] < min(M[i][j], M[j][k]):
                    raise NotUltrametric(f"v(z_{i}-z_{k}) < min(v(z_{i}-z_{j}), v(z_{j}-z_{k}))")
    return M


def _components(n: int, edges, r) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), tau in edges.items():
        if tau >= r:
            parent[find(i)] = find(j)
    return len({find(x) for x in range(n)})


def _strictly_above(n: int, edges, r) -> int:
    return _components(n, {k: v for k, v in edges.items() if v > r}, r)


def profile_from_matrix(D) -> ComponentProfile:
    M = _check_matrix(D)
    n = len(M)
    edges = {}
    for i in range(n):
        for j in range(i + 1, n):
            edges[(i, j)] = _g(M[i], i, M[i][j])
    jumps, counts = [], []
    for tau in sorted(set(edges.values())):
        at, above = _components(n, edges, tau), _strictly_above(n, edges, tau)
        if above != at:
            if not counts:
                counts.append(at)
            jumps.append(tau)
            counts.append(above)
    if not counts:
        counts = [n]
    return ComponentProfile(tuple(jumps), tuple(counts), n)


def profile_from_distances(dists) -> ComponentProfile:
    """Profile from the distances seen by one root, assuming every root sees the same."""
    dists = [Fraction(x) for x in dists]
    d = len(dists) + 1
    taus = [_g(dists + [INF], d - 1, x) for x in dists]
    jumps, counts = [], []
    ok = True

    def count_at(r):
        size = 1 + sum(1 for tau in taus if tau >= r)
        if d % size:
            return None
        return d // size

    for tau in sorted(set(taus)):
        at = count_at(tau)
        above = _count_above(taus, tau, d)
        if at is None or above is None:
            ok = False
            break
        if above != at:
            if not counts:
                counts.append(at)
            jumps.append(tau)
            counts.append(above)
    if not ok:
        warnings.warn("distance multiset is not consistent with a homogeneous root configuration; "
                      "using the minimal ultrametric completion", HomogeneousAssumptionUnverifiable)
        return profile_from_matrix(_minimal_completion(dists))
    if not counts:
        counts = [d]
    return ComponentProfile(tuple(jumps), tuple(counts), d)


def _count_above(taus, tau, d):
    size = 1 + sum(1 for x in taus if x > tau)
    if d % size:
        return None
    return d // size


def _minimal_completion(dists) -> list:
    n = len(dists) + 1
    row = [INF] + list(dists)
    M = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                M[i][j] = INF
            elif i == 0 or j == 0:
                M[i][j] = row[max(i, j)]
            else:
                M[i][j] = min(row[i], row[j])
    return M


def component_profile(distances) -> ComponentProfile:
    """Accept a full d x d matrix (lists of lists) or a multiset from one root."""
    distances = list(distances)
    if distances and isinstance(distances[0], (list, tuple)):
        return profile_from_matrix(distances)
    return profile_from_distances(distances)


def check_profile_laws(profile: ComponentProfile) -> dict:
    """Finite rational jumps, monotone counts, the ]a_i, a_(i+1)] convention."""
    report = {}
    report["finite"] = len(profile.jumps) < 10**6
    report["rational"] = all(isinstance(a, Fraction) for a in profile.jumps)
    report["increasing_jumps"] = all(a < b for a, b in zip(profile.jumps, profile.jumps[1:]))
    report["monotone"] = all(a < b for a, b in zip(profile.counts, profile.counts[1:]))
    report["positive"] = profile.counts[0] >= 1
    report["bounded"] = profile.counts[-1] <= profile.degree
    report["left_continuous"] = all(
        profile.count(a) == profile.counts[i] and profile.count(a + _eps(profile)) == profile.counts[i + 1]
        for i, a in enumerate(profile.jumps))
    for law, ok in report.items():
        if not ok:
            raise LawViolation(law)
    return report


def _eps(profile: ComponentProfile) -> Fraction:
    gaps = [b - a for a, b in zip(profile.jumps, profile.jumps[1:]) if b > a]
    return min(gaps, default=Fraction(1)) / 2


def conductor_from_profile(profile: ComponentProfile, d: int | None = None) -> Fraction:
    d = profile.degree if d is None else d
    if profile.counts[-1] != d:
        raise IncompleteSplitting(f"terminal count {profile.counts[-1]} < degree {d}")
    if not profile.jumps:
        return Fraction(0)
    return profile.jumps[-1]


def profile_samples(profile: ComponentProfile, rs=None) -> list:
    """(r, count) pairs at each jump and midway between jumps."""
    if rs is None:
        js = list(profile.jumps)
        rs = set()
        lo = (js[0] - 1) if js else Fraction(0)
        rs.add(lo)
        for a in js:
            rs.add(a)
        for a, b in zip(js, js[1:]):
            rs.add((a + b) / 2)
        rs.add((js[-1] + 1) if js else Fraction(1))
    return [(Fraction(r), profile.count(r)) for r in sorted(rs)]
