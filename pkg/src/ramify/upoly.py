"""Dense univariate polynomials over an exact field.

Polynomials are tuples of field payloads in ascending degree order with no
trailing zeros; ``()`` is the zero polynomial. ``F`` is any object exposing
``zero, one, add, sub, neg, mul, inv, is_zero``.
"""

from __future__ import annotations


def trim(F, a) -> tuple:
    a = list(a)
    while a and F.is_zero(a[-1]):
        a.pop()
    return tuple(a)


def deg(a) -> int:
    return len(a) - 1


def add(F, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        if i < len(a) and i < len(b):
            out.append(F.add(a[i], b[i]))
        elif i < len(a):
            out.append(a[i])
        else:
            out.append(b[i])
    return trim(F, out)


def neg(F, a):
    return tuple(F.neg(c) for c in a)


def sub(F, a, b):
    return add(F, a, neg(F, b))


def scale(F, c, a):
    if F.is_zero(c):
        return ()
    return trim(F, [F.mul(c, x) for x in a])


def mul(F, a, b):
    if not a or not b:
        return ()
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(F, out)


def divmod_(F, a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db = len(b) - 1
    inv_lc = F.inv(b[-1])
    if len(a) <= db:
        return (), trim(F, a)
    q = [F.zero] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if F.is_zero(c):
            continue
        c = F.mul(c, inv_lc)
        q[k - db] = c
        for j in range(db + 1):
            a[k - db + j] = F.sub(a[k - db + j], F.mul(c, b[j]))
    return trim(F, q), trim(F, a[:db])


def rem(F, a, b):
    return divmod_(F, a, b)[1]


def monic(F, a):
    if not a:
        return a
    return scale(F, F.inv(a[-1]), a)


def gcd(F, a, b):
    """Monic gcd (``()`` when both are zero)."""
    while b:
        a, b = b, rem(F, a, b)
    return monic(F, a)


def xgcd(F, a, b):
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = (F.one,), ()
    t0, t1 = (), (F.one,)
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return (), (), ()
    c = F.inv(r0[-1])
    return scale(F, c, r0), scale(F, c, s0), scale(F, c, t0)


def derivative(F, a):
    out = []
    for i in range(1, len(a)):
        c = F.zero
        for _ in range(i % F.p):
            c = F.add(c, a[i])
        out.append(c)
    return trim(F, out)


def evaluate(F, a, x):
    acc = F.zero
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def powmod(F, a, n: int, m):
    result = (F.one,)
    base = rem(F, a, m)
    while n:
        if n & 1:
            result = rem(F, mul(F, result, base), m)
        n >>= 1
        if n:
            base = rem(F, mul(F, base, base), m)
    return result


def compose(F, a, b):
    """a(b(x))."""
    acc = ()
    for c in reversed(a):
        acc = add(F, mul(F, acc, b), (c,) if not F.is_zero(c) else ())
    return acc


def is_irreducible(F, a, q: int) -> bool:
    """Ben-Or irreducibility test over a finite field with ``q`` elements."""
    n = deg(a)
    if n <= 0:
        return False
    if n == 1:
        return True
    a = monic(F, a)
    x = (F.zero, F.one)
    h = x
    for _ in range(n // 2):
        h = powmod(F, h, q, a)
        if deg(gcd(F, sub(F, h, x), a)) > 0:
            return False
    return True


def monic_polys(F, elements, degree: int):
    """All monic polynomials of the given degree, in a fixed order."""
    elements = list(elements)
    if degree == 0:
        yield (F.one,)
        return
    idx = [0] * degree
    q = len(elements)
    while True:
        yield tuple(elements[i] for i in idx) + (F.one,)
        k = 0
        while k < degree:
            idx[k] += 1
            if idx[k] < q:
                break
            idx[k] = 0
            k += 1
        if k == degree:
            return
