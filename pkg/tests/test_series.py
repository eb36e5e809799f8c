import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from ramify.errors import DivisionByZero, PrecisionCapExceeded, PrecisionExhausted
from ramify.residue import PrimeField
from ramify.series import (LaurentField, format_series, precision, precision_retry, working_precision)
from ramify.valrat import INF

K3 = LaurentField(PrimeField(3))


@st.composite
def exact_series(draw, nonzero=False):
    offset = draw(st.integers(-3, 3))
    coeffs = draw(st.lists(st.integers(0, 2), min_size=1 if nonzero else 0, max_size=5))
    if nonzero:
        coeffs[0] = coeffs[0] or 1
    return K3.from_dict({offset + i: c for i, c in enumerate(coeffs)})


@st.composite
def series(draw):
    a = draw(exact_series())
    if draw(st.booleans()):
        return a + K3.big_o(draw(st.integers(2, 8)))
    return a


@given(exact_series(nonzero=True), exact_series(nonzero=True))
def test_valuation_is_a_homomorphism(a, b):
    assert (a * b).valuation() == a.valuation() + b.valuation()


@given(series(), series())
def test_ultrametric_inequality(a, b):
    s = a + b
    try:
        va, vb, vs = a.valuation(), b.valuation(), s.valuation()
    except PrecisionExhausted:
        return
    assert vs >= min(va, vb)
    if va != vb:
        assert vs == min(va, vb)


@given(exact_series(nonzero=True))
def test_inverse_is_correct_to_working_precision(a):
    prod = a * a.inverse()
    diff = prod - K3.one()
    # either exactly zero or zero to the relative precision carried
    assert not diff.coeffs


@given(exact_series(nonzero=True), exact_series(nonzero=True))
def test_exact_division_of_products_stays_exact(a, b):
    q = (a * b) / b
    assert q.is_exact
    assert not (q - a).coeffs


@given(series(), series())
def test_multiplication_precision_rule(a, b):
    oa = a.offset if a.coeffs else a.prec
    ob = b.offset if b.coeffs else b.prec
    assume(not (a.is_certified_zero() or b.is_certified_zero()))
    assert (a * b).prec == min(a.prec + ob, b.prec + oa)


def test_inexact_zero_has_no_valuation():
    z = K3.big_o(4)
    assert z.offset == 4 and z.prec == 4
    with pytest.raises(PrecisionExhausted):
        z.valuation()
    assert K3.zero().valuation() is INF


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        K3.zero().inverse()
    with pytest.raises(PrecisionExhausted):
        K3.big_o(3).inverse()


def test_geometric_series_inverse():
    a = K3.one() + K3.t()
    with precision(working=6):
        inv = a.inverse()
    assert inv.prec == 6
    assert [inv.coefficient(k) for k in range(6)] == [1, 2, 1, 2, 1, 2]


def test_clip_keeps_short_exact_series_exact():
    a = K3.t() + K3.t(2)
    assert a.clip(10).is_exact
    assert a.clip(2).prec == 2


def test_formatting():
    a = K3.from_dict({-1: 2, 0: 1, 3: 1}, prec=5)
    assert format_series(a) == "t^3+1+2*t^-1+O(t^5)"
    assert format_series(K3.zero()) == "0"


def test_precision_retry_doubles_until_cap():
    seen = []

    @precision_retry
    def needs(n):
        seen.append(working_precision())
        if working_precision() < n:
            raise PrecisionExhausted("more")
        return working_precision()

    with precision(working=4, cap=64):
        assert needs(20) == 32
        assert seen == [4, 8, 16, 32]
        with pytest.raises(PrecisionCapExceeded):
            needs(100)


def test_substitute_power_and_derivative():
    a = K3.from_dict({1: 1, 2: 2})
    assert a.substitute_power(3) == K3.from_dict({3: 1, 6: 2})
    assert a.derivative() == K3.from_dict({0: 1, 1: 1})
    assert K3.t(3).derivative() == K3.zero()
    assert math.isinf(a.prec)
