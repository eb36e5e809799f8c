import pytest
from hypothesis import given
from hypothesis import strategies as st

from ramify.errors import DivisionByZero, InputError, ParseError
from ramify.parse import parse_base, parse_input, parse_poly, parse_series
from ramify.poly import KPoly, format_kpoly
from ramify.series import format_series


@pytest.mark.parametrize("text,described", [
    ("laurent(p=2)", "laurent(p=2)"),
    ("laurent( p = 3 , k = Fp )", "laurent(p=3)"),
    ("laurent(p=2, k=Fp(u))", "laurent(p=2, k=Fp(u))"),
    ("laurent(p=2, k=Fq:w^2+w+1)", "laurent(p=2, k=Fq:w^2+w+1)"),
    ("laurent(p=3, k=Fq(u):w^2+1)", "laurent(p=3, k=Fq(u):w^2+1)"),
])
def test_base_round_trip(text, described):
    K = parse_base(text)
    assert K.describe() == described
    assert parse_base(K.describe()) == K


@pytest.mark.parametrize("text,line,col", [
    ("laurent(p=4)", 1, 11),
    ("laurent(p=2, k=Fq:w^2+1)", 1, 19),
    ("laurent(p=2", 1, 12),
    ("laurent(p=2)\n;X^2 + + t", 2, 8),
])
def test_errors_carry_positions(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_input(text)
    assert (info.value.details["line"], info.value.details["col"]) == (line, col)


def test_polynomial_grammar():
    K = parse_base("laurent(p=3, k=Fp(u))")
    P = parse_poly("(X - u*t)^2 - t^2*u^2 + t/(1+u)", K)
    assert P.degree == 2
    assert format_series(P.coeffs[1]) == "u*t"
    with pytest.raises(ParseError):
        parse_poly("X^2 + Y", K)
    with pytest.raises(DivisionByZero):
        parse_poly("X/(u-u)", K)
    with pytest.raises(ParseError):
        parse_poly("X^2 / X", K)
    with pytest.raises(InputError):
        parse_series("X+1", K)


def test_negative_powers_make_laurent_coefficients():
    K = parse_base("laurent(p=2)")
    assert parse_series("t^-2", K).valuation() == -2


@st.composite
def kpolys(draw):
    K = parse_base(draw(st.sampled_from(["laurent(p=2)", "laurent(p=3, k=Fp(u))",
                                         "laurent(p=2, k=Fq:w^2+w+1)"])))
    F = K.residue
    gens = [F.one] + list(F.gens.values())
    d = draw(st.integers(1, 3))
    coeffs = [K.one()]
    for _ in range(d):
        c = K.zero()
        for k in draw(st.lists(st.integers(-1, 3), max_size=3, unique=True)):
            c = c + K.const(draw(st.sampled_from(gens))).scale_t(k)
        coeffs.append(c)
    return K, KPoly(K, tuple(coeffs))


@given(kpolys())
def test_format_parse_round_trip(data):
    K, P = data
    assert parse_poly(format_kpoly(P), K) == P
