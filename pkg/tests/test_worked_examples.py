"""Small hand-checked values for individual operations."""

from fractions import Fraction

import pytest

from ramify.components import component_profile, conductor_from_profile
from ramify.errors import SplitsAfterBaseChange
from ramify.extension import ETALE, invariants
from ramify.parse import parse_base, parse_poly
from ramify.poly import KPoly, MonogenicRing, NPType, elt_val, newton_polygon, np_type_matches, resultant
from ramify.ramification import (conductor, conductor_result, conductor_vs_classical, herbrand_profile,
                                 root_distances, unramified_base_change)
from ramify.report import build_extension
from ramify.valrat import INF

F2 = "laurent(p=2)"
F2U = "laurent(p=2, k=Fp(u))"


def test_resultant_identities():
    K = parse_base(F2)
    f = parse_poly("X^2+t*X+t", K)
    assert resultant(f, KPoly(K, (K.t(),))) == K.t(2)
    g = parse_poly("X^3+t*X+1", K)
    lin = parse_poly("X-t^2", K)
    assert resultant(lin, g) == g.evaluate(K.t(2))


def test_valuations_in_the_ring_of_integers():
    K = parse_base(F2)
    R = MonogenicRing(parse_poly("X^2+t*X+t", K))
    z = R.gen()
    assert elt_val(z) == Fraction(1, 2)
    assert elt_val(R.one()) == 0
    assert elt_val(z.scale(K.t())) == Fraction(3, 2)


def test_newton_polygon_shapes():
    K = parse_base(F2)
    np = newton_polygon(parse_poly("X^2+t*X+t", K))
    assert np.slopes == ((Fraction(1, 2), 2),)
    assert np_type_matches(np, NPType((0, 2))) and np_type_matches(np, NPType((0, 1, 2)))
    np = newton_polygon(parse_poly("X^2+t*X", K))
    assert np.slopes == ((Fraction(1), 1), (INF, 1))
    np = newton_polygon(parse_poly("X^3+t*X+t", K))
    assert np.slopes == ((Fraction(1, 3), 3),) and np_type_matches(np, NPType((0, 3)))
    assert newton_polygon(parse_poly("X-t^3", K)).slopes == ((Fraction(3), 1),)


@pytest.mark.parametrize("base,poly,dists,c", [
    (F2, "X^2+t*X+t", [1], 2),
    ("laurent(p=3)", "X^2-t", [Fraction(1, 2)], 1),
    (F2U, "X^2+t*X+u", [1], 2),
    (F2U, "X^2+X+u", [0], 0),
])
def test_distances_and_conductor(base, poly, dists, c):
    ext = build_extension(base, [poly])
    assert list(root_distances(ext).distances) == dists
    assert conductor(ext) == c
    prof = component_profile(root_distances(ext).distances)
    assert conductor_from_profile(prof) == c


def test_herbrand_function_of_artin_schreier():
    hp = herbrand_profile(build_extension(F2, ["X^2+t*X+t"]))
    assert hp.i_values == (2,)
    for u in (Fraction(-1), Fraction(1, 3), Fraction(1)):
        assert hp.phi(u) == u
    for u in (Fraction(2), Fraction(7, 2)):
        assert hp.phi(u) == 1 + (u - 1) / 2


def test_herbrand_tame_and_etale():
    tame = herbrand_profile(build_extension("laurent(p=3)", ["X^2-t"]))
    assert tame.lower_breaks == (0,) and tame.upper_breaks == (0,)
    etale = build_extension(F2U, ["X^2+X+u"])
    hp = herbrand_profile(etale)
    assert hp.lower_breaks == (-1,) and hp.phi(5) == 5
    assert conductor_vs_classical(etale)


def test_log_conductor_of_tame_is_trivial():
    lc = conductor_result(build_extension("laurent(p=3)", ["X^2-t"])).c_log
    assert lc.kind == "exact" and lc.value == 0


def test_discriminants():
    assert invariants(build_extension("laurent(p=3)", ["X^2-t"])).discriminant_vK == 1
    inv = invariants(build_extension(F2U, ["X^2+X+u"]))
    assert inv.discriminant_vK == 0 and inv.cls == ETALE


def test_unramified_base_change_edge_cases():
    etale = build_extension(F2, ["X^3+X+1"])
    new = unramified_base_change(etale, build_extension(F2, ["X^2+X+1"]))
    assert conductor(new) == 0
    selfish = build_extension(F2U, ["X^2+X+u"])
    with pytest.raises(SplitsAfterBaseChange) as info:
        unramified_base_change(selfish, selfish)
    assert len(info.value.factors) == 2
