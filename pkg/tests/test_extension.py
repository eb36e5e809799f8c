from fractions import Fraction

import pytest

from oracles import artin_schreier_m1, kummer_tame
from ramify.corpus import full_corpus
from ramify.errors import (FieldMismatch, HintRequired, Inseparable, NotEisenstein, NotFierce,
                           ReducibleResidue)
from ramify.extension import (EISENSTEIN, ETALE, FIERCE, TAME, UNIT, WILD,
                              eliminate_fierce_fully, eliminate_fierce_step, invariants, make_extension,
                              make_step, step_different)
from ramify.parse import parse_base, parse_poly
from ramify.poly import resultant
from ramify.report import build_extension


@pytest.mark.parametrize("p", [2, 3, 5])
def test_artin_schreier_matches_hilbert_formula(p):
    o = artin_schreier_m1(p)
    inv = invariants(build_extension(f"laurent(p={p})", [o["poly"]]))
    assert (inv.e, inv.different_vL, inv.discriminant_vK, inv.cls) == (
        o["e"], o["different"], o["discriminant"], WILD)


@pytest.mark.parametrize("n,p", [(2, 3), (3, 2), (4, 3), (5, 2), (2, 5)])
def test_tame_radicals(n, p):
    o = kummer_tame(n)
    inv = invariants(build_extension(f"laurent(p={p})", [o["poly"]]))
    assert inv.different_vL == o["different"] == inv.e - 1
    assert inv.cls == TAME


def test_unramified_and_fierce_classes():
    assert invariants(build_extension("laurent(p=2)", ["X^2+X+1"])).cls == ETALE
    inv = invariants(build_extension("laurent(p=2, k=Fp(u))", ["X^2+t*X+u"]))
    assert (inv.e, inv.f_res, inv.s_L, inv.different_vL, inv.cls) == (1, 2, 1, 1, FIERCE)


def test_tower_composition():
    # unramified F_4 then Artin-Schreier: different unchanged, discriminant scaled by f
    inv = invariants(build_extension("laurent(p=2)", ["X^2+X+1", "Y^2+t*Y+t"]))
    assert (inv.degree, inv.e, inv.different_vL, inv.discriminant_vK) == (4, 2, 2, 4)
    # fierce step (different 1, e 1) then a wild step of different 2 over it
    inv = invariants(build_extension("laurent(p=2, k=Fp(u))", ["X^2+t*X+u", "Y^2+t*Y+t"]))
    assert (inv.different_vL, inv.discriminant_vK, inv.cls) == (4, 8, FIERCE)


@pytest.mark.parametrize("base,poly", full_corpus()[:40])
def test_discriminant_is_norm_of_different(base, poly):
    ext = build_extension(base, [poly])
    st = ext.single()
    v_res = resultant(st.poly, st.poly.derivative()).valuation()
    assert Fraction(v_res) == step_different(st) / st.e * st.degree


def test_validation_errors():
    K = parse_base("laurent(p=2)")
    with pytest.raises(NotEisenstein):
        make_step(EISENSTEIN, parse_poly("X^2+X+t", K))
    with pytest.raises(ReducibleResidue):
        make_step(UNIT, parse_poly("X^2+X", K))
    with pytest.raises(Inseparable):
        make_step(EISENSTEIN, parse_poly("X^2+t", K))
    K3 = parse_base("laurent(p=3)")
    with pytest.raises(FieldMismatch):
        make_extension(K, [(None, parse_poly("X^2-t", K3))])


def test_defierce_single_round_drop():
    ext = build_extension("laurent(p=2, k=Fp(u))", ["X^2+t*X+u"])
    trace = eliminate_fierce_fully(ext)
    assert len(trace) == 1
    assert trace[0].before == (Fraction(2), 1) and trace[0].after == (Fraction(0), 0)
    assert trace[0].new_ext.steps == ()


def test_defierce_residual_shift_becomes_eisenstein():
    ext = build_extension("laurent(p=3, k=Fp(u))", ["X^3+t*X+u"])
    rnd = eliminate_fierce_step(ext)
    assert rnd.new_ext.single().kind == EISENSTEIN
    assert rnd.before == (Fraction(3), 1) and rnd.after == (Fraction(3), 0)
    assert invariants(rnd.new_ext).cls == WILD


def test_defierce_tower_first_step_is_the_lift():
    ext = build_extension("laurent(p=2, k=Fp(u))", ["X^2+t*X+u", "Y^2+t*Y+t"])
    (rnd,) = eliminate_fierce_fully(ext)
    assert rnd.before == (Fraction(8), 1) and rnd.after == (Fraction(2), 0)


def test_defierce_rejects_unfierce_and_needs_hints():
    with pytest.raises(NotFierce):
        eliminate_fierce_step(build_extension("laurent(p=2)", ["X^2+t*X+t"]))
    # reduction X^4 + u X^2 + u = q(X^2) with q of degree 2: no radicial element to read off
    ext = build_extension("laurent(p=2, k=Fp(u))", ["X^4+u*X^2+t*X+u"])
    assert ext.s_L == 1
    with pytest.raises(HintRequired):
        eliminate_fierce_step(ext)
