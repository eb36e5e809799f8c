import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import disc_components, random_ultrametric, sample_points
from ramify.components import (ComponentProfile, HomogeneousAssumptionUnverifiable, check_profile_laws,
                               component_profile, conductor_from_profile, profile_samples)
from ramify.errors import IncompleteSplitting, LawViolation, NotRepresentable, NotUltrametric


@st.composite
def ultrametric(draw):
    seed = draw(st.integers(0, 10**6))
    n = draw(st.integers(1, 4))
    return random_ultrametric(random.Random(seed), n)


@given(ultrametric())
def test_profile_matches_disc_oracle(D):
    prof = component_profile(D)
    check_profile_laws(prof)
    for r in sample_points(D):
        assert prof.count(r) == disc_components(D, r)


@given(ultrametric(), st.randoms(use_true_random=False))
def test_profile_is_permutation_invariant(D, rnd):
    n = len(D)
    perm = list(range(n))
    rnd.shuffle(perm)
    P = [[D[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    assert component_profile(P) == component_profile(D)


def test_worked_profiles():
    # degree 2, roots at distance 1: X^r splits once r > 2
    p = component_profile([1])
    assert (p.jumps, p.counts) == ((Fraction(2),), (1, 2))
    assert p.count(2) == 1 and p.count(Fraction(201, 100)) == 2
    assert component_profile([]).counts == (1,)
    # unramified of degree 2: split from the start
    assert component_profile([0]).jumps == (Fraction(0),)


def test_homogeneous_distances_agree_with_full_matrix():
    # four roots in two pairs: within a pair distance 2, across pairs 1
    D = [[None, 2, 1, 1], [2, None, 1, 1], [1, 1, None, 2], [1, 1, 2, None]]
    assert component_profile([1, 1, 2]) == component_profile(D)


def test_inconsistent_distances_fall_back_with_a_warning():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        prof = component_profile([1, 2])
    assert any(issubclass(w.category, HomogeneousAssumptionUnverifiable) for w in caught)
    check_profile_laws(prof)
    assert prof.counts[-1] == 3


def test_matrix_validation():
    with pytest.raises(NotUltrametric):
        component_profile([[None, 1, 2], [1, None, 3], [2, 3, None]])
    with pytest.raises(NotUltrametric):
        component_profile([[None, 1], [2, None]])


def test_float_jumps_are_rejected():
    with pytest.raises(NotRepresentable):
        ComponentProfile((0.5,), (1, 2), 2)


def test_law_violation_is_named():
    bad = ComponentProfile((Fraction(1), Fraction(2)), (1, 3, 2), 3)
    with pytest.raises(LawViolation) as info:
        check_profile_laws(bad)
    assert info.value.law == "monotone"


def test_conductor_needs_full_splitting():
    prof = component_profile([1])
    assert conductor_from_profile(prof) == 2
    with pytest.raises(IncompleteSplitting):
        conductor_from_profile(prof, d=4)


def test_samples_cover_jumps_and_gaps():
    prof = component_profile([1, 1, 2])
    rs = [r for r, _ in profile_samples(prof)]
    assert set(prof.jumps) <= set(rs)
    assert min(rs) < prof.jumps[0] and max(rs) > prof.jumps[-1]
