import random

import pytest
from hypothesis import given, strategies as st

from bhcurve.aut import (
    Pgl2Elem,
    corrupt_lift,
    equivariance_check,
    group_audit,
    lift,
    pgl2_elements,
    preserves_curve_check,
    random_pgl3,
    sample_elements,
)
from bhcurve.errors import ExhaustionBoundExceeded, SingularInput
from bhcurve.field import extension

ORDERS = {2: 6, 3: 24, 4: 60, 5: 120, 7: 336, 8: 504, 9: 720}


def test_identity_lifts_to_identity():
    K = extension(3, 2)
    g = Pgl2Elem.make(K, (1, 0, 0, 1))
    assert lift(g).rows() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert equivariance_check(g, q=3)
    assert preserves_curve_check(lift(g), 3, return_scalar=True) == (True, 1)


def test_swap_lifts_to_permutation():
    K = extension(5, 2)
    g = Pgl2Elem.make(K, (0, 1, 1, 0))
    assert lift(g).rows() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]


def test_translation_lift_q3():
    K = extension(3, 2)
    g = Pgl2Elem.make(K, (1, 1, 0, 1))
    assert lift(g).rows() == [[1, 1, 1], [0, 1, 0], [0, 2, 1]]


def test_singular_matrix_rejected():
    K = extension(3, 2)
    with pytest.raises(SingularInput):
        Pgl2Elem.make(K, (1, 2, 2, 1))  # det = 1 - 4 = 0 mod 3


def test_all_of_pgl2_f3_equivariant():
    assert all(equivariance_check(g, q=3) for g in pgl2_elements(3))


def test_all_lifts_preserve_curve_q5():
    assert all(preserves_curve_check(lift(g), 5) for g in pgl2_elements(5))


@pytest.mark.parametrize("q", [3, 5, 7])
def test_corrupted_lift_fails(q):
    for g in sample_elements(q, 10, seed=1):
        assert not equivariance_check(g, corrupt_lift(g), q)


def test_random_pgl3_rejected():
    K = extension(5, 2)
    rng = random.Random(7)
    gts = [random_pgl3(K, rng) for _ in range(5)]
    assert not any(preserves_curve_check(gt, 5) for gt in gts)


@pytest.mark.parametrize("q", sorted(ORDERS))
def test_group_audit(q):
    rep = group_audit(q)
    assert rep.order == ORDERS[q] == q**3 - q
    assert rep.ok, rep


def test_audit_bound():
    with pytest.raises(ExhaustionBoundExceeded):
        group_audit(11)


@pytest.mark.parametrize("q", [11, 13, 16])
def test_sampled_large_q(q):
    for g in sample_elements(q, 500, seed=0):
        assert equivariance_check(g, q=q)
        assert preserves_curve_check(lift(g), q)


@given(st.sampled_from([3, 4, 5, 7]), st.data())
def test_lift_homomorphism_sampled(q, data):
    G = pgl2_elements(q)
    g = data.draw(st.sampled_from(G))
    h = data.draw(st.sampled_from(G))
    assert lift(g) * lift(h) == lift(g * h)
