import pytest

from bhcurve.cover import (
    build_cover,
    fiber_splitting_check,
    local_normal_form_check,
    projection_degree_check,
    pullback_orders_check,
    sections_meet_over_fq2,
    sections_on_line_check,
    unirationality_check,
)
from bhcurve.curve import defining_form
from bhcurve.errors import NotADivisor, NotRationalOverFq2
from bhcurve.field import extension, make_field
from bhcurve.poly import AT_INFINITY, linear_form


def valid_pairs(qmax=9):
    out = []
    for q in (2, 3, 4, 5, 7, 8, 9):
        if q > qmax:
            continue
        p = [r for r in (2, 3, 5, 7) if q % r == 0][0]
        out += [(q, d) for d in range(2, q + 2) if (q + 1) % d == 0 and d % p]
    return out


def test_quartic_equation():
    K = make_field(3)
    x0, x1, x2 = (linear_form(K, [int(i == j) for j in range(3)]) for i in range(3))
    rhs = (x0**3 * x1 + x0 * x1**3).scale(2) - x2**4 - (x2 * x2 - x1 * x0) ** 2
    assert defining_form(3, K) == rhs
    cv = build_cover(3, 4)
    assert cv.weights == (1, 1, 1, 1)
    assert [s.label for s in cv.singular_points] == ["A_3"] * 3


def test_sextic_double_plane():
    cv = build_cover(5, 2)
    assert cv.weights == (3, 1, 1, 1)
    assert len(cv.singular_points) == 10
    assert {s.label for s in cv.singular_points} == {"A_1"}


def test_q2_cubic_cover():
    assert len(build_cover(2, 3).singular_points) == 1


def test_bad_degree():
    with pytest.raises(NotADivisor):
        build_cover(5, 4)


@pytest.mark.parametrize("q,d", valid_pairs())
def test_singular_points_over_distinct_nodes(q, d):
    cv = build_cover(q, d)
    assert len(cv.singular_points) == (q * q - q) // 2
    assert len({s.node.point for s in cv.singular_points}) == len(cv.singular_points)
    assert all(s.coords[0] == 0 for s in cv.singular_points)
    assert local_normal_form_check(cv)


def test_discriminants():
    assert projection_degree_check(3).discriminant == "y^2 + 2*x"  # y^2 - x over F_3
    assert projection_degree_check(5).discriminant == "y^2 + x"


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_projection_degree(q):
    r = projection_degree_check(q)
    assert r.ok and (r.degree, r.separable_degree, r.inseparable_degree) == (2 * q, 2, q)


@pytest.mark.parametrize("q,d", valid_pairs())
def test_unirationality(q, d):
    r = unirationality_check(q, d)
    assert r.ok and r.telescoping


@pytest.mark.parametrize("q,d", [(3, 4), (5, 2), (5, 3), (7, 4), (9, 5)])
def test_flipped_sign_fails(q, d):
    assert not unirationality_check(q, d, sign=-1).ok


def test_flipped_sign_is_invisible_in_char_2():
    # -1 = 1, so the mutation does not change the formula
    assert unirationality_check(2, 3, sign=-1).ok


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_sections(q):
    assert sections_on_line_check(q)
    assert sections_meet_over_fq2(q)
    ok, orders = pullback_orders_check(q, samples=6, seed=3)
    assert ok and len(orders) == 6


@pytest.mark.parametrize("q,d", [(3, 2), (3, 4), (5, 2), (5, 3), (5, 6)])
def test_fiber_splitting_all_fq2_points(q, d):
    K = extension(q, 2)
    for t in list(K.codes()) + [AT_INFINITY]:
        r = fiber_splitting_check(t, q, d, K)
        assert r.ok and r.components == d


def test_fiber_splitting_examples():
    assert fiber_splitting_check(0, 3, 4).c0 == 1
    K = make_field(5, 2, "x^2-2")
    assert fiber_splitting_check(K.gen.code, 5, 2, K).components == 2


def test_fiber_splitting_rejects_non_fq2_point():
    L = extension(3, 4)
    t = next(c for c in L.codes() if L.pow(c, 9) != c)
    with pytest.raises(NotRationalOverFq2):
        fiber_splitting_check(t, 3, 4, L)
