import pytest
from hypothesis import given, strategies as st

from bhcurve.curve import (
    Line,
    bh_parametrization,
    conic_form,
    coxeter_model_check,
    defining_form,
    dual_conic_check,
    inflection_points,
    line_meet_curve,
    nodes,
    perturbed_form,
    plane_singular_points,
    tangent_line,
    tangent_line_formula,
    tangent_trichotomy,
    verify_on_curve,
)
from bhcurve.errors import FieldTooSmall, NotAPrimePower, SearchFieldTooSmall
from bhcurve.field import extension, make_field
from bhcurve.poly import AT_INFINITY

QS = [2, 4, 8, 16, 3, 9, 27, 5, 25, 7]


@pytest.mark.parametrize("q", QS)
def test_defining_identity(q):
    assert verify_on_curve(q)


@pytest.mark.parametrize("q", [2, 3, 9])
def test_perturbed_form_fails(q):
    assert not verify_on_curve(q, perturbed_form(defining_form(q)))


def test_not_a_prime_power():
    with pytest.raises(NotAPrimePower):
        verify_on_curve(6)


@pytest.mark.parametrize("q", QS)
def test_node_count(q):
    assert len(nodes(q)) == (q * q - q) // 2


def test_q3_node_images():
    K = make_field(3, 2)
    got = [str(nd.point) for nd in nodes(3, K)]
    assert got == ["[1:1:0]", "[1:2:1]", "[1:2:2]"]


def test_nodes_need_fq2():
    with pytest.raises(FieldTooSmall):
        nodes(3, make_field(3))


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_node_params_partition(q):
    K = extension(q, 2)
    phi = bh_parametrization(q, K)
    params = [t for nd in nodes(q, K) for t in nd.params]
    fq = K.subfield_codes(q)
    assert len(params) == len(set(params))
    assert sorted(params + list(fq)) == list(K.codes())
    for t in K.codes():
        assert phi.image(t) == phi.image(K.pow(t, q))


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_nodes_match_exhaustive_scan(q):
    K = extension(q, 2)
    brute = sorted(plane_singular_points(defining_form(q, K)), key=lambda p: p.coords)
    assert brute == [nd.point for nd in nodes(q, K)]


def test_tangent_examples():
    K = make_field(3, 2, "x^2+1")
    assert tangent_line(0, 3, K) == Line.make(K, (0, 1, 0))
    assert tangent_line(1, 3, K) == Line.make(K, (1, 1, K.neg(1)))
    a = K.gen.code
    assert tangent_line(a, 3, K) == Line.make(K, (K.neg(1), 1, a))
    assert tangent_line(AT_INFINITY, 3, K) == Line.make(K, (1, 0, 0))


@pytest.mark.parametrize("q,n", [(2, 3), (3, 4)])
def test_inflection_points(q, n):
    pts = inflection_points(q)
    assert len(pts) == n
    K = extension(q, 1)
    for t in list(K.codes()) + [AT_INFINITY]:
        meet = line_meet_curve(tangent_line(t, q, K), q)
        assert [m.multiplicity for m in meet] == [q + 1]


@pytest.mark.parametrize("q", QS)
def test_dual_conic(q):
    assert dual_conic_check(q)


def test_dual_conic_perturbed():
    K = make_field(5)
    assert not dual_conic_check(5, conic_form(K, (1, 1)))


@pytest.mark.parametrize("q", QS)
def test_line_model(q):
    assert coxeter_model_check(q)


def test_search_field_too_small():
    K = make_field(3)
    with pytest.raises(SearchFieldTooSmall):
        line_meet_curve(Line.make(K, (K.neg(1), 1, 0)), 3, K)


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_trichotomy(q):
    for k in (3, 4):
        rep = tangent_trichotomy(q, k)
        assert rep.ok, rep.failures
        assert rep.counts["F_q"] == q + 1


@given(st.sampled_from([2, 3, 4, 5, 7]), st.data())
def test_tangent_meets_sum_to_degree(q, data):
    K = extension(q, 4)
    t = data.draw(st.integers(0, K.order - 1))
    line = tangent_line(t, q, K)
    assert line == tangent_line_formula(t, q, K)
    meet = line_meet_curve(line, q, K)
    assert sum(m.multiplicity for m in meet) == q + 1
    node_pts = {nd.point for nd in nodes(q, K)}
    in_fq2 = K.pow(t, q * q) == t
    in_fq = K.pow(t, q) == t
    if in_fq or not in_fq2:
        assert not node_pts & {m.point for m in meet}
    else:
        assert {m.point for m in meet} <= node_pts
