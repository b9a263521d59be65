import itertools

import pytest
from hypothesis import given, strategies as st

from bhcurve.errors import NotAPrimePower, NotPrime, ReducibleModulus
from bhcurve.field import (
    enumerate_field,
    extension,
    gf,
    is_irreducible_mod_p,
    make_field,
    power,
    prime_power,
    subfield_test,
)

SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 81]


def test_f9_modulus_x2_plus_1():
    K = make_field(3, 2, "x^2+1")
    a = K.gen
    assert a * a == -1
    assert K.modulus == (1, 0, 1)


def test_f9_default_is_x2_plus_1():
    assert make_field(3, 2).modulus == (1, 0, 1)


def test_f25_sqrt2():
    K = make_field(5, 2, "x^2-2")
    assert K.gen * K.gen == 2


def test_f2_elements():
    K = make_field(2)
    assert [e.code for e in K.elements()] == [0, 1]


def test_power_examples():
    K = make_field(3, 2, "x^2+1")
    a = K.gen
    assert power(a, 3) == a * 2
    assert power(a, 0) == 1
    for e in K.elements():
        if subfield_test(e, 3):
            assert power(e, 3) == e


def test_subfield_examples():
    K = make_field(3, 2, "x^2+1")
    assert len(enumerate_field(K)) == 9
    assert not subfield_test(K.gen, 3)
    assert sum(subfield_test(e, 3) for e in K.elements()) == 3


def test_bad_inputs():
    with pytest.raises(NotPrime):
        make_field(6)
    with pytest.raises(NotAPrimePower):
        prime_power(12)
    with pytest.raises(ReducibleModulus):
        make_field(3, 2, "x^2+2")  # (x+1)(x+2)


def test_parse_format_roundtrip():
    K = make_field(5, 2, "x^2-2")
    for c in K.codes():
        assert K.parse(K.format(c)).code == c
    assert K.format(K.parse("2*a+1").code) == "2*a+1"


def test_irreducibility_against_root_search():
    # degree 2 and 3: irreducible iff no root in F_p
    for p in (2, 3, 5):
        for deg in (2, 3):
            for tail in itertools.product(range(p), repeat=deg):
                f = tuple(tail) + (1,)
                has_root = any(sum(c * x**i for i, c in enumerate(f)) % p == 0 for x in range(p))
                assert is_irreducible_mod_p(f, p) == (not has_root)


@pytest.mark.parametrize("order", SMALL_ORDERS)
def test_fermat_fixed_point(order):
    K = gf(order)
    assert all(power(e, order) == e for e in K.elements())


@pytest.mark.parametrize("order", [o for o in SMALL_ORDERS if o <= 81])
def test_frobenius_is_ring_map_exhaustive(order):
    K = gf(order)
    p = K.p
    fr = [K.pow(c, p) for c in K.codes()]
    for a in K.codes():
        for b in K.codes():
            assert fr[K.add(a, b)] == K.add(fr[a], fr[b])
            assert fr[K.mul(a, b)] == K.mul(fr[a], fr[b])


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_subfield_count(q):
    K = extension(q, 2)
    assert sum(subfield_test(e, q) for e in K.elements()) == q


def test_construction_deterministic():
    a = make_field(3, 4)
    b = make_field(3, 4, a.modulus)
    assert a is b
    assert [a.format(c) for c in a.codes()] == [b.format(c) for c in b.codes()]


@given(st.sampled_from(SMALL_ORDERS), st.data())
def test_field_axioms(order, data):
    K = gf(order)
    x, y, z = (data.draw(st.integers(0, order - 1)) for _ in range(3))
    assert K.mul(x, K.add(y, z)) == K.add(K.mul(x, y), K.mul(x, z))
    assert K.add(K.sub(x, y), y) == x
    if y:
        assert K.mul(K.div(x, y), y) == x


@given(st.sampled_from([4, 8, 9, 16, 25, 27]), st.data())
def test_embedding_is_ring_map(order, data):
    K = gf(order)
    L = extension(order, 2)
    emb = K.embedding_into(L)
    x, y = (data.draw(st.integers(0, order - 1)) for _ in range(2))
    assert emb(K.add(x, y)) == L.add(emb(x), emb(y))
    assert emb(K.mul(x, y)) == L.mul(emb(x), emb(y))
