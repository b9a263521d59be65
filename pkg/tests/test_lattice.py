import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bhcurve.errors import NotMinusPPower
from bhcurve.field import make_field
from bhcurve.lattice import (
    QUARTIC_GRAM,
    QUARTIC_LABELS,
    SEXTIC_GRAM,
    SEXTIC_LABELS,
    GramMatrix,
    ambient_meet,
    artin_sigma,
    bareiss_det,
    gram_assemble,
    inertia,
    lattice_invariants,
    quartic_config,
    sextic_config,
)
from bhcurve.lattice.configs import SEXTIC_CURVE_6_MISREAD, sextic_curve


@pytest.fixture(scope="module")
def quartic():
    return quartic_config()


@pytest.fixture(scope="module")
def sextic():
    return sextic_config()


def fraction_det(M):
    A = [[Fraction(x) for x in row] for row in M]
    n, det = len(A), Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            det = -det
        det *= A[k][k]
        for i in range(k + 1, n):
            f = A[i][k] / A[k][k]
            A[i] = [a - f * b for a, b in zip(A[i], A[k])]
    return int(det)


# --- integer invariants -------------------------------------------------------


def test_fixture_invariants():
    q = lattice_invariants(QUARTIC_GRAM, 3)
    s = lattice_invariants(SEXTIC_GRAM, 5)
    assert (q.determinant, q.artin_sigma, q.signature) == (-9, 1, (1, 21))
    assert (s.determinant, s.artin_sigma, s.signature) == (-25, 1, (1, 21))


def test_diagonal_minus_two():
    M = [[-2 if i == j else 0 for j in range(22)] for i in range(22)]
    assert bareiss_det(M) == 2**22
    with pytest.raises(NotMinusPPower):
        artin_sigma(bareiss_det(M), 3)


small_int_matrices = st.integers(1, 7).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=n, max_size=n)
)


@given(small_int_matrices)
def test_bareiss_matches_fraction_elimination(M):
    assert bareiss_det(M) == fraction_det(M)


@given(small_int_matrices, st.booleans())
def test_inertia_matches_eigenvalues(M, zero_diag):
    n = len(M)
    S = [[M[i][j] + M[j][i] for j in range(n)] for i in range(n)]
    if zero_diag:
        for i in range(n):
            S[i][i] = 0
    ev = np.linalg.eigvalsh(np.array(S, dtype=float))
    assert inertia(S) == (int((ev > 1e-9).sum()), int((ev < -1e-9).sum()), int((abs(ev) <= 1e-9).sum()))


# --- configurations -----------------------------------------------------------


def test_forty_lines(quartic):
    lines = [c for c in quartic.curves.values() if not c.exceptional]
    assert len(lines) == 40
    assert all(quartic.surface.contains(c) for c in lines)


def test_quartic_zero_line_identity(quartic):
    # x1 = 0 forces w^4 = x2^4, and w = x2 is one of the four roots
    c = quartic["L_{0}^{0}"]
    assert c.plane == (0, 1, 0)
    assert quartic.surface.contains(c)


def test_sextic_curves_on_surface(sextic):
    assert all(sextic.surface.contains(sextic[f"C_{k}"]) for k in range(1, 15))


def test_sextic_curve_6_misreading_is_not_on_surface(sextic):
    c = sextic_curve("C_6?", SEXTIC_CURVE_6_MISREAD)
    assert not sextic.surface.contains(c)


def test_sextic_nodes(sextic):
    S = sextic.surface
    assert len(S.nodes) == 10
    K = S.field
    a = sextic.alpha
    node = next(nd for nd in S.nodes if a in nd.params)
    assert node.coords == (0, 1, 3, 0)
    assert K.mul(a, a) == 2


def test_disjoint_quartic_lines(quartic):
    assert ambient_meet(quartic.surface, quartic["L_{0}^{0}"], quartic["L_{inf}^{1}"]) == []


def test_labels_present(quartic, sextic):
    assert set(QUARTIC_LABELS) <= set(quartic.curves)
    assert set(SEXTIC_LABELS) <= set(sextic.curves)


# --- Gram matrices ------------------------------------------------------------


@pytest.mark.parametrize("case", ["quartic", "sextic"])
def test_computed_equals_table(case, quartic, sextic):
    cfg = quartic if case == "quartic" else sextic
    G = gram_assemble(cfg, "computed")
    R = gram_assemble(cfg, "table_replay")
    assert G.complete and G.rows == R.rows
    n = len(G.rows)
    assert all(G.rows[i][j] == G.rows[j][i] for i in range(n) for j in range(n))
    assert all(G.rows[i][i] == -2 for i in range(n))


def test_sextic_triple_contact(sextic):
    G = gram_assemble(sextic)
    assert G.entry("C_1", "C_2") == 3


@pytest.mark.parametrize(
    "p,mod,build",
    [(3, "x^2+x+2", quartic_config), (3, "x^2+2*x+2", quartic_config), (5, "x^2+2", sextic_config), (5, "x^2+x+1", sextic_config)],
)
def test_alternative_modulus(p, mod, build):
    cfg = build(make_field(p, 2, mod))
    inv = lattice_invariants(gram_assemble(cfg), p)
    assert inv.determinant == -(p**2) and inv.signature == (1, 21) and inv.artin_sigma == 1


def test_quartic_sibling_sums(quartic):
    taus = ["0", "1", "2", "inf"]
    labels = [f"L_{{{t}}}^{{{n}}}" for t in taus for n in range(4)]
    G = gram_assemble(quartic, labels=labels)
    for i, j in itertools.combinations(range(4), 2):
        total = sum(G.rows[4 * i + a][4 * j + b] for a in range(4) for b in range(4))
        assert total == 4


def test_gram_json_roundtrip(quartic):
    G = gram_assemble(quartic, "table_replay")
    back = GramMatrix.from_json(G.to_json())
    assert back.labels == G.labels and back.rows == G.rows
    assert G.to_text().splitlines()[0].startswith("E_{-a}")


def test_table_replay_rejects_other_labels(quartic):
    with pytest.raises(ValueError):
        gram_assemble(quartic, "table_replay", labels=QUARTIC_LABELS[:3])
