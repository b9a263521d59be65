"""PGL_2(F_q) acting on B through the symmetric-square lift.

g = (a, b; c, d) acts on P^1 by [s:t] -> [a s + b t : c s + d t], and lifts to

    [[a^2,  b^2,  ab   ],
     [c^2,  d^2,  cd   ],
     [2ac,  2bd,  ad+bc]]

on P^2.  All matrices live over the host field K = F_{q^2}, with entries in the
subfield F_q, so the same K also carries the node coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .curve import (
    ProjPoint,
    _pp,
    bh_parametrization,
    defining_expression,
    defining_form,
    host_field,
    inflection_points,
    nodes,
)
from .errors import ExhaustionBoundExceeded, SingularInput
from .field import Field
from .poly import HomogForm, MPoly, linear_form


def _canon(K: Field, entries: Sequence[int]) -> tuple[int, ...]:
    for c in entries:
        if c:
            inv = K.inv(c)
            return tuple(K.mul(x, inv) for x in entries)
    raise SingularInput("zero matrix")


def _det2(K, m):
    a, b, c, d = m
    return K.sub(K.mul(a, d), K.mul(b, c))


def _det3(K, m):
    a = [m[0:3], m[3:6], m[6:9]]
    acc = 0
    for j in range(3):
        minor = K.sub(
            K.mul(a[1][(j + 1) % 3], a[2][(j + 2) % 3]),
            K.mul(a[1][(j + 2) % 3], a[2][(j + 1) % 3]),
        )
        acc = K.add(acc, K.mul(a[0][j], minor))
    return acc


@dataclass(frozen=True)
class Pgl2Elem:
    """(a, b; c, d) up to scalar, first nonzero entry 1."""

    field: Field
    entries: tuple[int, int, int, int]

    @classmethod
    def make(cls, field: Field, entries) -> "Pgl2Elem":
        e = tuple(int(x) for x in entries)
        if _det2(field, e) == 0:
            raise SingularInput("determinant is zero")
        return cls(field, _canon(field, e))

    def __mul__(self, other: "Pgl2Elem") -> "Pgl2Elem":
        return Pgl2Elem.make(self.field, _matmul(self.field, self.entries, other.entries, 2))

    def act(self, s: int, t: int) -> tuple[int, int]:
        K = self.field
        a, b, c, d = self.entries
        return (K.add(K.mul(a, s), K.mul(b, t)), K.add(K.mul(c, s), K.mul(d, t)))

    def __str__(self):
        f = self.field.format
        a, b, c, d = self.entries
        return f"[[{f(a)}, {f(b)}], [{f(c)}, {f(d)}]]"


@dataclass(frozen=True)
class Pgl3Elem:
    """A 3x3 matrix (row-major) up to scalar, first nonzero entry 1."""

    field: Field
    entries: tuple[int, ...]

    @classmethod
    def make(cls, field: Field, entries) -> "Pgl3Elem":
        e = tuple(int(x) for x in entries)
        if len(e) != 9:
            raise ValueError("need 9 entries")
        if _det3(field, e) == 0:
            raise SingularInput("determinant is zero")
        return cls(field, _canon(field, e))

    @classmethod
    def raw(cls, field: Field, entries) -> "Pgl3Elem":
        """Unnormalized matrix (used for deliberately corrupted lifts)."""
        return cls(field, tuple(int(x) for x in entries))

    def __mul__(self, other: "Pgl3Elem") -> "Pgl3Elem":
        return Pgl3Elem.make(self.field, _matmul(self.field, self.entries, other.entries, 3))

    def apply(self, pt: ProjPoint) -> ProjPoint:
        K = self.field
        m = self.entries
        out = []
        for r in range(3):
            acc = 0
            for j in range(3):
                acc = K.add(acc, K.mul(m[3 * r + j], pt.coords[j]))
            out.append(acc)
        return ProjPoint.make(K, out)

    def rows(self) -> list[list[int]]:
        return [list(self.entries[3 * r : 3 * r + 3]) for r in range(3)]

    def __str__(self):
        f = self.field.format
        return "[" + ", ".join("[" + ", ".join(f(x) for x in row) + "]" for row in self.rows()) + "]"


def _matmul(K, a, b, n):
    out = []
    for r in range(n):
        for c in range(n):
            acc = 0
            for k in range(n):
                acc = K.add(acc, K.mul(a[n * r + k], b[n * k + c]))
            out.append(acc)
    return out


def lift_entries(K: Field, g: Sequence[int]) -> list[int]:
    a, b, c, d = g
    m = K.mul
    two = 2 % K.p
    return [
        m(a, a), m(b, b), m(a, b),
        m(c, c), m(d, d), m(c, d),
        m(two, m(a, c)), m(two, m(b, d)), K.add(m(a, d), m(b, c)),
    ]  # fmt: skip


def lift(g: Pgl2Elem) -> Pgl3Elem:
    """The symmetric-square lift of g."""
    K = g.field
    if _det2(K, g.entries) == 0:
        raise SingularInput("determinant is zero")
    return Pgl3Elem.make(K, lift_entries(K, g.entries))


def corrupt_lift(g: Pgl2Elem) -> Pgl3Elem:
    """The lift with the 2ac entry shifted by 1: a mutation witness."""
    K = g.field
    e = lift_entries(K, g.entries)
    e[6] = K.add(e[6], 1)
    return Pgl3Elem.raw(K, e)


def pgl2_elements(q, field: Field | None = None) -> list[Pgl2Elem]:
    """All q^3 - q canonical elements of PGL_2(F_q), in code order."""
    pp = _pp(q)
    K = host_field(pp.q, field, 2)
    sub = K.subfield_codes(pp.q)
    out = []
    for a in sub:
        for b in sub:
            for c in sub:
                for d in sub:
                    e = (a, b, c, d)
                    if _det2(K, e) and _canon(K, e) == e:
                        out.append(Pgl2Elem(K, e))
    return out


def sample_elements(q, n: int, seed: int, field: Field | None = None) -> list[Pgl2Elem]:
    """n elements of PGL_2(F_q) drawn with a seeded RNG (with replacement)."""
    pp = _pp(q)
    K = host_field(pp.q, field, 2)
    sub = K.subfield_codes(pp.q)
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        e = [rng.choice(sub) for _ in range(4)]
        if _det2(K, e):
            out.append(Pgl2Elem.make(K, e))
    return out


# -----------------------------------------------------------------------------
# checks
# -----------------------------------------------------------------------------


def _proportional(K: Field, xs: Sequence[MPoly], ys: Sequence[MPoly]) -> bool:
    """xs == lam * ys for one nonzero scalar lam."""
    lam = None
    for x, y in zip(xs, ys):
        if set(x.terms) != set(y.terms):
            return False
        for e, c in y.terms.items():
            r = K.div(x.terms[e], c)
            if lam is None:
                lam = r
            elif r != lam:
                return False
    return lam is not None and lam != 0


def equivariance_check(g: Pgl2Elem, gt: Pgl3Elem | None = None, q=None) -> bool:
    """phi o g == gt o phi as triples of binary forms, up to one common scalar."""
    K = g.field
    Q = _pp(q).q if q is not None else _infer_q(K)
    gt = lift(g) if gt is None else gt
    phi = bh_parametrization(Q, K)
    s = MPoly.var(K, 2, 0)
    t = MPoly.var(K, 2, 1)
    a, b, c, d = g.entries
    u = s.scale(a) + t.scale(b)
    v = s.scale(c) + t.scale(d)
    left = [u ** (Q + 1), v ** (Q + 1), u * v**Q + u**Q * v]
    coords = [MPoly(K, 2, x.terms) for x in phi.coords]
    right = []
    for r in range(3):
        acc = MPoly(K, 2)
        for j in range(3):
            acc = acc + coords[j].scale(gt.entries[3 * r + j])
        right.append(acc)
    return _proportional(K, left, right)


def _infer_q(K: Field) -> int:
    # host field is F_{q^2}
    return K.p ** (K.n // 2)


def substituted_form(gt: Pgl3Elem, q) -> HomogForm:
    """F(gt x), evaluated through the defining expression on linear forms."""
    K = gt.field
    rows = [linear_form(K, gt.entries[3 * r : 3 * r + 3]) for r in range(3)]
    return defining_expression(q, *rows)


def preserves_curve_check(gt: Pgl3Elem, q, return_scalar: bool = False):
    """True iff F(gt x) == lam * F(x) for a nonzero scalar lam."""
    K = gt.field
    F = defining_form(q, K)
    G = substituted_form(gt, q)
    lam = G.proportional_to(F) if isinstance(G, HomogForm) else None
    ok = lam is not None and lam != 0
    if return_scalar:
        return ok, lam
    return ok


def random_pgl3(K: Field, rng: random.Random, entries_from: Sequence[int] | None = None) -> Pgl3Elem:
    pool = list(entries_from) if entries_from is not None else list(range(K.order))
    while True:
        e = [rng.choice(pool) for _ in range(9)]
        if _det3(K, e):
            return Pgl3Elem.make(K, e)


# -----------------------------------------------------------------------------
# exhaustive audit
# -----------------------------------------------------------------------------


@lru_cache(maxsize=16)
def _np_tables(K: Field):
    Q = K.order
    add = np.zeros((Q, Q), dtype=np.int64)
    mul = np.zeros((Q, Q), dtype=np.int64)
    for a in range(Q):
        for b in range(Q):
            add[a, b] = K.add(a, b)
            mul[a, b] = K.mul(a, b)
    inv = np.zeros(Q, dtype=np.int64)
    for a in range(1, Q):
        inv[a] = K.inv(a)
    return add, mul, inv


def _np_matmul(K, A, B, n):
    """Products A[i] @ B[j] for all i, j: shape (len(A), len(B), n*n)."""
    add, mul, _ = _np_tables(K)
    A = A.reshape(-1, 1, n, n)
    B = B.reshape(1, -1, n, n)
    out = np.zeros((A.shape[0], B.shape[1], n, n), dtype=np.int64)
    for k in range(n):
        term = mul[A[:, :, :, k][:, :, :, None], B[:, :, k, :][:, :, None, :]]
        out = add[out, term]
    return out.reshape(A.shape[0], B.shape[1], n * n)


def _np_canon(K, M):
    """Scale each row-major matrix (last axis) so its first nonzero entry is 1."""
    _, mul, inv = _np_tables(K)
    first = np.argmax(M != 0, axis=-1)
    lead = np.take_along_axis(M, first[..., None], axis=-1)
    return mul[M, inv[lead]]


def _np_keys(K, M):
    Q = K.order
    weights = Q ** np.arange(M.shape[-1], dtype=np.int64)
    return (M * weights).sum(axis=-1)


@dataclass
class AuditReport:
    q: int
    order: int
    expected_order: int
    injective: bool
    homomorphism: bool
    equivariant: bool
    preserves_curve: bool
    permutes_inflections: bool
    permutes_nodes: bool
    pairs_checked: int

    @property
    def ok(self) -> bool:
        return (
            self.order == self.expected_order
            and self.injective
            and self.homomorphism
            and self.equivariant
            and self.preserves_curve
            and self.permutes_inflections
            and self.permutes_nodes
        )


def group_audit(q, bound: int = 9, field: Field | None = None) -> AuditReport:
    """Exhaustive check of the lift over all of PGL_2(F_q).

    The homomorphism property is checked on all |G|^2 pairs with numpy table
    lookups; everything else element by element.
    """
    pp = _pp(q)
    Q = pp.q
    if Q > bound:
        raise ExhaustionBoundExceeded(f"q = {Q} exceeds the exhaustion bound {bound}")
    K = host_field(Q, field, 2)
    G = pgl2_elements(Q, K)
    L = [lift(g) for g in G]
    n = len(G)

    A2 = np.array([g.entries for g in G], dtype=np.int64)
    A3 = np.array([x.entries for x in L], dtype=np.int64)
    key2 = {int(k): i for i, k in enumerate(_np_keys(K, A2))}
    key3 = _np_keys(K, A3)
    injective = len(set(key3.tolist())) == n and len(key2) == n

    homomorphism = True
    block = max(1, 40000 // n)
    for start in range(0, n, block):
        P2 = _np_canon(K, _np_matmul(K, A2[start : start + block], A2, 2))
        idx = np.vectorize(key2.__getitem__)(_np_keys(K, P2))
        P3 = _np_canon(K, _np_matmul(K, A3[start : start + block], A3, 3))
        if not np.array_equal(_np_keys(K, P3), key3[idx]):
            homomorphism = False
            break

    equivariant = all(equivariance_check(g, x, Q) for g, x in zip(G, L))
    preserves = all(preserves_curve_check(x, Q) for x in L)

    infl = set(inflection_points(Q, K))
    node_pts = {nd.point for nd in nodes(Q, K)}
    perm_i = all({x.apply(p) for p in infl} == infl for x in L)
    perm_n = all({x.apply(p) for p in node_pts} == node_pts for x in L)
    return AuditReport(
        q=Q,
        order=n,
        expected_order=Q**3 - Q,
        injective=injective,
        homomorphism=homomorphism,
        equivariant=equivariant,
        preserves_curve=preserves,
        permutes_inflections=perm_i,
        permutes_nodes=perm_n,
        pairs_checked=n * n,
    )
