"""Cyclic covers w^d = F(x0, x1, x2) of the plane branched along B.

The cover lives in weighted projective space P(c, 1, 1, 1) with c = (q+1)/d.
Besides the surface itself this module checks the explicit rational
parametrization of the pulled-back cover over the universal tangent line, and
how each tangent line l_P with P over F_{q^2} splits on the cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
import random

from .curve import (
    NodeRecord,
    bh_parametrization,
    ProjPoint,
    _pp,
    chart_polys,
    defining_form,
    host_field,
    nodes,
    tangent_line,
)
from .errors import NotADivisor, NotRationalOverFq2, VerificationError
from .field import Field, extension, make_field
from .poly import (
    AT_INFINITY,
    HomogForm,
    MPoly,
    RationalExpr,
    UniPoly,
    rational_identity,
    vanishing_order,
)

SURFACE_VARS = ("w", "x0", "x1", "x2")


@dataclass(frozen=True)
class SingularPointRecord:
    coords: tuple[int, int, int, int]  # (w, x0, x1, x2), w = 0
    label: str
    node: NodeRecord

    def text(self, field: Field) -> str:
        return "[" + ":".join(field.format(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class CoverSpec:
    q: int
    d: int
    c: int
    field: Field
    form: HomogForm  # w^d - F(x0, x1, x2), weights (c, 1, 1, 1)
    singular_points: tuple[SingularPointRecord, ...]

    @property
    def weights(self) -> tuple[int, int, int, int]:
        return (self.c, 1, 1, 1)

    def form_text(self) -> str:
        return self.form.format(SURFACE_VARS)

    def equation_text(self) -> str:
        F = defining_form(self.q, self.field)
        return f"w^{self.d} = " + F.format(SURFACE_VARS[1:])


def surface_form(q, d: int, field: Field) -> HomogForm:
    """w^d - F(x) as a weighted form of degree q+1."""
    Q = _pp(q).q
    c = (Q + 1) // d
    F = defining_form(Q, field)
    terms = {(0,) + e: field.neg(v) for e, v in F.terms.items()}
    terms[(d, 0, 0, 0)] = 1
    return HomogForm(field, 4, terms, weights=(c, 1, 1, 1), degree=Q + 1)


def _check_divisor(Q: int, d: int):
    if d <= 1 or (Q + 1) % d:
        raise NotADivisor(f"d = {d} is not a divisor > 1 of q + 1 = {Q + 1}")


def build_cover(q, d: int, field: Field | None = None) -> CoverSpec:
    """The surface w^d = F and its singular points, one A_{d-1} point over each node.

    Singular points must have w = 0 (the w-partial is d w^(d-1) and p does not
    divide d), so they sit over singular points of B.  Each node is checked
    against all four weighted partials, and the A_{d-1} label is certified by the
    local normal form: lowest-order part w^d - lam*u*v with u, v the two
    distinct branch tangents.
    """
    pp = _pp(q)
    Q = pp.q
    _check_divisor(Q, d)
    if gcd(d, pp.p) != 1:
        raise NotADivisor("d must be prime to p")
    K = host_field(Q, field, 2)
    S = surface_form(Q, d, K)
    partials = [S.partial(i) for i in range(4)]
    recs = []
    for nd in nodes(Q, K):
        pt = (0,) + nd.point.coords
        if S(pt) or any(g(pt) for g in partials):
            raise VerificationError(f"{nd.point} does not give a singular point of the cover")
        if nd.cone_factor == 0 or nd.params[0] == nd.params[1]:
            raise VerificationError("tangent cone is not w^d = uv")
        recs.append(SingularPointRecord(pt, f"A_{d - 1}", nd))
    return CoverSpec(Q, d, (Q + 1) // d, K, S, tuple(recs))


def local_normal_form_check(cover: CoverSpec) -> bool:
    """Lowest-order terms of the affine surface equation at each singular point.

    In the chart x0 = 1 with local coordinates (w, u, v) the lowest-degree part
    must be lam*(u - tau^q v)(u - tau v) for d > 2, and w^2 - lam*(...) for d = 2.
    """
    K = cover.field
    f = cover.form.dehomogenize(1)  # variables (w, x1, x2)
    for rec in cover.singular_points:
        nd = rec.node
        tay = f.taylor((0, nd.point.coords[1], nd.point.coords[2]))
        low = tay.low_order()
        if low != 2:
            return False
        quad = tay.homogeneous_part(2)
        tau, tq = nd.params
        target = {
            (0, 2, 0): K.neg(nd.cone_factor),
            (0, 1, 1): K.mul(nd.cone_factor, K.add(tau, tq)),
            (0, 0, 2): K.neg(K.mul(nd.cone_factor, K.mul(tau, tq))),
        }
        if cover.d == 2:
            target[(2, 0, 0)] = 1
        target = {e: v for e, v in target.items() if v}
        if quad.terms != target:
            return False
        if cover.d > 2 and tay.terms.get((cover.d, 0, 0)) != 1:
            return False
    return True


# -----------------------------------------------------------------------------
# the projection M -> P^2
# -----------------------------------------------------------------------------


@dataclass
class ProjectionReport:
    q: int
    t_power_polynomial: str
    discriminant: str
    discriminant_nonzero: bool
    derivative_nonzero: bool
    separable: bool
    degree: int
    separable_degree: int
    inseparable_degree: int

    @property
    def ok(self) -> bool:
        return (
            self.separable
            and self.degree == 2 * self.q
            and self.separable_degree == 2
            and self.inseparable_degree == self.q
        )


def projection_degree_check(q) -> ProjectionReport:
    """x - t^q y + t^(2q) as a quadratic in T = t^q over k(x, y).

    Separability is certified by T-derivative -y != 0 together with a nonzero
    discriminant when p is odd; in characteristic 2 the discriminant collapses to
    y^2 and the derivative alone is the certificate.
    """
    pp = _pp(q)
    Q = pp.q
    K = make_field(pp.p)
    x, y, t = (MPoly.var(K, 3, i) for i in range(3))
    f = x - t**Q * y + t ** (2 * Q)
    if any(e[2] % Q for e in f.terms):
        raise VerificationError("not a polynomial in t^q")
    g = MPoly(K, 3, {(e[0], e[1], e[2] // Q): c for e, c in f.terms.items()})
    coeff = [MPoly(K, 2, {e[:2]: c for e, c in g.terms.items() if e[2] == k}) for k in range(3)]
    c0, c1, c2 = coeff
    if c2 != MPoly.const(K, 2, 1) or g.degree_in(2) != 2:
        raise VerificationError("leading coefficient in T is not 1")
    disc = c1 * c1 - (c2 * c0).scale(4 % pp.p)
    X, Y = MPoly.var(K, 2, 0), MPoly.var(K, 2, 1)
    if disc != Y * Y - X.scale(4 % pp.p):
        raise VerificationError("discriminant is not y^2 - 4x")
    deriv = g.partial(2)
    deriv_nonzero = not deriv.is_zero()
    disc_nonzero = not disc.is_zero()
    separable = deriv_nonzero and (pp.p == 2 or disc_nonzero)
    return ProjectionReport(
        q=Q,
        t_power_polynomial=g.format(("x", "y", "T")),
        discriminant=disc.format(("x", "y")),
        discriminant_nonzero=disc_nonzero,
        derivative_nonzero=deriv_nonzero,
        separable=separable,
        degree=2 * Q,
        separable_degree=2 if separable else 1,
        inseparable_degree=Q,
    )


# -----------------------------------------------------------------------------
# unirationality
# -----------------------------------------------------------------------------


@dataclass
class UnirationalityReport:
    q: int
    d: int
    sign: int
    cover_equation: bool
    telescoping: bool
    second_factor: bool
    on_line: bool

    @property
    def ok(self) -> bool:
        return self.cover_equation and self.telescoping and self.second_factor and self.on_line


def _uni_setup(Q: int, d: int, sign: int):
    K = make_field(_pp(Q).p)
    zt = MPoly.var(K, 2, 0)
    t = MPoly.var(K, 2, 1)
    one = MPoly.const(K, 2, 1)
    Z = zt**d
    a = t**Q + t  # sigma_1 y-coordinate
    b = t ** (Q * Q) + t**Q  # sigma_q y-coordinate
    num = Z * a - b if sign > 0 else Z * a + b
    y = RationalExpr(num, Z - one)
    return K, zt, t, Z, a, b, y, one


def unirationality_check(q, d: int, sign: int = 1) -> UnirationalityReport:
    """The explicit parametrization of the cover over the universal tangent line.

    With y = (z~^d (t^q+t) - (t^(q^2)+t^q)) / (z~^d - 1), x = t^q y - t^(2q) and
    z = z~ (y - t^q - t)^c, check z^d = (y - t^q - t)^q (y - t^(q^2) - t^q) in
    F_p(z~, t).  ``sign = -1`` flips the sign in front of (t^(q^2)+t^q) and is
    expected to fail.
    """
    pp = _pp(q)
    Q = pp.q
    _check_divisor(Q, d)
    c = (Q + 1) // d
    K, zt, t, Z, a, b, y, one = _uni_setup(Q, d, sign)
    r1 = y - a
    r2 = y - b
    z = r1**c * zt
    cover_eq = rational_identity(z**d, r1**Q * r2)
    telescoping = rational_identity(r1, RationalExpr(t - t ** (Q * Q), Z - one))
    second = rational_identity(r2, RationalExpr(Z * (t - t ** (Q * Q)), Z - one))
    x = y * t**Q - t ** (2 * Q)
    on_line = rational_identity(x - y * t**Q + t ** (2 * Q), RationalExpr(MPoly(K, 2)))
    return UnirationalityReport(Q, d, sign, cover_eq, telescoping, second, on_line)


# -----------------------------------------------------------------------------
# sections
# -----------------------------------------------------------------------------


def sections(q, field: Field) -> tuple[tuple[UniPoly, UniPoly], tuple[UniPoly, UniPoly]]:
    """(x, y) coordinates of sigma_1 and sigma_q as polynomials in t."""
    Q = _pp(q).q
    t = UniPoly.x(field)
    s1 = (t ** (Q + 1), t**Q + t)
    sq = (t ** (Q * Q + Q), t ** (Q * Q) + t**Q)
    return s1, sq


def sections_on_line_check(q) -> bool:
    """Both sections satisfy x - t^q y + t^(2q) = 0 and lie on B."""
    pp = _pp(q)
    Q = pp.q
    K = make_field(pp.p)
    t = UniPoly.x(K)
    F = defining_form(Q, K)
    one = UniPoly.const(K, 1)
    for x, y in sections(Q, K):
        if not (x - t**Q * y + t ** (2 * Q)).is_zero():
            return False
        if not F.compose([one, x, y]).is_zero():
            return False
    return True


def sections_meet_over_fq2(q) -> bool:
    """Parameters where the sections meet are exactly P^1(F_{q^2}).

    The y-difference is t^(q^2) - t, which has q^2 distinct roots in F_{q^2};
    the x-difference vanishes at all of them; both sections pass through the
    same point at t = infinity.
    """
    pp = _pp(q)
    Q = pp.q
    K = host_field(Q, None, 2)
    (x1, y1), (x2, y2) = sections(Q, K)
    dy = y2 - y1
    dx = x2 - x1
    roots = [u for u in range(K.order) if dy(u) == 0]
    if len(roots) != dy.degree:
        return False
    if any(dx(u) for u in roots):
        return False
    return set(roots) == set(K.subfield_codes(Q * Q))


def line_restriction(q, t0: int, field: Field) -> UniPoly:
    """F(1, t0^q y - t0^(2q), y) as a polynomial in y."""
    Q = _pp(q).q
    K = field
    tq = K.pow(t0, Q)
    yv = UniPoly.x(K)
    xv = UniPoly(K, [K.neg(K.mul(tq, tq)), tq])
    return defining_form(Q, K).compose([UniPoly.const(K, 1), xv, yv])


def pullback_orders_check(q, samples: int = 8, seed: int = 0) -> tuple[bool, list[int]]:
    """At sampled t outside F_{q^2}: orders q at sigma_1 and 1 at sigma_q."""
    pp = _pp(q)
    Q = pp.q
    K = extension(Q, 3)
    fq = set(K.subfield_codes(Q))
    pool = [u for u in range(K.order) if u not in fq]
    rng = random.Random(seed)
    chosen = sorted(rng.sample(pool, min(samples, len(pool))))
    for t0 in chosen:
        g = line_restriction(Q, t0, K)
        y1 = K.add(K.pow(t0, Q), t0)
        y2 = K.add(K.pow(t0, Q * Q), K.pow(t0, Q))
        if vanishing_order(g, y1) != Q or vanishing_order(g, y2) != 1 or g.degree != Q + 1:
            return False, chosen
    return True, chosen


# -----------------------------------------------------------------------------
# fiber splitting over tangent lines
# -----------------------------------------------------------------------------


@dataclass
class SplitReport:
    q: int
    d: int
    param: object
    line: str
    c0: int
    linear_form: tuple[int, int]  # l = l0*lam + l1*mu in the line's (lam, mu) coordinates
    splitting_field_order: int
    root: int
    components: int
    roots_of_unity: int

    @property
    def ok(self) -> bool:
        return self.components == self.d and self.roots_of_unity == self.d


def _line_basis(K: Field, coeffs):
    """Two points spanning the line c . x = 0."""
    c0, c1, c2 = coeffs
    # pick the pivot: first nonzero coefficient
    piv = next(i for i in range(3) if coeffs[i])
    others = [i for i in range(3) if i != piv]
    basis = []
    inv = K.inv(coeffs[piv])
    for j in others:
        v = [0, 0, 0]
        v[j] = 1
        v[piv] = K.neg(K.mul(coeffs[j], inv))
        basis.append(tuple(v))
    return basis


def fiber_splitting_check(t, q, d: int, field: Field | None = None) -> SplitReport:
    """Restrict the surface to l_P and split w^d = c0 * l^(q+1) into d components.

    ``t`` is a code of ``field`` (default F_{q^2}) or AT_INFINITY; it must lie in
    F_{q^2}.
    """
    pp = _pp(q)
    Q = pp.q
    _check_divisor(Q, d)
    K = host_field(Q, field, 2)
    if t is not AT_INFINITY and K.pow(int(t), Q * Q) != int(t):
        raise NotRationalOverFq2(f"parameter {K.format(int(t))} is not in F_{Q * Q}")
    line = tangent_line(t, Q, K)
    A, B = _line_basis(K, line.coeffs)
    lam, mu = MPoly.var(K, 2, 0), MPoly.var(K, 2, 1)
    X = [lam.scale(A[i]) + mu.scale(B[i]) for i in range(3)]
    F = defining_form(Q, K)
    G = F.substitute([HomogForm(K, 2, x.terms) for x in X])
    # image point on the line, in (lam, mu) coordinates
    P = bh_parametrization(Q, K).image(t)
    coords = _solve_on_basis(K, A, B, P.coords)
    l0, l1 = coords[1], K.neg(coords[0])  # l vanishes at (lam, mu) = coords
    ell = lam.scale(l0) + mu.scale(l1)
    target = ell ** (Q + 1)
    Gh = HomogForm(K, 2, G.terms)
    c0 = Gh.proportional_to(target)
    if c0 is None or c0 == 0:
        raise VerificationError(f"restriction to {line} is not c0 * l^(q+1)")
    # roots of unity of order d in F_{q^2}
    mu_d = [u for u in range(1, K.order) if K.pow(u, d) == 1]
    m = 1
    while True:
        L = extension(Q, 2 * m)
        emb = K.embedding_into(L)
        c0L = emb(c0)
        r = next((u for u in range(1, L.order) if L.pow(u, d) == c0L), None)
        if r is not None:
            break
        m += 1
    roots = {L.mul(emb(z), r) for z in mu_d}
    if any(L.pow(x, d) != c0L for x in roots):
        raise VerificationError("component roots do not solve w^d = c0")
    return SplitReport(
        q=Q,
        d=d,
        param=t,
        line=str(line),
        c0=c0,
        linear_form=(l0, l1),
        splitting_field_order=L.order,
        root=r,
        components=len(roots),
        roots_of_unity=len(mu_d),
    )


def _solve_on_basis(K: Field, A, B, P):
    """(lam, mu) with lam*A + mu*B proportional to P.

    A and B carry the unit vectors in the two non-pivot positions, so lam and mu
    are read off those coordinates of P.
    """
    j0 = next(i for i in range(3) if A[i] == 1 and B[i] == 0)
    j1 = next(i for i in range(3) if B[i] == 1 and A[i] == 0)
    lam, mu = P[j0], P[j1]
    v = [K.add(K.mul(lam, A[i]), K.mul(mu, B[i])) for i in range(3)]
    if not any(v) or ProjPoint.make(K, v) != ProjPoint.make(K, P):
        raise VerificationError("point is not on the line")
    return (lam, mu)
