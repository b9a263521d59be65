"""The plane curve B_q: image of [s:t] -> [s^(q+1) : t^(q+1) : s t^q + s^q t].

Every function here takes ``q`` and an optional host field.  When the host field
is omitted it defaults to F_{q^2}, the smallest field over which all nodes of B
are rational.  All checks are exact identities or exhaustive scans.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .errors import FieldTooSmall, SearchFieldTooSmall
from .field import Field, gf, make_field, prime_power, PrimePower
from .poly import (
    AT_INFINITY,
    INFINITE,
    HomogForm,
    MPoly,
    UniPoly,
    linear_form,
    poly_gcd,
    vanishing_order,
)


# -----------------------------------------------------------------------------
# points and lines
# -----------------------------------------------------------------------------


def _normalize(field: Field, coords) -> tuple[int, ...]:
    coords = tuple(int(c) for c in coords)
    for c in coords:
        if c:
            inv = field.inv(c)
            return tuple(field.mul(x, inv) for x in coords)
    raise ValueError("all coordinates are zero")


@dataclass(frozen=True)
class ProjPoint:
    """A point of projective space; coordinates normalized so the first nonzero is 1."""

    field: Field
    coords: tuple[int, ...]

    @classmethod
    def make(cls, field: Field, coords) -> "ProjPoint":
        return cls(field, _normalize(field, coords))

    def __str__(self):
        return "[" + ":".join(self.field.format(c) for c in self.coords) + "]"

    def sort_key(self):
        return self.coords


@dataclass(frozen=True)
class Line:
    """The line c0*x0 + c1*x1 + c2*x2 = 0, normalized like a point of the dual plane."""

    field: Field
    coeffs: tuple[int, int, int]

    @classmethod
    def make(cls, field: Field, coeffs) -> "Line":
        return cls(field, _normalize(field, coeffs))

    def form(self) -> HomogForm:
        return linear_form(self.field, self.coeffs)

    def contains(self, pt: ProjPoint) -> bool:
        F = self.field
        acc = 0
        for a, x in zip(self.coeffs, pt.coords):
            acc = F.add(acc, F.mul(a, x))
        return acc == 0

    def __str__(self):
        names = ("x0", "x1", "x2")
        parts = []
        for c, n in zip(self.coeffs, names):
            if c:
                ct = self.field.format(c)
                parts.append(n if c == 1 else (f"({ct})*{n}" if "+" in ct else f"{ct}*{n}"))
        return " + ".join(parts) + " = 0"


@dataclass(frozen=True)
class ParamCurve:
    """A map P^1 -> P^n given by homogeneous forms in (s, t) of common degree."""

    field: Field
    coords: tuple[HomogForm, ...]
    degree: int

    def chart(self) -> tuple[UniPoly, ...]:
        """Coordinates restricted to s = 1, as polynomials in t."""
        return tuple(_binary_to_uni(c, 1) for c in self.coords)

    def chart_at_infinity(self) -> tuple[UniPoly, ...]:
        """Coordinates restricted to t = 1, as polynomials in s."""
        return tuple(_binary_to_uni(c, 0) for c in self.coords)

    def image(self, t) -> ProjPoint:
        """Image of [1:t], or of [0:1] when t is AT_INFINITY."""
        if t is AT_INFINITY:
            return ProjPoint.make(self.field, [c(0) for c in self.chart_at_infinity()])
        return ProjPoint.make(self.field, [c(t) for c in self.chart()])

    def coprime(self) -> bool:
        """No common zero on P^1: chart gcd is constant and [0:1] has a nonzero image."""
        g = self.chart()[0]
        for c in self.chart()[1:]:
            g = poly_gcd(g, c)
        at_inf = [c(0) for c in self.chart_at_infinity()]
        return g.degree == 0 and any(at_inf)


def _binary_to_uni(form: HomogForm, keep: int) -> UniPoly:
    coeffs = [0] * (form.degree + 1)
    for e, c in form.terms.items():
        coeffs[e[keep]] = c
    return UniPoly(form.field, coeffs)


# -----------------------------------------------------------------------------
# the curve
# -----------------------------------------------------------------------------


def _pp(q) -> PrimePower:
    return prime_power(q)


def host_field(q, field: Field | None = None, k: int = 2) -> Field:
    """F_{q^k} by default; a supplied field must contain F_{q^k}."""
    pp = _pp(q)
    if field is None:
        return make_field(pp.p, pp.nu * k)
    if field.p != pp.p or field.n % (pp.nu * k):
        raise FieldTooSmall(f"{field!r} does not contain F_{pp.q ** k}")
    return field


def bh_parametrization(q, field: Field | None = None, host_nodes: bool = True) -> ParamCurve:
    """The map phi.  With ``host_nodes`` the field must contain F_{q^2}."""
    pp = _pp(q)
    K = host_field(pp.q, field, 2 if host_nodes else 1)
    Q = pp.q
    x0 = HomogForm(K, 2, {(Q + 1, 0): 1})
    x1 = HomogForm(K, 2, {(0, Q + 1): 1})
    x2 = HomogForm(K, 2, {(1, Q): 1, (Q, 1): 1})
    return ParamCurve(K, (x0, x1, x2), Q + 1)


def chart_polys(q, field: Field) -> tuple[UniPoly, UniPoly, UniPoly]:
    """(1, t^(q+1), t^q + t) over ``field``."""
    Q = int(_pp(q).q)
    return (
        UniPoly.const(field, 1),
        UniPoly.monomial(field, Q + 1),
        UniPoly.monomial(field, Q) + UniPoly.x(field),
    )


def defining_expression(q, x0, x1, x2):
    """The defining polynomial evaluated on ring elements x0, x1, x2.

    Works for any objects supporting ``+ - * **`` and ``scale`` (forms, or
    linear forms substituted for the coordinates).
    """
    pp = _pp(q)
    p, Q = pp.p, pp.q
    if p == 2:
        F = x0**Q * x1 + x0 * x1**Q + x2 ** (Q + 1)
        for i in range(pp.nu):
            k = 2**i
            F = F + (x0 * x1) ** k * x2 ** (Q + 1 - 2 * k)
        return F
    # 2(x0^q x1 + x0 x1^q) - x2^(q+1) - (x2^2 - 4 x0 x1)^((q+1)/2)
    disc = x2 * x2 - (x0 * x1).scale(4 % p)
    return (x0**Q * x1 + x0 * x1**Q).scale(2) - x2 ** (Q + 1) - disc ** ((Q + 1) // 2)


def defining_form(q, field: Field | None = None) -> HomogForm:
    """The degree-(q+1) form vanishing on B, with coefficients in F_p.

    ``field`` selects the ring the form lives in (default F_p); coefficient codes
    are the same in every field of characteristic p.
    """
    pp = _pp(q)
    K = field if field is not None else make_field(pp.p)
    if K.p != pp.p:
        raise FieldTooSmall("field has the wrong characteristic")
    x0, x1, x2 = (linear_form(K, [int(i == j) for j in range(3)]) for i in range(3))
    return defining_expression(pp.q, x0, x1, x2)


def perturbed_form(form: HomogForm) -> HomogForm:
    """Add 1 to the coefficient of the graded-lex largest term (a mutation witness)."""
    e = max(form.terms, key=lambda e: (sum(e), e))
    return form + HomogForm(form.field, form.nvars, {e: 1}, form.weights, form.degree)


def verify_on_curve(q, form: HomogForm | None = None) -> bool:
    """F(1, t^(q+1), t^q + t) == 0 as a polynomial, with F homogeneous of degree q+1.

    A form in (s, t) vanishes iff its s = 1 dehomogenization does, so the chart
    identity is the full identity.
    """
    pp = _pp(q)
    F = defining_form(pp.q) if form is None else form
    if F.degree != pp.q + 1 or any(w != 1 for w in F.weights):
        return False
    return F.compose(chart_polys(pp.q, F.field)).is_zero()


# -----------------------------------------------------------------------------
# nodes
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class NodeRecord:
    params: tuple[int, int]  # (tau, tau^q), smaller code first
    point: ProjPoint
    branch_tangents: tuple[tuple[int, int], tuple[int, int]]  # (dx, dy) per branch, affine x0 = 1
    cone_factor: int  # lam with quadratic part = lam*(u - tau^q v)(u - tau v)

    def __str__(self):
        K = self.point.field
        return f"node {self.point} over {{{K.format(self.params[0])}, {K.format(self.params[1])}}}"


def affine_form(F: HomogForm) -> MPoly:
    """F(1, x, y)."""
    return F.dehomogenize(0)


def is_singular_point(F: HomogForm, pt: ProjPoint) -> bool:
    K = F.field
    return F(pt.coords) == 0 and all(F.partial(i)(pt.coords) == 0 for i in range(3))


def branch_direction(chart: tuple[UniPoly, ...], t: int) -> tuple[int, ...]:
    """First nonvanishing Hasse derivative of the chart vector at t."""
    k = 1
    while True:
        v = tuple(c.hasse(k)(t) for c in chart)
        if any(v):
            return v
        k += 1
        if k > max(c.degree for c in chart):
            raise ValueError("constant parametrization")


def nodes(q, field: Field | None = None) -> list[NodeRecord]:
    """All singular points of B, one record per Frobenius pair {tau, tau^q}.

    Each record carries the tangent-cone certificate: at the image point the
    affine form has no constant or linear part and its quadratic part is a
    nonzero multiple of (u - tau^q v)(u - tau v), two distinct lines.
    """
    pp = _pp(q)
    Q = pp.q
    K = host_field(Q, field, 2)
    F = defining_form(Q, K)
    f = affine_form(F)
    chart = chart_polys(Q, K)
    fq = set(K.subfield_codes(Q))
    seen = set()
    out = []
    for tau in K.subfield_codes(Q * Q):
        if tau in fq or tau in seen:
            continue
        tq = K.pow(tau, Q)
        seen.update((tau, tq))
        p1 = [c(tau) for c in chart]
        p2 = [c(tq) for c in chart]
        if p1 != p2:
            raise AssertionError("phi(tau) != phi(tau^q)")
        pt = ProjPoint.make(K, p1)
        if not is_singular_point(F, pt):
            raise AssertionError(f"{pt} is not singular")
        d1 = branch_direction(chart, tau)[1:]
        d2 = branch_direction(chart, tq)[1:]
        lam = _cone_certificate(f, pt, tau, tq)
        if lam is None:
            raise AssertionError(f"tangent cone at {pt} is not an ordinary node")
        a, b = sorted((tau, tq))
        out.append(NodeRecord((a, b), pt, (d1, d2), lam))
    out.sort(key=lambda n: n.point.coords)
    return out


def _cone_certificate(f: MPoly, pt: ProjPoint, tau: int, tq: int):
    K = f.field
    x, y = pt.coords[1], pt.coords[2]
    tay = f.taylor((x, y), max_order=2)
    if tay.homogeneous_part(0) or tay.homogeneous_part(1):
        return None
    quad = tay.homogeneous_part(2)
    # (u - tq v)(u - tau v) = u^2 - (tau + tq) u v + tau tq v^2
    target = MPoly(K, 2, {(2, 0): 1, (1, 1): K.neg(K.add(tau, tq)), (0, 2): K.mul(tau, tq)})
    form = HomogForm(K, 2, quad.terms)
    lam = form.proportional_to(target)
    if lam is None or lam == 0 or tau == tq:
        return None
    return lam


def plane_singular_points(F: HomogForm) -> list[ProjPoint]:
    """Brute-force oracle: every point of P^2(field) where F and its partials vanish."""
    K = F.field
    parts = [F.partial(i) for i in range(3)]
    out = []
    for pt in _p2_points(K):
        if F(pt) == 0 and all(g(pt) == 0 for g in parts):
            out.append(ProjPoint(K, pt))
    return out


def _p2_points(K: Field):
    Q = K.order
    for a in range(Q):
        for b in range(Q):
            yield (1, a, b)
    for b in range(Q):
        yield (0, 1, b)
    yield (0, 0, 1)


# -----------------------------------------------------------------------------
# tangent lines and intersections
# -----------------------------------------------------------------------------


def _cross(F: Field, v, w):
    a = F.sub(F.mul(v[1], w[2]), F.mul(v[2], w[1]))
    b = F.sub(F.mul(v[2], w[0]), F.mul(v[0], w[2]))
    c = F.sub(F.mul(v[0], w[1]), F.mul(v[1], w[0]))
    return (a, b, c)


def tangent_line(t, q, field: Field | None = None) -> Line:
    """The line l_P tangent to the branch of B at phi(P), P = [1:t] or AT_INFINITY.

    Computed as the span of the point and the first nonvanishing Hasse
    derivative of the parametrization, in the chart containing P.
    """
    pp = _pp(q)
    K = field if field is not None else host_field(pp.q)
    curve = bh_parametrization(pp.q, K, host_nodes=False)
    if t is AT_INFINITY:
        chart, t0 = curve.chart_at_infinity(), 0
    else:
        chart, t0 = curve.chart(), t.code if hasattr(t, "code") else int(t)
    v = tuple(c(t0) for c in chart)
    w = branch_direction(chart, t0)
    return Line.make(K, _cross(K, v, w))


def tangent_line_formula(t, q, field: Field) -> Line:
    """The closed form x - t^q y + t^(2q) = 0, i.e. coefficients (t^(2q), 1, -t^q)."""
    Q = int(_pp(q).q)
    if t is AT_INFINITY:
        return Line.make(field, (1, 0, 0))
    tq = field.pow(int(t), Q)
    return Line.make(field, (field.mul(tq, tq), 1, field.neg(tq)))


@dataclass(frozen=True)
class MeetPoint:
    point: ProjPoint
    multiplicity: int
    branches: tuple  # ((param, order), ...) sorted by param code, AT_INFINITY last

    def __str__(self):
        return f"{self.point} x{self.multiplicity}"


@lru_cache(maxsize=64)
def _chart_tables(Q: int, K: Field):
    """Values of t^(q+1) and t^q + t at every code of K."""
    A = [K.pow(u, Q + 1) for u in range(K.order)]
    B = [K.add(K.pow(u, Q), u) for u in range(K.order)]
    return A, B


def pullback(line: Line, q) -> UniPoly:
    """line(phi(1, t)) as a polynomial of declared degree q+1."""
    K = line.field
    return line.form().compose(chart_polys(q, K))


def line_meet_curve(line: Line, q, search_field: Field | None = None) -> list[MeetPoint]:
    """Intersection of a line with B, with multiplicities from the pullback.

    Roots are found by scanning ``search_field`` (default: the line's field,
    which must then be the same object).  Raises SearchFieldTooSmall when the
    orders found do not add up to q+1.
    """
    pp = _pp(q)
    Q = pp.q
    K = line.field if search_field is None else search_field
    if K != line.field:
        emb = line.field.embedding_into(K)
        line = Line.make(K, [emb(c) for c in line.coeffs])
    f = pullback(line, Q)
    if f.is_zero():
        raise ValueError("line is a component of the pullback")
    c0, c1, c2 = line.coeffs
    A, B = _chart_tables(Q, K)
    add, mul = K.add, K.mul
    found = []
    for u in range(K.order):
        if add(c0, add(mul(c1, A[u]), mul(c2, B[u]))) == 0:
            found.append((u, vanishing_order(f, u)))
    inf = vanishing_order(f, AT_INFINITY, degree=Q + 1)
    if inf:
        found.append((AT_INFINITY, inf))
    total = sum(m for _, m in found)
    if total != Q + 1:
        raise SearchFieldTooSmall(f"pullback does not split over F_{K.order} ({total} of {Q + 1})")
    curve = bh_parametrization(Q, K, host_nodes=False)
    groups: dict = {}
    for u, m in found:
        groups.setdefault(curve.image(u), []).append((u, m))
    out = []
    for pt, br in groups.items():
        out.append(MeetPoint(pt, sum(m for _, m in br), tuple(br)))
    out.sort(key=lambda mp: mp.point.coords)
    return out


# -----------------------------------------------------------------------------
# inflections, dual conic, line model
# -----------------------------------------------------------------------------


def inflection_points(q, field: Field | None = None) -> list[ProjPoint]:
    """phi(P^1(F_q)), each verified smooth with tangent contact order q+1.

    Convention: an inflection point is a smooth point whose tangent line meets
    the curve there with contact order at least 3.
    """
    pp = _pp(q)
    Q = pp.q
    K = host_field(Q, field, 1)
    F = defining_form(Q, K)
    curve = bh_parametrization(Q, K, host_nodes=False)
    params = list(K.subfield_codes(Q)) + [AT_INFINITY]
    out = []
    for t in params:
        pt = curve.image(t)
        if is_singular_point(F, pt):
            raise AssertionError(f"{pt} is singular")
        meet = line_meet_curve(tangent_line(t, Q, K), Q, K)
        if len(meet) != 1 or meet[0].point != pt or meet[0].multiplicity != Q + 1 or Q + 1 < 3:
            raise AssertionError(f"contact order at {pt} is not {Q + 1}")
        out.append(pt)
    out.sort(key=lambda p: p.coords)
    return out


def gauss_map(q, field: Field | None = None) -> tuple[UniPoly, UniPoly, UniPoly]:
    """Tangent-line coefficients as polynomials in t (cross product of phi and phi')."""
    K = field if field is not None else make_field(_pp(q).p)
    v = chart_polys(q, K)
    w = tuple(c.hasse(1) for c in v)
    return (
        v[1] * w[2] - v[2] * w[1],
        v[2] * w[0] - v[0] * w[2],
        v[0] * w[1] - v[1] * w[0],
    )


def _decimate(f: UniPoly, k: int) -> UniPoly | None:
    """g with f(t) = g(t^k), or None."""
    if any(c for i, c in enumerate(f.coeffs) if i % k):
        return None
    return UniPoly(f.field, f.coeffs[::k])


def conic_form(field: Field, coeffs=None) -> HomogForm:
    """a*X0*X1 + b*X2^2; default (1, -1), i.e. X0 X1 - X2^2."""
    a, b = coeffs if coeffs is not None else (1, field.neg(1))
    return HomogForm(field, 3, {(1, 1, 0): a, (0, 0, 2): b})


def dual_conic_check(q, conic: HomogForm | None = None) -> bool:
    """The Gauss map factors as (u -> [u^2 : 1 : -u]) o (t -> t^q), exactly, and lands on the conic.

    Inseparable degree is exactly q because the decimated map still has a
    coordinate of degree 1 (so no further p-th power can be extracted).
    """
    pp = _pp(q)
    Q = pp.q
    K = make_field(pp.p) if conic is None else conic.field
    g = gauss_map(Q, K)
    dec = [_decimate(c, Q) for c in g]
    if any(d is None for d in dec):
        return False
    u = UniPoly.x(K)
    one = UniPoly.const(K, 1)
    # scale so the middle coordinate is 1
    lam = dec[1](0)
    if dec[1].degree != 0 or lam == 0:
        return False
    inv = K.inv(lam)
    dec = [d.scale(inv) for d in dec]
    if dec != [u * u, one, -u]:
        return False
    if all(_decimate(d, pp.p) is not None for d in dec):
        return False
    C = conic if conic is not None else conic_form(K)
    return C.compose(g).is_zero()


def coxeter_model_check(q) -> bool:
    """[s : t : -s-t] -> (q+1)-st powers, then x2 -> x2 - x0 - x1, equals phi coordinate-wise."""
    pp = _pp(q)
    Q = pp.q
    K = make_field(pp.p)
    s = MPoly.var(K, 2, 0)
    t = MPoly.var(K, 2, 1)
    pushed = [s ** (Q + 1), t ** (Q + 1), (-s - t) ** (Q + 1)]
    moved = [pushed[0], pushed[1], pushed[2] - pushed[0] - pushed[1]]
    phi = bh_parametrization(Q, make_field(pp.p, pp.nu * 2))
    target = [
        MPoly(K, 2, dict(c.terms)) for c in phi.coords
    ]
    return all(a == b for a, b in zip(moved, target))


# -----------------------------------------------------------------------------
# tangent trichotomy
# -----------------------------------------------------------------------------


@dataclass
class TrichotomyReport:
    q: int
    k: int
    counts: dict = dc_field(default_factory=dict)  # kind -> number of parameters
    failures: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def tangent_trichotomy(q, k: int) -> TrichotomyReport:
    """Scan every P in P^1(F_{q^k}) and classify how l_P meets B.

    Over F_q the contact is a single point of order q+1; over F_{q^2} \\ F_q
    the tangent passes through a node with branch orders (1, q); elsewhere it
    meets B at phi(P) with order q and at one further point with order 1,
    namely (1 : t^(q^2+q) : t^(q^2) + t^q).
    """
    Q = int(_pp(q).q)
    K = host_field(Q, None, k)
    fq = set(K.subfield_codes(Q))
    fq2 = set(K.subfield_codes(Q * Q)) if k % 2 == 0 else fq
    rep = TrichotomyReport(Q, k)
    for t in list(range(K.order)) + [AT_INFINITY]:
        line = tangent_line(t, Q, K)
        meet = line_meet_curve(line, Q, K)
        if line != tangent_line_formula(t, Q, K):
            rep.failures.append((t, "closed form"))
        if t is AT_INFINITY or t in fq:
            kind = "F_q"
            good = len(meet) == 1 and meet[0].multiplicity == Q + 1
        elif t in fq2:
            kind = "node"
            good = len(meet) == 1 and sorted(o for _, o in meet[0].branches) == [1, Q]
        else:
            kind = "generic"
            tq = K.pow(t, Q)
            second = ProjPoint.make(K, (1, K.pow(t, Q * Q + Q), K.add(K.pow(t, Q * Q), tq)))
            good = sorted(m.multiplicity for m in meet) == [1, Q] and any(
                m.multiplicity == 1 and m.point == second for m in meet
            )
        rep.counts[kind] = rep.counts.get(kind, 0) + 1
        if not good:
            rep.failures.append((t, kind))
    return rep
