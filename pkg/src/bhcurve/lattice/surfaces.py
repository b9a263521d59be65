"""Curves on the covers S_d and their local intersection numbers.

A curve here is ``{plane(x) = 0, w = w_form(x)}``; it is parametrized by
x = A + u*B for a basis A, B of the plane, and w = w_form(x).

Intersections at smooth points of S use a *witness*: one of the two defining
equations h of the second curve such that {h = 0} meets S in a smooth curve
germ at the point (gradients of the surface equation and of h independent).
Then h is a local equation of that curve and the local intersection number is
the vanishing order of h along the first curve's parameter.  The same test is
applied after one blow-up at an ordinary node.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..cover import surface_form
from ..curve import _pp, nodes
from ..errors import IdenticalCurves, SearchFieldTooSmall, VerificationError, WitnessUnavailable
from ..field import Field
from ..poly import AT_INFINITY, INFINITE, HomogForm, MPoly, UniPoly, vanishing_order

AMBIENT_VARS = ("w", "x0", "x1", "x2")


@dataclass(frozen=True)
class SurfaceNode:
    label: str
    params: tuple[int, int]
    coords: tuple[int, int, int, int]  # (w, x0, x1, x2) with w = 0 and x0 = 1


@dataclass(frozen=True)
class SurfaceCurve:
    """``{plane . x = 0, w = w_form(x)}``, or an exceptional curve over a node."""

    label: str
    plane: tuple[int, int, int] | None = None
    w_form: HomogForm | None = None
    node: SurfaceNode | None = None
    tau: object = None  # parameter of the tangent line the curve lies over

    @property
    def exceptional(self) -> bool:
        return self.plane is None

    def equations(self, c: int) -> dict[str, HomogForm]:
        """The two ambient equations, as weighted forms in (w, x0, x1, x2)."""
        K = self.w_form.field
        plane = HomogForm(
            K, 4, {(0,) + tuple(int(i == j) for j in range(3)): self.plane[i] for i in range(3)},
            weights=(c, 1, 1, 1), degree=1,
        )
        terms = {(0,) + e: K.neg(v) for e, v in self.w_form.terms.items()}
        terms[(1, 0, 0, 0)] = 1
        wf = HomogForm(K, 4, terms, weights=(c, 1, 1, 1), degree=c)
        return {"plane": plane, "w-form": wf}


def normalize_weighted(K: Field, coords, c: int) -> tuple[int, ...]:
    """Scale [w : x] in P(c,1,1,1) so the first nonzero x-coordinate is 1."""
    coords = tuple(coords)
    i = next((i for i in range(1, 4) if coords[i]), None)
    if i is None:
        if not coords[0]:
            raise ValueError("all coordinates are zero")
        return (1, 0, 0, 0)
    lam = K.inv(coords[i])
    return (K.mul(coords[0], K.pow(lam, c)),) + tuple(K.mul(x, lam) for x in coords[1:])


def plane_basis(K: Field, plane) -> tuple[tuple[int, int, int], tuple[int, int, int]]:
    """Two points spanning the line plane . x = 0 in P^2."""
    piv = next(i for i in range(3) if plane[i])
    inv = K.inv(plane[piv])
    out = []
    for j in (i for i in range(3) if i != piv):
        v = [0, 0, 0]
        v[j] = 1
        v[piv] = K.neg(K.mul(plane[j], inv))
        out.append(tuple(v))
    return out[0], out[1]


@dataclass
class CurveParam:
    """u -> (w(u), x0(u), x1(u), x2(u)) with declared degrees (c, 1, 1, 1)."""

    polys: tuple[UniPoly, UniPoly, UniPoly, UniPoly]
    degrees: tuple[int, int, int, int]

    def point(self, u) -> tuple[int, ...]:
        if u is AT_INFINITY:
            return tuple(
                p.coeffs[d] if len(p.coeffs) > d else 0 for p, d in zip(self.polys, self.degrees)
            )
        return tuple(p(u) for p in self.polys)


class Surface:
    """S_d: w^d = F(x) in P(c, 1, 1, 1) over the field K ⊇ F_{q^2}."""

    def __init__(self, q, d: int, field: Field):
        pp = _pp(q)
        self.q = pp.q
        self.d = d
        self.c = (pp.q + 1) // d
        self.field = field
        self.form = surface_form(pp.q, d, field)
        self.nodes: list[SurfaceNode] = []
        for nd in nodes(pp.q, field):
            self.nodes.append(SurfaceNode(str(nd.point), nd.params, (0,) + nd.point.coords))

    # -- curves -----------------------------------------------------------------

    def param(self, curve: SurfaceCurve, basis=None) -> CurveParam:
        K = self.field
        A, B = basis if basis is not None else plane_basis(K, curve.plane)
        xs = tuple(UniPoly(K, [A[i], B[i]]) for i in range(3))
        w = curve.w_form.compose(xs)
        return CurveParam((w,) + xs, (self.c, 1, 1, 1))

    def contains(self, curve: SurfaceCurve) -> bool:
        """The parametrization satisfies the surface equation identically."""
        P = self.param(curve)
        return self.form.compose(list(P.polys)).is_zero()

    def node_at(self, coords) -> SurfaceNode | None:
        pt = normalize_weighted(self.field, coords, self.c)
        for nd in self.nodes:
            if nd.coords == pt:
                return nd
        return None

    def nodes_on(self, curve: SurfaceCurve) -> list[SurfaceNode]:
        K = self.field
        out = []
        for nd in self.nodes:
            x = nd.coords[1:]
            on_plane = sum_codes(K, (K.mul(a, b) for a, b in zip(curve.plane, x))) == 0
            if on_plane and curve.w_form(x) == 0:
                out.append(nd)
        return out

    # -- local algebra ----------------------------------------------------------

    def _chart(self, pt):
        """Index of the x-variable used as chart (first nonzero x) for a normalized point."""
        return next(i for i in range(1, 4) if pt[i])

    def witness_valid(self, h: HomogForm, pt, g: HomogForm | None = None) -> bool:
        """{h = 0} ∩ S is a smooth germ at pt: affine gradients of g and h independent."""
        g = self.form if g is None else g
        K = self.field
        i = self._chart(pt)
        aff = tuple(pt[j] for j in range(4) if j != i)
        gg = g.dehomogenize(i)
        hh = h.dehomogenize(i)
        a = gg.gradient_at(aff)
        b = hh.gradient_at(aff)
        return any(_cross(K, a, b))


def sum_codes(K: Field, xs) -> int:
    acc = 0
    for x in xs:
        acc = K.add(acc, x)
    return acc


def _cross(K, a, b):
    return (
        K.sub(K.mul(a[1], b[2]), K.mul(a[2], b[1])),
        K.sub(K.mul(a[2], b[0]), K.mul(a[0], b[2])),
        K.sub(K.mul(a[0], b[1]), K.mul(a[1], b[0])),
    )


# -----------------------------------------------------------------------------
# intersections in the ambient space
# -----------------------------------------------------------------------------


@dataclass(frozen=True)
class MeetRecord:
    point: tuple[int, ...]  # normalized (w, x0, x1, x2)
    param: object
    node: SurfaceNode | None
    multiplicity: int | None
    witness: str


def _common_params(S: Surface, P: CurveParam, eqs: dict) -> list:
    K = S.field
    hp = eqs["plane"].compose(list(P.polys))
    hw = eqs["w-form"].compose(list(P.polys))
    if hp.is_zero() and hw.is_zero():
        raise IdenticalCurves("curves coincide")
    if not hp.is_zero():
        cands = [u for u in _roots(hp, 1, K)]
        return [u for u in cands if _eval(hw, u, S.c) == 0]
    roots = _roots(hw, S.c, K)
    total = sum(vanishing_order(hw, u, degree=S.c) for u in roots)
    if total != S.c:
        raise SearchFieldTooSmall("common points are not all rational over the field")
    return roots


def _roots(f: UniPoly, degree: int, K: Field) -> list:
    out = [u for u in range(K.order) if f(u) == 0]
    if f.degree < degree:
        out.append(AT_INFINITY)
    return out


def _eval(f: UniPoly, u, degree: int) -> int:
    if u is AT_INFINITY:
        return f.coeffs[degree] if len(f.coeffs) > degree else 0
    return f(u)


def ambient_meet(S: Surface, C1: SurfaceCurve, C2: SurfaceCurve) -> list[MeetRecord]:
    """Common points of C1 and C2 with local multiplicities at smooth points.

    Points that are singular on S are returned with ``multiplicity=None`` and
    ``witness='node'``; their contribution on the resolution is computed by
    :func:`node_contribution`.  A smooth point where neither equation of C2 is a
    valid witness gets ``witness='unavailable'``.
    """
    if C1.label == C2.label:
        raise IdenticalCurves(C1.label)
    K = S.field
    P = S.param(C1)
    eqs = C2.equations(S.c)
    out = []
    for u in _common_params(S, P, eqs):
        pt = normalize_weighted(K, P.point(u), S.c)
        nd = S.node_at(pt)
        if nd is not None:
            out.append(MeetRecord(pt, u, nd, None, "node"))
            continue
        mult, wname = None, "unavailable"
        for name, h in eqs.items():
            H = h.compose(list(P.polys))
            if H.is_zero() or not S.witness_valid(h, pt):
                continue
            mult = vanishing_order(H, u, degree=h.degree)
            wname = name
            break
        out.append(MeetRecord(pt, u, None, mult, wname))
    return out


# -----------------------------------------------------------------------------
# one blow-up at an ordinary node
# -----------------------------------------------------------------------------


def _local(S: Surface, h: HomogForm, nd: SurfaceNode) -> MPoly:
    """h in the chart x0 = 1, shifted so the node is the origin: variables (w, X, Y)."""
    _, _, n1, n2 = nd.coords
    return h.dehomogenize(1).taylor((0, n1, n2))


def _blowup(P: MPoly, r: int) -> MPoly:
    """Strict transform in the chart z_r = e, z_s = e*z_s' (s != r); same slot layout."""
    m = P.low_order()
    out = {}
    for e, c in P.terms.items():
        ne = list(e)
        ne[r] = sum(e) - m
        out[tuple(ne)] = c
    return MPoly(P.field, P.nvars, out)


@dataclass
class LocalBranch:
    """A curve through a node, parametrized by u with u = 0 at the node."""

    local: tuple[UniPoly, UniPoly, UniPoly]  # (w, X, Y)
    direction: tuple[int, int, int]


def _branch(S: Surface, C: SurfaceCurve, nd: SurfaceNode) -> LocalBranch:
    K = S.field
    c0, c1, c2 = C.plane
    B = (0, c2, K.neg(c1))
    if not any(B):
        raise VerificationError("plane does not pass through a point with x0 = 1")
    base = nd.coords[1:]
    xs = tuple(UniPoly(K, [base[i], B[i]]) for i in range(3))
    w = C.w_form.compose(xs)
    if w(0) != 0:
        raise VerificationError(f"{C.label} does not pass through node {nd.label}")
    local = (w, UniPoly(K, [0, B[1]]), UniPoly(K, [0, B[2]]))
    direction = tuple(p.coeffs[1] if len(p.coeffs) > 1 else 0 for p in local)
    return LocalBranch(local, direction)


def _same_direction(K, a, b) -> bool:
    return not any(_cross(K, a, b))


def _chart_index(br: LocalBranch) -> int:
    """An x-slot in which the branch has a nonzero linear term."""
    return next(i for i in (1, 2) if br.direction[i])


def _lift(K: Field, br: LocalBranch, r: int) -> tuple[UniPoly, UniPoly, UniPoly]:
    inv = K.inv(br.local[r].coeffs[1])
    out = []
    for s, p in enumerate(br.local):
        if s == r:
            out.append(p)
        else:
            if p(0) != 0:
                raise VerificationError("branch does not pass through the node")
            out.append(UniPoly(K, p.coeffs[1:]).scale(inv))
    return tuple(out)


def _gradient_rank2(K, f: MPoly, h: MPoly, pt) -> bool:
    return any(_cross(K, f.gradient_at(pt), h.gradient_at(pt)))


def node_contribution(S: Surface, C1: SurfaceCurve, C2: SurfaceCurve, nd: SurfaceNode) -> tuple[int, str]:
    """Intersection of the strict transforms of C1, C2 over an A_1 node.

    One blow-up resolves an ordinary double point of a surface.  The strict
    transform of C1 meets the exceptional conic only at its tangent direction;
    if C2 has a different direction the contribution is 0.  Otherwise a witness
    among the strict transforms of C2's equations is certified by the gradient
    test on the strict transform of S, and its order along the lifted C1 is
    the contribution.
    """
    if S.d != 2:
        raise ValueError("blow-up contribution is implemented for A_1 points only")
    K = S.field
    b1, b2 = _branch(S, C1, nd), _branch(S, C2, nd)
    if not _same_direction(K, b1.direction, b2.direction):
        return 0, "distinct-directions"
    r = _chart_index(b1)
    lifted = _lift(K, b1, r)
    pt = tuple(p(0) for p in lifted)
    gt = _blowup(_local(S, S.form, nd), r)
    if gt(pt) != 0:
        raise VerificationError("lifted point is not on the strict transform")
    for name, h in C2.equations(S.c).items():
        ht = _blowup(_local(S, h, nd), r)
        H = ht.compose(list(lifted))
        if ht(pt) != 0:
            return 0, f"blowup:{name}:misses"
        if H.is_zero() or not _gradient_rank2(K, gt, ht, pt):
            continue
        return vanishing_order(H, 0), f"blowup:{name}"
    raise WitnessUnavailable(f"no witness for {C1.label} . {C2.label} over {nd.label}")


def exceptional_meet(S: Surface, C: SurfaceCurve, nd: SurfaceNode) -> tuple[int, str]:
    """E . C~ over an A_1 node: order of the exceptional coordinate e along lifted C."""
    if S.d != 2:
        raise ValueError("implemented for A_1 points only")
    K = S.field
    if nd not in S.nodes_on(C):
        return 0, "misses-node"
    b = _branch(S, C, nd)
    r = _chart_index(b)
    lifted = _lift(K, b, r)
    pt = tuple(p(0) for p in lifted)
    gt = _blowup(_local(S, S.form, nd), r)
    e = MPoly.var(K, 3, r)
    if not _gradient_rank2(K, gt, e, pt):
        raise WitnessUnavailable(f"exceptional coordinate is not a local equation at {nd.label}")
    return vanishing_order(lifted[r], 0), "blowup:exceptional"
