"""The two explicit K3 configurations: the quartic S_4 (q=3) and the sextic S_2 (q=5).

Each configuration is built over a field K ⊇ F_{q^2} together with a chosen
square root ``alpha`` (of -1 for q=3, of 2 for q=5); all labels are expressed
through alpha, so rebuilding over another modulus keeps the labels meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from ..curve import Line, tangent_line
from ..errors import VerificationError
from ..field import Field, make_field
from ..poly import AT_INFINITY, HomogForm, linear_form
from .surfaces import Surface, SurfaceCurve, SurfaceNode
from .tables import QUARTIC_LABELS, SEXTIC_LABELS


@dataclass
class CurveConfig:
    name: str
    surface: Surface
    alpha: int
    curves: dict[str, SurfaceCurve]
    selected: tuple[str, ...]
    exceptional_chain: dict[str, tuple[SurfaceNode, int]] = dc_field(default_factory=dict)

    @property
    def field(self) -> Field:
        return self.surface.field

    def __getitem__(self, label: str) -> SurfaceCurve:
        return self.curves[label]


def sqrt_in(K: Field, n: int) -> int:
    """Least-code square root of the integer n in K."""
    target = n % K.p
    for c in range(1, K.order):
        if K.mul(c, c) == target:
            return c
    raise ValueError(f"{n} has no square root in F_{K.order}")


def _el(K: Field, alpha: int, a: int, b: int = 0) -> int:
    return K.add(a % K.p, K.mul(b % K.p, alpha))


def _tau_text(a: int, b: int, p: int) -> str:
    """Label text for a + b*alpha with a, b taken mod p in a symmetric range for b."""
    a %= p
    b %= p
    if b > p // 2:
        b -= p
    if b == 0:
        return str(a)
    mag = "" if abs(b) == 1 else str(abs(b))
    sign = "-" if b < 0 else ("+" if a else "")
    return (str(a) if a else "") + sign + mag + "a"


def _w(K: Field, coef: int, lin, power: int) -> HomogForm:
    return (linear_form(K, lin) ** power).scale(coef)


def _check_tangent(K: Field, q: int, plane, tau) -> None:
    """The plane must be the tangent line l_P over P = [1:tau]."""
    line = tangent_line(tau, q, K)
    if Line.make(K, plane) != line:
        raise VerificationError(f"plane {plane} is not the tangent line over {tau}")


# -----------------------------------------------------------------------------
# quartic: q = 3, d = 4
# -----------------------------------------------------------------------------


def quartic_config(field: Field | None = None, alpha: int | None = None) -> CurveConfig:
    """40 lines on S_4 and the 9 exceptional curves over its three A_3 points."""
    K = field if field is not None else make_field(3, 2)
    al = alpha if alpha is not None else sqrt_in(K, -1)
    if K.mul(al, al) != K.neg(1):
        raise ValueError("alpha must square to -1")
    S = Surface(3, 4, K)
    el = lambda a, b=0: _el(K, al, a, b)  # noqa: E731
    neg = K.neg
    x2 = (0, 0, 1)
    x2p0 = (1, 0, 1)
    x2m0 = (neg(1), 0, 1)
    # tau -> (plane, w linear form); (a, b) encodes a + b*alpha, None is infinity
    specs = {
        (0, 0): ((0, 1, 0), x2),
        (1, 0): ((1, 1, neg(1)), x2p0),
        (2, 0): ((1, 1, 1), x2m0),
        None: ((1, 0, 0), x2),
    }
    for b in (1, -1):
        specs[(0, b)] = ((neg(1), 1, el(0, b)), x2)
        specs[(1, b)] = ((el(0, b), 1, el(-1, b)), x2p0)
        specs[(2, b)] = ((el(0, -b), 1, el(1, b)), x2m0)
    curves: dict[str, SurfaceCurve] = {}
    for key, (plane, wl) in specs.items():
        tau = AT_INFINITY if key is None else el(*key)
        ttext = "inf" if key is None else _tau_text(key[0], key[1], 3)
        _check_tangent(K, 3, plane, tau)
        for nu in range(4):
            lab = f"L_{{{ttext}}}^{{{nu}}}"
            wf = _w(K, K.pow(al, nu), wl, 1)
            C = SurfaceCurve(lab, plane, wf, tau=key)
            if not S.contains(C):
                raise VerificationError(f"{lab} is not on the surface")
            curves[lab] = C
    # exceptional curves: E_{a + b alpha} for b in {-1, 0, 1} over the node Q_a
    chain = {}
    for nd in S.nodes:
        a = _node_real_part(K, al, nd)
        for pos, b in enumerate((-1, 0, 1)):
            lab = f"E_{{{_tau_text(a, b, 3)}}}"
            curves[lab] = SurfaceCurve(lab, node=nd, tau=(a, b))
            chain[lab] = (nd, pos)
    cfg = CurveConfig("quartic", S, al, curves, QUARTIC_LABELS, chain)
    _check_quartic_incidence(cfg)
    return cfg


def _node_real_part(K: Field, al: int, nd: SurfaceNode) -> int:
    """a with node parameters {a + alpha, a - alpha} (quartic) -- found by matching."""
    for a in range(K.p):
        for b in range(1, K.p):
            if _el(K, al, a, b) in nd.params:
                return a
    raise VerificationError("node parameters are not of the form a + b*alpha")


def _check_quartic_incidence(cfg: CurveConfig) -> None:
    S = cfg.surface
    for lab, C in cfg.curves.items():
        if C.exceptional:
            continue
        hit = S.nodes_on(C)
        if C.tau is None or C.tau[1] == 0:
            if hit:
                raise VerificationError(f"{lab} should avoid the singular points")
        else:
            a = C.tau[0]
            want = [nd for nd, _ in cfg.exceptional_chain.values() if _node_real_part(S.field, cfg.alpha, nd) == a]
            if len(hit) != 1 or hit[0] != want[0]:
                raise VerificationError(f"{lab} should pass through exactly Q_{a}")


# -----------------------------------------------------------------------------
# sextic: q = 5, d = 2
# -----------------------------------------------------------------------------

# (plane, w coefficient, w linear base), each entry (a, b) meaning a + b*alpha
SEXTIC_CURVES = (
    (((0, 0), (1, 0), (0, 0)), (0, 2), ((0, 0), (0, 0), (1, 0))),
    (((0, 0), (1, 0), (0, 0)), (0, -2), ((0, 0), (0, 0), (1, 0))),
    (((1, 0), (1, 0), (4, 0)), (0, -2), ((3, 0), (0, 0), (1, 0))),
    (((3, 0), (1, 0), (0, 3)), (0, 2), ((0, 0), (0, 0), (1, 0))),
    (((2, 0), (1, 0), (0, 4)), (0, -2), ((0, 0), (0, 0), (1, 0))),
    (((3, 0), (1, 0), (0, 2)), (0, 2), ((0, 0), (0, 0), (1, 0))),
    (((3, 3), (1, 0), (4, 1)), (0, -2), ((3, 0), (0, 0), (1, 0))),
    (((4, 1), (1, 0), (4, 2)), (0, -2), ((3, 0), (0, 0), (1, 0))),
    (((2, 3), (1, 0), (3, 3)), (0, 2), ((1, 0), (0, 0), (1, 0))),
    (((1, 1), (1, 0), (3, 1)), (0, 2), ((1, 0), (0, 0), (1, 0))),
    (((1, 1), (1, 0), (2, 4)), (0, 2), ((4, 0), (0, 0), (1, 0))),
    (((2, 3), (1, 0), (2, 2)), (0, -2), ((4, 0), (0, 0), (1, 0))),
    (((3, 3), (1, 0), (1, 4)), (0, 2), ((2, 0), (0, 0), (1, 0))),
    (((4, 4), (1, 0), (1, 2)), (0, 2), ((2, 0), (0, 0), (1, 0))),
)

# A misreading of the sixth plane, x0 + x1 + 2 alpha x2; it does not lie on S_2.
SEXTIC_CURVE_6_MISREAD = (((1, 0), (1, 0), (0, 2)), (0, 2), ((0, 0), (0, 0), (1, 0)))

SEXTIC_NODE_PAIRS = ((0, 1), (0, 2), (1, 1), (1, 2), (2, 1), (3, 2), (4, 1), (4, 2))


def _sextic_curve(K: Field, al: int, label: str, spec) -> SurfaceCurve:
    plane, coef, base = spec
    el = lambda ab: _el(K, al, *ab)  # noqa: E731
    return SurfaceCurve(label, tuple(el(c) for c in plane), _w(K, el(coef), [el(c) for c in base], 3))


def sextic_curve(label: str, spec, field: Field | None = None, alpha: int | None = None) -> SurfaceCurve:
    K = field if field is not None else make_field(5, 2, "x^2-2")
    al = alpha if alpha is not None else sqrt_in(K, 2)
    return _sextic_curve(K, al, label, spec)


def pair_label(a: int, b: int) -> str:
    return "E_{" + (str(a) if a else "") + "+-" + ("" if b == 1 else str(b)) + "a}"


def sextic_config(field: Field | None = None, alpha: int | None = None) -> CurveConfig:
    """The 14 listed curves on S_2 and the exceptional curves over its ten nodes."""
    K = field if field is not None else make_field(5, 2, "x^2-2")
    al = alpha if alpha is not None else sqrt_in(K, 2)
    if K.mul(al, al) != 2:
        raise ValueError("alpha must square to 2")
    S = Surface(5, 2, K)
    curves: dict[str, SurfaceCurve] = {}
    for k, spec in enumerate(SEXTIC_CURVES, start=1):
        C = _sextic_curve(K, al, f"C_{k}", spec)
        if not S.contains(C):
            raise VerificationError(f"C_{k} is not on the surface")
        curves[C.label] = C
    chain = {}
    for nd in S.nodes:
        lab = None
        for a in range(5):
            for b in (1, 2):
                if {_el(K, al, a, b), _el(K, al, a, -b)} == set(nd.params):
                    lab = pair_label(a, b)
        if lab is None:
            raise VerificationError("node parameters are not of the form a +- b*alpha")
        curves[lab] = SurfaceCurve(lab, node=nd)
        chain[lab] = (nd, 0)
    return CurveConfig("sextic", S, al, curves, SEXTIC_LABELS, chain)
