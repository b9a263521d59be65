"""Exact polynomial algebra over a :class:`~bhcurve.field.Field`.

Three containers, all immutable and all storing field *codes*:

* :class:`UniPoly` -- dense univariate polynomial, coefficients low-to-high.
* :class:`MPoly` -- sparse multivariate polynomial ``{exponent tuple: code}``.
* :class:`HomogForm` -- an :class:`MPoly` whose terms share one weighted degree.

Multiplication skips zero coefficients of the sparser operand, which keeps the
expansions used in this package (substituting ``t^(q+1)`` and ``t^q + t``) linear
in the output size.
"""

from __future__ import annotations

from math import comb
from typing import Iterable, Sequence

from .errors import ArityMismatch, FieldMismatch, ZeroDenominator
from .field import Field, FieldElem


class _Infinite:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "INFINITE"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return 0x1F1F

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self


INFINITE = _Infinite()
"""Vanishing order of the zero polynomial."""


class _AtInfinity:
    def __repr__(self):
        return "AT_INFINITY"


AT_INFINITY = _AtInfinity()
"""Marker for the point at infinity of the affine line."""


def _code(field: Field, c) -> int:
    if isinstance(c, FieldElem):
        if c.field != field:
            raise FieldMismatch("coefficient from another field")
        return c.code
    return int(c)


def _coef_text(field: Field, c: int) -> str:
    s = field.format(c)
    return f"({s})" if ("+" in s or "*" in s) else s


# -----------------------------------------------------------------------------
# univariate
# -----------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial; ``coeffs[i]`` is the code of the t^i coefficient."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        c = [_code(field, x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, field, coeffs: list):
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.field = field
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def monomial(cls, field: Field, k: int, code: int = 1) -> "UniPoly":
        return cls._raw(field, [0] * k + [code])

    @classmethod
    def const(cls, field: Field, code) -> "UniPoly":
        return cls._raw(field, [_code(field, code)])

    @classmethod
    def x(cls, field: Field) -> "UniPoly":
        return cls.monomial(field, 1)

    # -- basic queries ----------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def low_order(self) -> int | _Infinite:
        """Order of vanishing at t = 0."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INFINITE

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    # -- ring operations --------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, y in enumerate(b):
            if y:
                out[i] = add(out[i], y)
        return UniPoly._raw(self.field, out)

    def __neg__(self) -> "UniPoly":
        neg = self.field.neg
        return UniPoly._raw(self.field, [neg(x) for x in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def scale(self, code) -> "UniPoly":
        code = _code(self.field, code)
        mul = self.field.mul
        return UniPoly._raw(self.field, [mul(x, code) for x in self.coeffs])

    def shift(self, k: int) -> "UniPoly":
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, [0] * k + list(self.coeffs))

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly._raw(self.field, [])
        na = [(i, x) for i, x in enumerate(self.coeffs) if x]
        nb = [(j, y) for j, y in enumerate(other.coeffs) if y]
        if len(na) > len(nb):
            na, nb = nb, na
        add, mul = self.field.add, self.field.mul
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in na:
            for j, y in nb:
                k = i + j
                out[k] = add(out[k], mul(x, y))
        return UniPoly._raw(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative exponent")
        result = UniPoly.const(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation and calculus ------------------------------------------------

    def __call__(self, a) -> int:
        """Evaluate at a code (Horner)."""
        a = _code(self.field, a)
        add, mul = self.field.add, self.field.mul
        acc = 0
        for c in reversed(self.coeffs):
            acc = add(mul(acc, a), c)
        return acc

    def compose(self, g: "UniPoly") -> "UniPoly":
        """self(g(t))."""
        self._check(g)
        acc = UniPoly._raw(self.field, [])
        for c in reversed(self.coeffs):
            acc = acc * g + UniPoly.const(self.field, c)
        return acc

    def hasse(self, k: int) -> "UniPoly":
        """k-th Hasse derivative: sum_i binom(i, k) c_i t^(i-k)."""
        p = self.field.p
        mul = self.field.mul
        out = []
        for i in range(k, len(self.coeffs)):
            b = comb(i, k) % p
            out.append(mul(self.coeffs[i], b) if b else 0)
        return UniPoly._raw(self.field, out)

    def derivative(self) -> "UniPoly":
        return self.hasse(1)

    def divmod_linear(self, a) -> tuple["UniPoly", int]:
        """Divide by (t - a): returns (quotient, remainder code)."""
        a = _code(self.field, a)
        add, mul = self.field.add, self.field.mul
        if not self.coeffs:
            return self, 0
        q = [0] * (len(self.coeffs) - 1)
        acc = 0
        for i in range(len(self.coeffs) - 1, 0, -1):
            acc = add(mul(acc, a), self.coeffs[i])
            q[i - 1] = acc
        rem = add(mul(acc, a), self.coeffs[0])
        return UniPoly._raw(self.field, q), rem

    def __divmod__(self, g: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check(g)
        if g.is_zero():
            raise ZeroDenominator("division by the zero polynomial")
        F = self.field
        inv_lead = F.inv(g.coeffs[-1])
        r = list(self.coeffs)
        dg = g.degree
        q = [0] * max(0, len(r) - dg)
        for k in range(len(r) - 1, dg - 1, -1):
            c = r[k]
            if not c:
                continue
            f = F.mul(c, inv_lead)
            q[k - dg] = f
            for i, gc in enumerate(g.coeffs):
                if gc:
                    r[k - dg + i] = F.sub(r[k - dg + i], F.mul(f, gc))
        return UniPoly._raw(F, q), UniPoly._raw(F, r[:dg] if dg > 0 else [])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def taylor_shift(self, a) -> "UniPoly":
        """The polynomial f(t + a)."""
        a = _code(self.field, a)
        return self.compose(UniPoly(self.field, [a, 1]))

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            ct = _coef_text(self.field, c)
            if not mono:
                parts.append(ct)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{ct}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"UniPoly({self.format()})"


def vanishing_order(f: UniPoly, a, degree: int | None = None):
    """Largest m with (t - a)^m | f, or INFINITE for f == 0.

    ``a`` may be :data:`AT_INFINITY`; the order there is ``degree - deg f`` where
    ``degree`` is the declared degree of the homogenized form (defaults to deg f).
    """
    if f.is_zero():
        return INFINITE
    if a is AT_INFINITY:
        d = f.degree if degree is None else degree
        if d < f.degree:
            raise ValueError("declared degree below actual degree")
        return d - f.degree
    m = 0
    while True:
        quo, rem = f.divmod_linear(a)
        if rem:
            return m
        f = quo
        m += 1


def poly_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    """Monic gcd (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, divmod(f, g)[1]
    return f.monic()


def roots_in(f: UniPoly, field: Field | None = None, codes: Iterable[int] | None = None) -> list[int]:
    """Roots of a nonzero f among the codes of ``field`` (brute scan), ascending."""
    if f.is_zero():
        raise ValueError("zero polynomial has every point as a root")
    scan = codes if codes is not None else range((field or f.field).order)
    return [c for c in scan if f(c) == 0]


# -----------------------------------------------------------------------------
# multivariate
# -----------------------------------------------------------------------------


class MPoly:
    """Sparse multivariate polynomial ``{exponent tuple: code}`` with no zero entries."""

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: dict | None = None):
        self.field = field
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ArityMismatch(f"exponent {e} has wrong length for {nvars} variables")
            c = _code(field, c)
            if c:
                clean[e] = c
        self.terms = clean

    def _new(self, terms: dict) -> "MPoly":
        obj = MPoly.__new__(MPoly)
        obj.field = self.field
        obj.nvars = self.nvars
        obj.terms = terms
        return obj

    @classmethod
    def var(cls, field: Field, nvars: int, i: int) -> "MPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(field, nvars, {tuple(e): 1})

    @classmethod
    def const(cls, field: Field, nvars: int, code) -> "MPoly":
        return cls(field, nvars, {(0,) * nvars: code})

    @classmethod
    def from_uni(cls, f: UniPoly, nvars: int = 1, i: int = 0) -> "MPoly":
        terms = {}
        for k, c in enumerate(f.coeffs):
            if c:
                e = [0] * nvars
                e[i] = k
                terms[tuple(e)] = c
        return cls(f.field, nvars, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def _check(self, other):
        if not isinstance(other, MPoly):
            raise TypeError("expected a polynomial")
        if other.field != self.field:
            raise FieldMismatch("polynomials over different fields")
        if other.nvars != self.nvars:
            raise ArityMismatch("polynomials in different numbers of variables")

    def _plain(self) -> "MPoly":
        return MPoly._new(self, self.terms)

    # -- ring operations --------------------------------------------------------

    def __add__(self, other):
        self._check(other)
        add = self.field.add
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = add(out.get(e, 0), c)
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return self._sum_result(other, out)

    def _sum_result(self, other, terms):
        return self._new(terms)

    def __neg__(self):
        neg = self.field.neg
        return self._new({e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, code):
        code = _code(self.field, code)
        if not code:
            return self._new({})
        mul = self.field.mul
        return self._new({e: mul(c, code) for e, c in self.terms.items()})

    def _mul_terms(self, other) -> dict:
        add, mul = self.field.add, self.field.mul
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        bl = list(b.items())
        n = self.nvars
        for ea, ca in a.items():
            for eb, cb in bl:
                e = tuple(ea[i] + eb[i] for i in range(n))
                s = add(out.get(e, 0), mul(ca, cb))
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return out

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        return self._product_result(other, self._mul_terms(other))

    __rmul__ = __mul__

    def _product_result(self, other, terms):
        return self._new(terms)

    def frobenius(self) -> "MPoly":
        """self**p, computed termwise (the p-th power map is additive)."""
        p, powf = self.field.p, self.field.pow
        return self._new_scaled_degree(
            {tuple(k * p for k in e): powf(c, p) for e, c in self.terms.items()}, p
        )

    def _new_scaled_degree(self, terms, factor):
        return self._new(terms)

    def __pow__(self, k: int):
        """Power via base-p digits: f^k = prod_j (f^(p^j))^(k_j)."""
        if k < 0:
            raise ValueError("negative exponent")
        p = self.field.p
        result = None
        base = self
        while k:
            k, r = divmod(k, p)
            for _ in range(r):
                result = base if result is None else result * base
            if k:
                base = base.frobenius()
        if result is None:
            return self._one()
        return result

    def _one(self):
        return MPoly.const(self.field, self.nvars, 1)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.field == other.field and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- evaluation and substitution -------------------------------------------

    def _power_tables(self, values, one, mul):
        maxexp = [0] * self.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                if k > maxexp[i]:
                    maxexp[i] = k
        tables = []
        for i, v in enumerate(values):
            row = [one]
            for _ in range(maxexp[i]):
                row.append(mul(row[-1], v))
            tables.append(row)
        return tables

    def __call__(self, *point) -> int:
        """Evaluate at a point given as codes."""
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = tuple(point[0])
        if len(point) != self.nvars:
            raise ArityMismatch("point has wrong number of coordinates")
        point = [_code(self.field, x) for x in point]
        add, mul = self.field.add, self.field.mul
        tabs = self._power_tables(point, 1, mul)
        acc = 0
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = mul(v, tabs[i][k])
            acc = add(acc, v)
        return acc

    def compose(self, subs: Sequence[UniPoly]) -> UniPoly:
        """Substitute univariate polynomials for the variables."""
        if len(subs) != self.nvars:
            raise ArityMismatch(f"need {self.nvars} substitutions, got {len(subs)}")
        for s in subs:
            if s.field != self.field:
                raise FieldMismatch("substitution over another field")
        one = UniPoly.const(self.field, 1)
        tabs = self._power_tables(subs, one, lambda a, b: a * b)
        acc = UniPoly._raw(self.field, [])
        for e in sorted(self.terms):
            c = self.terms[e]
            factors = sorted(
                (tabs[i][k] for i, k in enumerate(e) if k),
                key=lambda f: sum(1 for x in f.coeffs if x),
            )
            v = UniPoly.const(self.field, c)
            for f in factors:
                v = v * f
            acc = acc + v
        return acc

    def substitute(self, subs: Sequence["MPoly"]) -> "MPoly":
        """Substitute polynomials (all in one common ring) for the variables."""
        if len(subs) != self.nvars:
            raise ArityMismatch(f"need {self.nvars} substitutions, got {len(subs)}")
        target = subs[0]
        one = MPoly.const(self.field, target.nvars, 1)
        tabs = self._power_tables([s._plain() for s in subs], one, lambda a, b: a * b)
        out = MPoly(self.field, target.nvars)
        for e, c in self.terms.items():
            v = one.scale(c)
            for i, k in enumerate(e):
                if k:
                    v = v * tabs[i][k]
            out = out + v
        return out

    def partial(self, i: int) -> "MPoly":
        """Formal partial derivative in variable i (returned as a plain MPoly)."""
        p = self.field.p
        mul = self.field.mul
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k % p:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = mul(c, k % p)
        return MPoly(self.field, self.nvars, out)

    def gradient_at(self, point) -> tuple[int, ...]:
        return tuple(self.partial(i)(point) for i in range(self.nvars))

    def taylor(self, point, max_order: int | None = None) -> "MPoly":
        """f(point + u) as a polynomial in u, truncated to total degree <= max_order.

        Coefficients are Hasse derivatives, so this is valid in every characteristic.
        """
        point = [_code(self.field, x) for x in point]
        if len(point) != self.nvars:
            raise ArityMismatch("point has wrong number of coordinates")
        p = self.field.p
        add, mul, powf = self.field.add, self.field.mul, self.field.pow
        out: dict = {}
        for e, c in self.terms.items():
            for k in _sub_multi_indices(e, max_order):
                v = c
                for i, ki in enumerate(k):
                    b = comb(e[i], ki) % p
                    if not b:
                        v = 0
                        break
                    v = mul(v, mul(b, powf(point[i], e[i] - ki)))
                if v:
                    s = add(out.get(k, 0), v)
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return MPoly(self.field, self.nvars, out)

    def dehomogenize(self, i: int) -> "MPoly":
        """Set variable i to 1 and drop it (result has nvars - 1 variables)."""
        add = self.field.add
        out: dict = {}
        for e, c in self.terms.items():
            ne = e[:i] + e[i + 1 :]
            s = add(out.get(ne, 0), c)
            if s:
                out[ne] = s
            else:
                out.pop(ne, None)
        return MPoly(self.field, self.nvars - 1, out)

    def homogeneous_part(self, d: int) -> "MPoly":
        return MPoly(self.field, self.nvars, {e: c for e, c in self.terms.items() if sum(e) == d})

    def low_order(self):
        """Smallest total degree of a term (INFINITE for 0)."""
        return min((sum(e) for e in self.terms), default=INFINITE)

    def format(self, names: Sequence[str] | None = None) -> str:
        """Canonical text: graded-lex descending, coefficients as field text."""
        if not self.terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.nvars)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (names[i] if k == 1 else f"{names[i]}^{k}") for i, k in enumerate(e) if k
            )
            ct = _coef_text(self.field, c)
            if not mono:
                parts.append(ct)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{ct}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self.format()})"


def _sub_multi_indices(e, max_order):
    """All k <= e componentwise with |k| <= max_order."""
    out = [()]
    for ei in e:
        out = [k + (j,) for k in out for j in range(ei + 1)]
    if max_order is not None:
        out = [k for k in out if sum(k) <= max_order]
    return out


class HomogForm(MPoly):
    """A weighted-homogeneous form; every term has the same weighted degree.

    ``weights`` defaults to all ones (straight projective space).
    """

    __slots__ = ("weights", "degree")

    def __init__(self, field: Field, nvars: int, terms: dict | None = None, weights=None, degree=None):
        super().__init__(field, nvars, terms)
        self.weights = tuple(weights) if weights is not None else (1,) * nvars
        if len(self.weights) != nvars or any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive, one per variable")
        degs = {self._wdeg(e) for e in self.terms}
        if len(degs) > 1:
            raise ValueError(f"terms of different weighted degrees {sorted(degs)}")
        if degs:
            d = degs.pop()
            if degree is not None and degree != d:
                raise ValueError(f"declared degree {degree} but terms have degree {d}")
            self.degree = d
        else:
            self.degree = degree if degree is not None else 0

    def _wdeg(self, e):
        return sum(w * k for w, k in zip(self.weights, e))

    def _new(self, terms):
        return HomogForm(self.field, self.nvars, terms, self.weights, self.degree)

    def _plain(self):
        return MPoly(self.field, self.nvars, self.terms)

    def _sum_result(self, other, terms):
        if isinstance(other, HomogForm) and (other.weights != self.weights or (other.terms and self.terms and other.degree != self.degree)):
            return MPoly(self.field, self.nvars, terms)
        deg = self.degree if self.terms else getattr(other, "degree", self.degree)
        return HomogForm(self.field, self.nvars, terms, self.weights, deg)

    def _product_result(self, other, terms):
        if isinstance(other, HomogForm) and other.weights == self.weights:
            return HomogForm(self.field, self.nvars, terms, self.weights, self.degree + other.degree)
        return MPoly(self.field, self.nvars, terms)

    def _one(self):
        return HomogForm(self.field, self.nvars, {(0,) * self.nvars: 1}, self.weights, 0)

    def _new_scaled_degree(self, terms, factor):
        return HomogForm(self.field, self.nvars, terms, self.weights, self.degree * factor)

    def __pow__(self, k):
        r = super().__pow__(k)
        if not r.terms:
            return HomogForm(self.field, self.nvars, {}, self.weights, self.degree * k)
        return r

    def scale(self, code):
        r = super().scale(code)
        return HomogForm(self.field, self.nvars, r.terms, self.weights, self.degree)

    def linear_substitute(self, matrix) -> "HomogForm":
        """F(M x) for a square matrix of codes (straight weights only)."""
        if any(w != 1 for w in self.weights):
            raise ValueError("linear substitution needs unit weights")
        n = self.nvars
        rows = [
            HomogForm(self.field, n, {tuple(int(i == j) for i in range(n)): matrix[r][j] for j in range(n)}, degree=1)
            for r in range(n)
        ]
        out = self.substitute(rows)
        return HomogForm(self.field, n, out.terms, self.weights, self.degree)

    def proportional_to(self, other: "MPoly"):
        """Return lam with self == lam * other, or None if no such nonzero scalar exists."""
        if set(self.terms) != set(other.terms):
            return None
        if not self.terms:
            return 1
        e0 = next(iter(other.terms))
        lam = self.field.div(self.terms[e0], other.terms[e0])
        mul = self.field.mul
        for e, c in other.terms.items():
            if mul(c, lam) != self.terms[e]:
                return None
        return lam


def compose(F: MPoly, subs: Sequence[UniPoly]) -> UniPoly:
    """Exact expansion of F(subs_1, ..., subs_n)."""
    return F.compose(subs)


def linear_form(field: Field, coeffs: Sequence, weights=None) -> HomogForm:
    """sum_i coeffs[i] * x_i as a HomogForm of degree 1."""
    n = len(coeffs)
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * n
        e[i] = 1
        terms[tuple(e)] = _code(field, c)
    return HomogForm(field, n, terms, weights=weights, degree=1)


# -----------------------------------------------------------------------------
# rational expressions
# -----------------------------------------------------------------------------


class RationalExpr:
    """num / den with no cancellation; equality is decided by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = _one_like(num)
        if den.is_zero():
            raise ZeroDenominator("denominator is the zero polynomial")
        self.num = num
        self.den = den

    @staticmethod
    def _lift(x, like):
        if isinstance(x, RationalExpr):
            return x
        return RationalExpr(x, _one_like(like))

    def __add__(self, other):
        other = self._lift(other, self.num)
        if self.den == other.den:
            return RationalExpr(self.num + other.num, self.den)
        return RationalExpr(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalExpr(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other, self.num))

    def __rsub__(self, other):
        return self._lift(other, self.num) - self

    def __mul__(self, other):
        other = self._lift(other, self.num)
        return RationalExpr(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other, self.num)
        if other.num.is_zero():
            raise ZeroDenominator("division by the zero function")
        return RationalExpr(self.num * other.den, self.den * other.num)

    def __pow__(self, k: int):
        if k < 0:
            return RationalExpr(self.den, self.num) ** (-k)
        return RationalExpr(self.num**k, self.den**k)

    def __repr__(self):
        return f"RationalExpr({self.num!r} / {self.den!r})"


def _one_like(x):
    if isinstance(x, UniPoly):
        return UniPoly.const(x.field, 1)
    return MPoly.const(x.field, x.nvars, 1)


def rational_identity(lhs, rhs) -> bool:
    """True iff lhs == rhs as rational functions, tested as num_l*den_r - num_r*den_l == 0."""
    if not isinstance(lhs, RationalExpr):
        lhs = RationalExpr(lhs)
    if not isinstance(rhs, RationalExpr):
        rhs = RationalExpr(rhs)
    if lhs.den.is_zero() or rhs.den.is_zero():
        raise ZeroDenominator("denominator is the zero polynomial")
    diff = lhs.num * rhs.den - rhs.num * lhs.den
    return diff.is_zero()
