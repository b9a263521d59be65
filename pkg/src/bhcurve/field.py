"""Exact arithmetic in finite fields F_{p^n}.

Elements are stored as integer *codes*: the element ``c0 + c1*a + ... + c_{n-1}*a^{n-1}``
(``a`` a root of the field modulus, ``0 <= ci < p``) has code ``c0 + c1*p + ... ``.
The prime subfield therefore occupies codes ``0..p-1`` in every extension,
which lets forms with F_p coefficients be reused verbatim over any F_{p^n}.

Multiplication goes through discrete log / antilog tables and addition in odd
characteristic through a Zech-logarithm table, so every operation on codes is a
handful of list lookups.  Polynomial code in :mod:`bhcurve.poly` works on codes
directly; :class:`FieldElem` is the user-facing wrapper.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    FieldMismatch,
    NotAPrimePower,
    NotASubfieldOrder,
    NotPrime,
    ReducibleModulus,
)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class PrimePower:
    p: int
    nu: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        if self.nu < 1:
            raise NotAPrimePower("exponent must be positive")

    @property
    def q(self) -> int:
        return self.p**self.nu

    def __int__(self):
        return self.q


def prime_power(q: int | PrimePower) -> PrimePower:
    """Split q = p^nu; raises NotAPrimePower otherwise."""
    if isinstance(q, PrimePower):
        return q
    q = int(q)
    if q < 2:
        raise NotAPrimePower(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    p = ps[0]
    nu = 0
    m = q
    while m > 1:
        m //= p
        nu += 1
    return PrimePower(p, nu)


# -- F_p[x] helpers (lists of ints, low-to-high) used for modulus checks --------


def _trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _fp_mod(f, g, p):
    f = list(f)
    inv = pow(g[-1], p - 2, p)
    dg = len(g) - 1
    while len(_trim(f)) - 1 >= dg:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
    return f


def _fp_mulmod(f, g, m, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _fp_mod(out, m, p)


def _fp_powmod(f, e, m, p):
    result = [1]
    base = _fp_mod(f, m, p)
    while e:
        if e & 1:
            result = _fp_mulmod(result, base, m, p)
        base = _fp_mulmod(base, base, m, p)
        e >>= 1
    return result


def _fp_gcd(f, g, p):
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        f, g = g, _fp_mod(f, g, p)
    return f


def _fp_sub(f, g, p):
    n = max(len(f), len(g))
    out = [((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0)) % p for i in range(n)]
    return _trim(out)


def is_irreducible_mod_p(modulus, p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    f = _trim([c % p for c in modulus])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    # x^(p^n) == x mod f
    h = x
    for _ in range(n):
        h = _fp_powmod(h, p, f, p)
    if _fp_sub(h, x, p):
        return False
    for r in prime_factors(n):
        h = x
        for _ in range(n // r):
            h = _fp_powmod(h, p, f, p)
        g = _fp_gcd(f, _fp_sub(h, x, p), p)
        if len(g) > 1:
            return False
    return True


def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree n, comparing (c0, c1, ...)."""
    if n == 1:
        return (0, 1)
    total = p**n
    for idx in range(total):
        # idx enumerates (c0, ..., c_{n-1}) lexicographically with c0 most significant
        digits = []
        m = idx
        for _ in range(n):
            digits.append(m % p)
            m //= p
        coeffs = tuple(reversed(digits)) + (1,)
        if coeffs[0] == 0:
            continue
        if is_irreducible_mod_p(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


def parse_modulus(text: str, p: int) -> tuple[int, ...]:
    """Parse an integer polynomial in x, e.g. ``x^2+1``; coefficients reduced mod p."""
    coeffs = _parse_poly_terms(text, "x")
    deg = max(coeffs) if coeffs else 0
    return tuple(coeffs.get(i, 0) % p for i in range(deg + 1))


_TERM_RE = re.compile(r"^([+-]?\d*)\*?(?:([a-z])(?:(?:\^|\*\*)(\d+))?)?$")


def _parse_poly_terms(text: str, var: str) -> dict[int, int]:
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    s = s.replace("-", "+-")
    out: dict[int, int] = {}
    for tok in s.split("+"):
        if tok == "":
            continue
        m = _TERM_RE.match(tok)
        if not m or (m.group(2) and m.group(2) != var) or (not m.group(1).lstrip("+-") and not m.group(2)):
            raise ValueError(f"cannot parse term {tok!r}")
        coef_txt, v, exp_txt = m.groups()
        if coef_txt in ("", "+"):
            coef = 1
        elif coef_txt == "-":
            coef = -1
        else:
            coef = int(coef_txt)
        exp = 0 if not v else int(exp_txt or 1)
        out[exp] = out.get(exp, 0) + coef
    return out


class Field:
    """The finite field F_p[a]/(modulus(a)).

    Instances are immutable after construction; build them with :func:`make_field`.
    """

    def __init__(self, p: int, n: int, modulus: tuple[int, ...]):
        self.p = p
        self.n = n
        self.order = p**n
        self.modulus = tuple(modulus)
        self.char = PrimePower(p, 1)
        self._m = self.order - 1
        self._build_tables()
        if n == 1:
            self.add = self._add_prime
            self.sub = self._sub_prime
            self.neg = self._neg_prime
            self.mul = self._mul_prime
        elif p == 2:
            self.add = self._add_xor
            self.sub = self._add_xor
            self.neg = self._neg_char2
            self.mul = self._mul_log
        else:
            self.add = self._add_zech
            self.sub = self._sub_zech
            self.neg = self._neg_table
            self.mul = self._mul_log

    # -- construction ---------------------------------------------------------

    def _digits(self, code):
        out = []
        for _ in range(self.n):
            out.append(code % self.p)
            code //= self.p
        return out

    def _undigits(self, digits):
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def _slow_mul(self, a, b):
        p, n = self.p, self.n
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * n - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        red = _fp_mod(prod, list(self.modulus), p)
        red += [0] * (n - len(red))
        return self._undigits(red)

    def _build_tables(self):
        Q, m = self.order, self._m
        if m == 1:
            gen = 1
        else:
            gen = None
            for cand in range(2 if self.n == 1 else self.p, Q):
                x, k = cand, 1
                while x != 1:
                    x = self._slow_mul(x, cand)
                    k += 1
                if k == m:
                    gen = cand
                    break
        self.primitive = gen
        exp = [1] * (2 * m)
        x = 1
        for k in range(m):
            exp[k] = x
            x = self._slow_mul(x, gen)
        for k in range(m, 2 * m):
            exp[k] = exp[k - m]
        log = [0] * Q
        for k in range(m):
            log[exp[k]] = k
        self._exp = exp
        self._log = log
        if self.n > 1 and self.p != 2:
            # zech[k] = log(1 + g^k) or -1 when 1 + g^k == 0
            zech = [0] * m
            for k in range(m):
                d = self._digits(exp[k])
                d[0] = (d[0] + 1) % self.p
                s = self._undigits(d)
                zech[k] = log[s] if s else -1
            self._zech = zech
            self._negtab = [0] + [
                self._undigits([(-c) % self.p for c in self._digits(c0)]) for c0 in range(1, Q)
            ]

    # -- code arithmetic ------------------------------------------------------

    def _add_prime(self, a, b):
        return (a + b) % self.p

    def _sub_prime(self, a, b):
        return (a - b) % self.p

    def _neg_prime(self, a):
        return (-a) % self.p

    def _mul_prime(self, a, b):
        return a * b % self.p

    @staticmethod
    def _add_xor(a, b):
        return a ^ b

    @staticmethod
    def _neg_char2(a):
        return a

    def _mul_log(self, a, b):
        if not a or not b:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _add_zech(self, a, b):
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self._m]
        if z < 0:
            return 0
        return self._exp[la + z]

    def _neg_table(self, a):
        return self._negtab[a]

    def _sub_zech(self, a, b):
        return self._add_zech(a, self._negtab[b])

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._exp[(self._m - self._log[a]) % self._m]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, k):
        """a**k by square-and-multiply on codes (0**0 == 1)."""
        if k < 0:
            a, k = self.inv(a), -k
        result = 1
        mul = self.mul
        while k:
            if k & 1:
                result = mul(result, a)
            a = mul(a, a)
            k >>= 1
        return result

    def from_int(self, c: int) -> int:
        return c % self.p

    # -- public helpers ---------------------------------------------------------

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1)

    @property
    def gen(self) -> "FieldElem":
        """The class of ``a``, a root of the modulus."""
        if self.n == 1:
            return FieldElem(self, (-self.modulus[0]) % self.p)
        return FieldElem(self, self.p)

    def __call__(self, value) -> "FieldElem":
        if isinstance(value, FieldElem):
            if value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, str):
            return self.parse(value)
        return FieldElem(self, int(value) % self.p)

    def elem(self, code: int) -> "FieldElem":
        return FieldElem(self, code)

    def codes(self) -> range:
        return range(self.order)

    def elements(self) -> list["FieldElem"]:
        return [FieldElem(self, c) for c in range(self.order)]

    def coords(self, code: int) -> tuple[int, ...]:
        return tuple(self._digits(code))

    def from_coords(self, coords) -> int:
        coords = [int(c) % self.p for c in coords]
        if len(coords) != self.n:
            raise ValueError("coordinate vector has wrong length")
        return self._undigits(coords)

    def subfield_codes(self, sub_order: int) -> list[int]:
        """Codes of the subfield with ``sub_order`` elements, ascending."""
        self._check_sub_order(sub_order)
        return [c for c in range(self.order) if self.pow(c, sub_order) == c]

    def _check_sub_order(self, sub_order):
        d = 0
        m = sub_order
        while m % self.p == 0 and m > 1:
            m //= self.p
            d += 1
        if m != 1 or d == 0 or self.n % d:
            raise NotASubfieldOrder(f"{sub_order} is not the order of a subfield of F_{self.order}")

    def format(self, code: int) -> str:
        if self.n == 1:
            return str(code)
        terms = []
        for i, c in reversed(list(enumerate(self._digits(code)))):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "a" if i == 1 else f"a^{i}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    def parse(self, text: str) -> "FieldElem":
        """Parse the ``2*a+1`` syntax; plain integers are reduced mod p."""
        terms = _parse_poly_terms(text, "a")
        code = 0
        g = self.gen.code
        for e, c in terms.items():
            code = self.add(code, self.mul(c % self.p, self.pow(g, e)))
        return FieldElem(self, code)

    def embedding_into(self, big: "Field"):
        """Return a function mapping codes of self into codes of ``big``.

        The image of ``a`` is the least-code root of self's modulus in ``big``.
        """
        if big.p != self.p or big.n % self.n:
            raise NotASubfieldOrder(f"F_{self.order} does not embed in F_{big.order}")
        if big == self:
            return lambda c: c
        root = None
        for c in range(big.order):
            acc = 0
            for coef in reversed(self.modulus):
                acc = big.add(big.mul(acc, c), coef)
            if acc == 0:
                root = c
                break
        powers = [big.pow(root, i) for i in range(self.n)]
        table = []
        for code in range(self.order):
            acc = 0
            for i, d in enumerate(self._digits(code)):
                if d:
                    acc = big.add(acc, big.mul(d, powers[i]))
            table.append(acc)
        return table.__getitem__

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.n, self.modulus) == (
            other.p,
            other.n,
            other.modulus,
        )

    def __hash__(self):
        return hash((self.p, self.n, self.modulus))

    def __repr__(self):
        mod = " + ".join(
            f"{c}*x^{i}" if i > 1 else (f"{c}*x" if i == 1 else str(c))
            for i, c in reversed(list(enumerate(self.modulus)))
            if c
        )
        return f"GF({self.p}^{self.n}, modulus {mod})"


class FieldElem:
    """An element of a :class:`Field`; immutable, hashable, exact."""

    __slots__ = ("field", "code")

    def __init__(self, field: Field, code: int):
        if not 0 <= code < field.order:
            raise ValueError(f"code {code} out of range for {field!r}")
        self.field = field
        self.code = code

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.code)

    def _other(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.field.add(self.code, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.field.sub(self.code, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.field.sub(o, self.code))

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.field.mul(self.code, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.field.div(self.code, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.field.div(o, self.code))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.code))

    def __pow__(self, k: int):
        return power(self, k)

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.code))

    def frobenius(self, k: int = 1):
        """e -> e^(p^k)."""
        return power(self, self.field.p**k)

    def is_zero(self):
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.code))

    def __str__(self):
        return self.field.format(self.code)

    def __repr__(self):
        return f"FieldElem({self}, GF({self.field.order}))"


@lru_cache(maxsize=None)
def _cached_field(p: int, n: int, modulus: tuple[int, ...]) -> Field:
    return Field(p, n, modulus)


def make_field(p: int, n: int = 1, modulus=None) -> Field:
    """Construct F_{p^n}; the default modulus is the lexicographically least irreducible.

    ``modulus`` may be a coefficient sequence (low-to-high, monic) or a string
    such as ``"x^2+1"``.  Identical arguments return the identical object.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1:
        raise ValueError("extension degree must be >= 1")
    if modulus is None:
        mod = default_modulus(p, n)
    else:
        if isinstance(modulus, str):
            mod = parse_modulus(modulus, p)
        else:
            mod = tuple(int(c) % p for c in modulus)
        mod = tuple(_trim(list(mod)))
        if len(mod) != n + 1 or mod[-1] != 1:
            raise ReducibleModulus(f"modulus must be monic of degree {n}")
        if not is_irreducible_mod_p(mod, p):
            raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
    return _cached_field(p, n, mod)


def gf(order: int, modulus=None) -> Field:
    """The field with ``order`` elements."""
    pp = prime_power(order)
    return make_field(pp.p, pp.nu, modulus)


def extension(q: int, k: int, modulus=None) -> Field:
    """F_{q^k} with the default (or given) modulus."""
    pp = prime_power(q)
    return make_field(pp.p, pp.nu * k, modulus)


def power(e: FieldElem, k: int) -> FieldElem:
    """e**k by square-and-multiply; power(e, 0) is 1, including for e = 0."""
    if k < 0:
        raise ValueError("negative exponent")
    return FieldElem(e.field, e.field.pow(e.code, k))


def enumerate_field(field: Field) -> list[FieldElem]:
    """All elements in code order (0, 1, .., p-1, a, a+1, ...)."""
    return field.elements()


def subfield_test(e: FieldElem, sub_order: int) -> bool:
    """True iff e lies in the subfield of order ``sub_order``, i.e. e^sub_order == e."""
    e.field._check_sub_order(sub_order)
    return e.field.pow(e.code, sub_order) == e.code
