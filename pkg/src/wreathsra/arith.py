"""Exact rational and cyclotomic arithmetic.

Rationals are :class:`fractions.Fraction`.  Elements of the cyclotomic field
Q(zeta_ell) are stored as coefficient vectors in the power basis
1, zeta, ..., zeta^(phi(ell)-1), reduced modulo the cyclotomic polynomial,
so equal field elements always have equal coefficient vectors.
"""
from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction

#: largest supported field degree phi(ell)
MAX_DEGREE = 64


class OrderMismatchError(ValueError):
    """Raised when combining cyclotomic numbers of different orders."""


class FieldLimitError(ValueError):
    """Raised for cyclotomic orders whose degree exceeds :data:`MAX_DEGREE`."""


# ---------------------------------------------------------------------------
# rationals

def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, ``"p"``, ints or decimal strings into a Fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"cannot parse {text!r} as a rational")


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


# ---------------------------------------------------------------------------
# integer polynomials, low degree first

def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _poly_trim(out)


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Divide a by b over Q (b nonzero); returns (quotient, remainder)."""
    a = [Fraction(x) for x in a]
    _poly_trim(a)
    b = [Fraction(x) for x in b]
    _poly_trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / lead
        q[shift] = f
        for i, y in enumerate(b):
            a[i + shift] -= f * y
        a.pop()
        _poly_trim(a)
    return _poly_trim(q), a


def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def _cyclotomic_polynomial(ell: int) -> tuple[int, ...]:
    num = [-1] + [0] * (ell - 1) + [1]
    den = [1]
    for d in range(1, ell):
        if ell % d == 0:
            den = _poly_mul(den, _cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    assert not r
    assert all(c.denominator == 1 for c in q)
    return tuple(int(c) for c in q)


def cyclotomic_polynomial(ell: int) -> list[int]:
    """Integer coefficients of Phi_ell, constant term first.

    >>> cyclotomic_polynomial(4)
    [1, 0, 1]
    """
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {ell!r}")
    return list(_cyclotomic_polynomial(ell))


@lru_cache(maxsize=None)
def _power_table(ell: int) -> tuple[tuple[Fraction, ...], ...]:
    """Reduced coordinates of zeta^e for e = 0..ell-1."""
    phi = _cyclotomic_polynomial(ell)
    deg = len(phi) - 1
    rows = []
    cur = [Fraction(0)] * deg
    cur[0] = Fraction(1)
    for _ in range(ell):
        rows.append(tuple(cur))
        # multiply by zeta and reduce with the monic Phi
        top = cur[-1]
        nxt = [Fraction(0)] + cur[:-1]
        if top:
            for i in range(deg):
                nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def _reduce(ell: int, poly: Sequence) -> tuple[Fraction, ...]:
    table = _power_table(ell)
    deg = len(table[0])
    out = [Fraction(0)] * deg
    for e, c in enumerate(poly):
        if c:
            row = table[e % ell]
            for i in range(deg):
                if row[i]:
                    out[i] += c * row[i]
    return tuple(out)


def _check_order(ell: int) -> None:
    if not isinstance(ell, int) or ell < 1:
        raise ValueError(f"cyclotomic order must be a positive integer, got {ell!r}")
    if euler_phi(ell) > MAX_DEGREE:
        raise FieldLimitError(
            f"phi({ell}) = {euler_phi(ell)} exceeds the supported degree {MAX_DEGREE}")


Scalar = Union[int, Fraction, "Cyclotomic"]


class Cyclotomic:
    """Immutable element of Q(zeta_ell) with zeta = exp(2 pi i / ell)."""

    __slots__ = ("order", "coeffs", "_hash")

    def __init__(self, order: int, coeffs: Iterable = ()):
        _check_order(order)
        coeffs = [parse_rational(c) for c in coeffs]
        deg = euler_phi(order)
        if len(coeffs) > deg:
            coeffs = list(_reduce(order, coeffs))
        coeffs = tuple(coeffs) + (Fraction(0),) * (deg - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Cyclotomic is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def _raw(cls, order: int, coeffs: tuple) -> "Cyclotomic":
        obj = object.__new__(cls)
        object.__setattr__(obj, "order", order)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def from_rational(cls, order: int, q) -> "Cyclotomic":
        _check_order(order)
        deg = euler_phi(order)
        return cls._raw(order, (parse_rational(q),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zeta(cls, order: int, power: int = 1) -> "Cyclotomic":
        """The root of unity zeta_order ** power (negative powers allowed)."""
        _check_order(order)
        return cls._raw(order, _power_table(order)[power % order])

    @classmethod
    def from_polynomial(cls, order: int, poly: Sequence) -> "Cyclotomic":
        """Reduce sum poly[e] * zeta^e (any length) modulo Phi_order."""
        _check_order(order)
        return cls._raw(order, _reduce(order, [parse_rational(c) for c in poly]))

    # -- coercion -----------------------------------------------------------
    def _coerce(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cyclotomic orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic.from_rational(self.order, other)
        return NotImplemented

    # -- predicates ---------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                # compare through rational values only; distinct fields otherwise
                return (self.is_rational() and other.is_rational()
                        and self.coeffs[0] == other.coeffs[0])
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            h = hash(self.coeffs[0]) if self.is_rational() else hash((self.order, self.coeffs))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._raw(self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.order, tuple(-a for a in self.coeffs))

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return Cyclotomic._raw(self.order, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Cyclotomic._raw(self.order, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_rational():
            return self * o.coeffs[0]
        if self.is_rational():
            return o * self.coeffs[0]
        prod = [Fraction(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Cyclotomic._raw(self.order, _reduce(self.order, prod))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        """Multiplicative inverse via the extended Euclidean algorithm against Phi."""
        if not self:
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        if self.is_rational():
            return Cyclotomic.from_rational(self.order, 1 / self.coeffs[0])
        # invariant: r_i = s_i * a (mod Phi)
        r0 = [Fraction(c) for c in _cyclotomic_polynomial(self.order)]
        r1 = _poly_trim(list(self.coeffs))
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        # r0 is a nonzero constant because Phi is irreducible
        assert len(r0) == 1
        return Cyclotomic.from_polynomial(self.order, [c / r0[0] for c in s0])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division of cyclotomic number by zero")
            return Cyclotomic._raw(self.order, tuple(a / other for a in self.coeffs))
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Cyclotomic.from_rational(self.order, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugate: zeta -> zeta^(ell-1)."""
        ell = self.order
        poly = [Fraction(0)] * ell
        for e, c in enumerate(self.coeffs):
            poly[(-e) % ell] += c
        return Cyclotomic.from_polynomial(ell, poly)

    def embed_complex(self) -> complex:
        return embed_complex(self)

    # -- display / serialisation -------------------------------------------
    def __repr__(self) -> str:
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            cs = format_rational(c)
            if e == 0:
                terms.append(cs)
            else:
                mon = "z" if e == 1 else f"z^{e}"
                terms.append(mon if c == 1 else f"({cs})*{mon}")
        body = " + ".join(terms) if terms else "0"
        return f"Cyclotomic[{self.order}]({body})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Cyclotomic":
        return cls(int(obj["order"]), [parse_rational(c) for c in obj["coeffs"]])


def _poly_sub(a: Sequence, b: Sequence) -> list:
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _poly_trim(out)


def embed_complex(a) -> complex:
    """Evaluate at zeta = exp(2 pi i / ell); rationals map to real floats."""
    if isinstance(a, Cyclotomic):
        z = cmath.exp(2j * cmath.pi / a.order)
        total = 0j
        for e, c in enumerate(a.coeffs):
            if c:
                total += float(c) * z ** e
        return total
    return complex(a)


def simplify(x):
    """Collapse rational cyclotomic numbers to Fraction; ints become Fraction."""
    if isinstance(x, Cyclotomic):
        return x.coeffs[0] if x.is_rational() else x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    return x


def as_cyclotomic(x, order: int) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        if x.order != order:
            if x.is_rational():
                return Cyclotomic.from_rational(order, x.coeffs[0])
            raise OrderMismatchError(f"cyclotomic orders differ: {x.order} vs {order}")
        return x
    return Cyclotomic.from_rational(order, parse_rational(x))


def scalar_to_json(x):
    """Exact JSON form: "p/q" for rationals, an order/coeffs object otherwise."""
    x = simplify(x)
    if isinstance(x, Cyclotomic):
        return x.to_json()
    return format_rational(x)


def scalar_from_json(obj, order: int | None = None):
    if isinstance(obj, dict):
        c = Cyclotomic.from_json(obj)
        if order is not None and c.order != order and not c.is_rational():
            raise OrderMismatchError(f"cyclotomic orders differ: {c.order} vs {order}")
        return simplify(c)
    return parse_rational(obj)

