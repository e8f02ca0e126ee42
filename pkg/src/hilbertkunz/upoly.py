"""Dense univariate polynomials in t.

:class:`RationalPoly` is the user-facing type with Fraction coefficients.
The module-level helpers work on plain ``list[int]`` coefficient vectors
(lowest degree first) either over Z (``mod=None``) or over F_p; Bareiss
elimination runs on those.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Optional

IntPoly = list[int]


def trim(a: IntPoly) -> IntPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def padd(a: IntPoly, b: IntPoly, mod: Optional[int] = None) -> IntPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    if mod:
        out = [c % mod for c in out]
    return trim(out)


def pneg(a: IntPoly, mod: Optional[int] = None) -> IntPoly:
    return [(-c) % mod for c in a] if mod else [-c for c in a]


def psub(a: IntPoly, b: IntPoly, mod: Optional[int] = None) -> IntPoly:
    return padd(a, pneg(b, mod), mod)


def pmul(a: IntPoly, b: IntPoly, mod: Optional[int] = None) -> IntPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    if mod:
        out = [c % mod for c in out]
    return trim(out)


def pdiv_exact(a: IntPoly, b: IntPoly, mod: Optional[int] = None) -> IntPoly:
    """a / b, raising ArithmeticError if b does not divide a."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lead = len(b) - 1, b[-1]
    inv = pow(lead, -1, mod) if mod else None
    if len(a) - 1 < db:
        if trim(a):
            raise ArithmeticError("inexact polynomial division")
        return []
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = a[k]
        if c == 0:
            continue
        if mod:
            qc = c * inv % mod
        else:
            qc, r = divmod(c, lead)
            if r:
                raise ArithmeticError("inexact polynomial division")
        quot[k - db] = qc
        for j, bj in enumerate(b):
            a[k - db + j] -= qc * bj
        if mod:
            for j in range(k - db, k + 1):
                a[j] %= mod
    if any(a[:db]):
        raise ArithmeticError("inexact polynomial division")
    return trim(quot)


def ppow(a: IntPoly, e: int, mod: Optional[int] = None) -> IntPoly:
    result, base = [1], list(a)
    while e:
        if e & 1:
            result = pmul(result, base, mod)
        base = pmul(base, base, mod)
        e >>= 1
    return result


def peval(a: IntPoly, x: int, mod: Optional[int] = None) -> int:
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
        if mod:
            acc %= mod
    return acc


class RationalPoly:
    """Polynomial in t with Fraction coefficients, lowest degree first."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @classmethod
    def t(cls) -> "RationalPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return Fraction(0)

    def __add__(self, other) -> "RationalPoly":
        other = _as_rpoly(other)
        n = max(len(self.coefficients), len(other.coefficients))
        return RationalPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "RationalPoly":
        return RationalPoly(-c for c in self.coefficients)

    def __sub__(self, other) -> "RationalPoly":
        return self + (-_as_rpoly(other))

    def __rsub__(self, other) -> "RationalPoly":
        return _as_rpoly(other) - self

    def __mul__(self, other) -> "RationalPoly":
        if isinstance(other, (int, Fraction)):
            return RationalPoly(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return RationalPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RationalPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "RationalPoly":
        result, base = RationalPoly([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalPoly([other])
        return isinstance(other, RationalPoly) and self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def denominator(self) -> int:
        return lcm(1, *(c.denominator for c in self.coefficients))

    def scaled_integer(self, scale: int) -> IntPoly:
        out = []
        for c in self.coefficients:
            v = c * scale
            if v.denominator != 1:
                raise ArithmeticError("scale does not clear denominators")
            out.append(v.numerator)
        return trim(out)

    def reduce_mod(self, p: int) -> IntPoly:
        """Image in F_p[t]; every denominator must be a unit mod p."""
        out = []
        for c in self.coefficients:
            if c.denominator % p == 0:
                raise ArithmeticError(f"denominator {c.denominator} not invertible mod {p}")
            out.append(c.numerator * pow(c.denominator, -1, p) % p)
        return trim(out)

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if not self.coefficients:
            return "0"
        parts = []
        for i, c in enumerate(self.coefficients):
            if c:
                parts.append(f"({c})" + ("" if i == 0 else "*t" if i == 1 else f"*t^{i}"))
        return " + ".join(parts)


def _as_rpoly(x) -> RationalPoly:
    return x if isinstance(x, RationalPoly) else RationalPoly([x])
