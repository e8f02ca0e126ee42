"""Prime fields F_p and the quadratic extension F_{p^2}.

Elements are small immutable value objects.  The heavy linear algebra in
:mod:`hilbertkunz.linalg` works on raw integers mod p for speed; these
classes are used where readability matters more (roots of the tangential
quadric, tau sums, tests of the field axioms).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisionByZero, NotPrime, PreconditionViolated

# Deterministic Miller-Rabin bases for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_power_of(q: int, p: int) -> bool:
    """True iff q = p**e for some e >= 0."""
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def is_square_mod(a: int, p: int) -> bool:
    a %= p
    if a == 0 or p == 2:
        return True
    return pow(a, (p - 1) // 2, p) == 1


def smallest_nonresidue(p: int) -> int:
    if p == 2:
        raise PreconditionViolated("F_2 has no quadratic non-residue")
    for c in range(2, p):
        if not is_square_mod(c, p):
            return c
    raise AssertionError("unreachable for odd prime p")


def sqrt_mod(a: int, p: int) -> int:
    """A square root of a mod p (Tonelli-Shanks).  Raises if a is a non-residue."""
    a %= p
    if a == 0 or p == 2:
        return a
    if not is_square_mod(a, p):
        raise PreconditionViolated(f"{a} is not a square mod {p}")
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = smallest_nonresidue(p)
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    @property
    def order(self) -> int:
        return self.p

    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def elements(self):
        return [FieldElement(v, self) for v in range(self.p)]


def make_prime_field(p: int) -> PrimeField:
    if p < 2:
        raise NotPrime(f"{p} is not prime")
    return PrimeField(p)


@dataclass(frozen=True)
class FieldElement:
    value: int
    field: PrimeField

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise ValueError("non-canonical representative")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise TypeError("elements of different fields")
            return other.value
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def _make(self, v: int) -> "FieldElement":
        return FieldElement(v % self.field.p, self.field)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._make(self.value * o)

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * inv(self._make(o))

    def __pow__(self, e: int):
        return fpow(self, e)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.field.p))

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.field.p})"


def inv(x: FieldElement) -> FieldElement:
    if x.value == 0:
        raise DivisionByZero("inverse of zero")
    return FieldElement(pow(x.value, -1, x.field.p), x.field)


def fpow(x: FieldElement, e: int) -> FieldElement:
    if e < 0:
        return fpow(inv(x), -e)
    return FieldElement(pow(x.value, e, x.field.p), x.field)


class QuadraticExtension:
    """F_p[w] / (w^2 - c1*w - c0) with an irreducible defining polynomial.

    For odd p the modulus is w^2 = delta with delta the smallest non-residue.
    For p = 2 it is w^2 = w + 1, giving F_4.
    """

    def __init__(self, p: int):
        self.base = make_prime_field(p)
        self.p = p
        if p == 2:
            self.c1, self.c0 = 1, 1
        else:
            self.c1, self.c0 = 0, smallest_nonresidue(p)
            if is_square_mod(self.c0, p):
                raise PreconditionViolated("delta must be a non-residue")

    @property
    def delta(self) -> int:
        return self.c0

    def __call__(self, a: int, b: int = 0) -> "QuadExtElement":
        return QuadExtElement(a % self.p, b % self.p, self)

    def embed(self, x) -> "QuadExtElement":
        return self(int(x), 0)

    def __eq__(self, other):
        return isinstance(other, QuadraticExtension) and other.p == self.p

    def __hash__(self):
        return hash(("Fp2", self.p))

    def __repr__(self):
        return f"QuadraticExtension({self.p})"


@dataclass(frozen=True)
class QuadExtElement:
    """a + b*w with w^2 = c1*w + c0."""

    a: int
    b: int
    ext: QuadraticExtension

    def _coerce(self, other) -> "QuadExtElement":
        if isinstance(other, QuadExtElement):
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ext.embed(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ext(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return self.ext(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.ext(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        e = self.ext
        bb = self.b * o.b
        return e(self.a * o.a + bb * e.c0, self.a * o.b + self.b * o.a + bb * e.c1)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.ext(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def norm(self) -> int:
        # N(a + b w) = (a + b w)(a + b w'), w + w' = c1, w w' = -c0
        e = self.ext
        return (self.a * self.a + self.a * self.b * e.c1 - self.b * self.b * e.c0) % e.p

    def conjugate(self) -> "QuadExtElement":
        return self.ext(self.a + self.b * self.ext.c1, -self.b)

    def inverse(self) -> "QuadExtElement":
        nm = self.norm()
        if nm == 0:
            raise DivisionByZero("inverse of zero")
        ninv = pow(nm, -1, self.ext.p)
        c = self.conjugate()
        return self.ext(c.a * ninv, c.b * ninv)

    def __truediv__(self, other):
        o = self._coerce(other)
        return self * o.inverse()

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def in_base_field(self) -> bool:
        return self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, QuadExtElement):
            return self.ext == other.ext and (self.a, self.b) == (other.a, other.b)
        if isinstance(other, (int, FieldElement)):
            return self.b == 0 and self.a == int(other) % self.ext.p
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.ext.p))

    def __repr__(self):
        if self.b == 0:
            return f"{self.a}"
        return f"{self.a}+{self.b}w"


def quadratic_roots(b: int, c: int, p: int) -> tuple[QuadExtElement, QuadExtElement]:
    """Roots of T^2 + b*T + c over F_p, as elements of F_{p^2}."""
    ext = QuadraticExtension(p)
    b %= p
    c %= p
    if p == 2:
        if b == 0:
            # T^2 + c = (T + c)^2 since c is its own square root in F_2
            return ext(c), ext(c)
        if c == 0:
            return ext(0), ext(1)
        # T^2 + T + 1 is the defining polynomial of w
        return ext(0, 1), ext(1, 1)
    disc = (b * b - 4 * c) % p
    half = pow(2, -1, p)
    if is_square_mod(disc, p):
        r = ext(sqrt_mod(disc, p))
    else:
        # disc = delta * s^2 for a residue s^2, so sqrt(disc) = s * w
        s = sqrt_mod(disc * pow(ext.delta, -1, p), p)
        r = ext(0, s)
    u = (ext(-b) + r) * half
    v = (ext(-b) - r) * half
    return u, v
