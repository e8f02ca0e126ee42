"""Hankel determinants of Legendre polynomials and the syzygy matrices built
from expansions of (1 - 2tx + x^2)^((q +- 1)/2) over F_p[t].

Legendre polynomials P_n come from the three-term recurrence and are
cross-checked against the formal expansion of 1/sqrt(1 - 2tx + x^2); the
companion sequence tilde P_n is the series inverse, i.e. the expansion of
sqrt(1 - 2tx + x^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, lcm
from typing import Optional, Sequence

import numpy as np

from .errors import BadCharacteristic, BadCongruence, BadParameter, EvenModulus, PreconditionViolated
from .field import is_power_of, is_prime
from .linalg import rank_mod_p
from .upoly import IntPoly, RationalPoly, pdiv_exact, pmul, psub, trim

T = RationalPoly.t()


def legendre(N: int) -> list[RationalPoly]:
    """P_0 .. P_N from (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}."""
    if N < 0:
        raise PreconditionViolated("N must be >= 0")
    out = [RationalPoly([1]), T]
    for n in range(1, N):
        nxt = (T * out[n] * (2 * n + 1) - out[n - 1] * n) * Fraction(1, n + 1)
        out.append(nxt)
    return out[: N + 1]


# power series in x whose coefficients are RationalPoly in t

def _series_mul(a: Sequence[RationalPoly], b: Sequence[RationalPoly], N: int) -> list[RationalPoly]:
    out = [RationalPoly() for _ in range(N + 1)]
    for i, x in enumerate(a[: N + 1]):
        if x.is_zero():
            continue
        for j in range(min(len(b), N + 1 - i)):
            if not b[j].is_zero():
                out[i + j] = out[i + j] + x * b[j]
    return out


def series_inverse(a: Sequence[RationalPoly], N: int) -> list[RationalPoly]:
    """Multiplicative inverse of a series with constant term 1."""
    if a[0] != RationalPoly([1]):
        raise PreconditionViolated("series inverse needs constant term 1")
    b = [RationalPoly([1])]
    for n in range(1, N + 1):
        acc = RationalPoly()
        for k in range(1, min(n, len(a) - 1) + 1):
            acc = acc + a[k] * b[n - k]
        b.append(-acc)
    return b


def series_sqrt(a: Sequence[RationalPoly], N: int) -> list[RationalPoly]:
    """Square root with constant term 1, by Newton iteration g <- (g + a/g)/2."""
    if a[0] != RationalPoly([1]):
        raise PreconditionViolated("series sqrt needs constant term 1")
    g = [RationalPoly([1])]
    prec = 0
    half = Fraction(1, 2)
    while prec < N:
        prec = min(2 * prec + 1, N)
        quotient = _series_mul(a, series_inverse(g + [RationalPoly()] * (prec + 1 - len(g)), prec), prec)
        g = [(x + y) * half for x, y in zip(g + [RationalPoly()] * (prec + 1 - len(g)), quotient)]
    return g[: N + 1]


def _base_series(N: int) -> list[RationalPoly]:
    """1 - 2tx + x^2 as a series in x."""
    base = [RationalPoly([1]), T * -2, RationalPoly([1])]
    return (base + [RationalPoly()] * (N + 1))[: N + 1]


def legendre_from_series(N: int) -> list[RationalPoly]:
    return series_inverse(series_sqrt(_base_series(N), N), N)


def tilde_legendre(N: int) -> list[RationalPoly]:
    """Coefficients of sqrt(1 - 2tx + x^2), computed as the inverse of sum P_n x^n."""
    if N < 0:
        raise PreconditionViolated("N must be >= 0")
    return series_inverse(legendre(N), N)


def _is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def denominators_are_powers_of_two(poly: RationalPoly) -> bool:
    return all(_is_power_of_two(c.denominator) for c in poly.coefficients)


@dataclass
class HankelMatrix:
    """H_k^(n)(a): entry (i, j) is a_{n+i+j}."""

    offset: int
    size: int
    entries: list[list]

    @classmethod
    def build(cls, seq: Sequence, offset: int, size: int) -> "HankelMatrix":
        if offset + 2 * (size - 1) >= len(seq) and size > 0:
            raise PreconditionViolated(
                f"sequence of length {len(seq)} too short for H_{size}^({offset})"
            )
        return cls(offset, size, [[seq[offset + i + j] for j in range(size)] for i in range(size)])


def _bareiss(M: list[list[IntPoly]], mod: Optional[int], minors: bool = False):
    """Fraction-free elimination over Z[t] (mod=None) or F_p[t].

    Returns the determinant, or with ``minors`` the list of leading principal
    minors (None past the first vanishing pivot; no row exchanges are made).
    """
    k = len(M)
    if k == 0:
        return [] if minors else [1]
    M = [[list(e) for e in row] for row in M]
    prev: IntPoly = [1]
    sign = 1
    leading = [M[0][0] or None]
    for c in range(k - 1):
        if not M[c][c]:
            if minors:
                leading.extend([None] * (k - len(leading)))
                return leading
            swap = next((r for r in range(c + 1, k) if M[r][c]), None)
            if swap is None:
                return []
            M[c], M[swap] = M[swap], M[c]
            sign = -sign
        piv = M[c][c]
        for i in range(c + 1, k):
            mic = M[i][c]
            row_i, row_c = M[i], M[c]
            for j in range(c + 1, k):
                num = psub(pmul(row_i[j], piv, mod), pmul(mic, row_c[j], mod), mod)
                row_i[j] = pdiv_exact(num, prev, mod)
        prev = piv
        leading.append(M[c + 1][c + 1] or None)
    if minors:
        return leading
    det = M[k - 1][k - 1]
    if sign < 0:
        det = [(-x) % mod for x in det] if mod else [-x for x in det]
    return trim(det)


def _to_ring(seq: Sequence[RationalPoly], modulus: Optional[int]) -> tuple[list[IntPoly], int]:
    """Clear denominators: returns integer (or F_p) polys and the common scale."""
    if modulus:
        return [s.reduce_mod(modulus) for s in seq], 1
    scale = 1
    for s in seq:
        scale = lcm(scale, s.denominator())
    return [s.scaled_integer(scale) for s in seq], scale


def _from_ring(poly: IntPoly, scale_power: int, modulus: Optional[int]):
    if modulus:
        return trim(list(poly))
    return RationalPoly(Fraction(c, scale_power) for c in poly)


def hankel_det(seq: Sequence[RationalPoly], offset: int, size: int, modulus: Optional[int] = None):
    """D_size^(offset)(seq).  Over Q returns a RationalPoly; mod p a coefficient list."""
    HankelMatrix.build(seq, offset, size)
    ring, scale = _to_ring(list(seq[offset : offset + 2 * size - 1]), modulus)
    M = [[ring[i + j] for j in range(size)] for i in range(size)]
    return _from_ring(_bareiss(M, modulus), scale**size, modulus)


def hankel_minors(seq: Sequence[RationalPoly], offset: int, kmax: int, modulus: Optional[int] = None):
    """[D_1, ..., D_kmax] from a single elimination of H_kmax (leading principal minors)."""
    window = list(seq[offset : offset + 2 * kmax - 1])
    HankelMatrix.build(seq, offset, kmax)
    ring, scale = _to_ring(window, modulus)
    M = [[ring[i + j] for j in range(kmax)] for i in range(kmax)]
    out = []
    for k, minor in enumerate(_bareiss(M, modulus, minors=True), start=1):
        if minor is None:
            # zero pivot: no row exchange is possible for a leading minor
            out.append(hankel_det(seq, offset, k, modulus))
        else:
            out.append(_from_ring(minor, scale**k, modulus))
    return out


def geronimus_rhs(k: int) -> RationalPoly:
    return (T * T - 1) ** ((k - 1) * k // 2) * Fraction(1, 2 ** ((k - 1) ** 2))


def corollary_rhs(k: int) -> RationalPoly:
    return (T * T - 1) ** (k * (k + 1) // 2) * (Fraction(-1, 2) ** (k * k))


def _check_modulus(modulus: Optional[int]) -> None:
    if modulus is None:
        return
    if modulus % 2 == 0:
        raise EvenModulus("2 must be a unit: modulus has to be odd")
    if not is_prime(modulus):
        raise PreconditionViolated(f"{modulus} is not prime")


def _matches(value, rhs: RationalPoly, modulus: Optional[int]) -> bool:
    if modulus:
        return trim(list(value)) == rhs.reduce_mod(modulus)
    return value == rhs


def geronimus_check(k: int, modulus: Optional[int] = None) -> bool:
    if k < 1:
        raise PreconditionViolated("k must be >= 1")
    _check_modulus(modulus)
    P = legendre(2 * k - 2)
    return _matches(hankel_det(P, 0, k, modulus), geronimus_rhs(k), modulus)


def corollary_check(k: int, modulus: Optional[int] = None) -> bool:
    if k < 1:
        raise PreconditionViolated("k must be >= 1")
    _check_modulus(modulus)
    tP = tilde_legendre(2 * k)
    return _matches(hankel_det(tP, 2, k, modulus), corollary_rhs(k), modulus)


def geronimus_check_range(kmax: int, modulus: Optional[int] = None) -> list[bool]:
    """geronimus_check for k = 1..kmax sharing one elimination."""
    _check_modulus(modulus)
    P = legendre(2 * kmax - 2)
    minors = hankel_minors(P, 0, kmax, modulus)
    return [_matches(m, geronimus_rhs(k), modulus) for k, m in enumerate(minors, start=1)]


def corollary_check_range(kmax: int, modulus: Optional[int] = None) -> list[bool]:
    _check_modulus(modulus)
    tP = tilde_legendre(2 * kmax)
    minors = hankel_minors(tP, 2, kmax, modulus)
    return [_matches(m, corollary_rhs(k), modulus) for k, m in enumerate(minors, start=1)]


@dataclass(frozen=True)
class ExpansionCoeffs:
    """Coefficients of x^i in (1 - 2tx + x^2)^((q+1)/2) (kind 'e') or ^((q-1)/2) (kind 'h'),
    each a polynomial in t over F_p."""

    p: int
    q: int
    kind: str
    coeffs: tuple[tuple[int, ...], ...]

    def __getitem__(self, i: int) -> IntPoly:
        return list(self.coeffs[i]) if 0 <= i < len(self.coeffs) else []

    def evaluate(self, i: int, t_val: int) -> int:
        acc = 0
        for c in reversed(self[i]):
            acc = (acc * t_val + c) % self.p
        return acc


def _check_pq(p: int, q: int) -> None:
    if p % 2 == 0 or not is_prime(p):
        raise BadCharacteristic(f"need an odd prime, got {p}")
    if q < p or not is_power_of(q, p):
        raise BadCharacteristic(f"q = {q} is not a positive power of {p}")


def expansion_coeffs(p: int, q: int, kind: str) -> ExpansionCoeffs:
    _check_pq(p, q)
    if kind not in ("e", "h"):
        raise PreconditionViolated("kind must be 'e' or 'h'")
    N = (q + 1) // 2 if kind == "e" else (q - 1) // 2
    coeffs = []
    # (1 - 2tx + x^2)^N = sum over a+b+c=N of N!/(a!b!c!) (-2t x)^b x^(2c)
    for i in range(2 * N + 1):
        poly = [0] * (i + 1)
        for c in range(i // 2 + 1):
            b = i - 2 * c
            if b + c > N:
                continue
            poly[b] = (poly[b] + comb(N, b + c) * comb(b + c, c) * (-2) ** b) % p
        coeffs.append(tuple(trim(poly)))
    return ExpansionCoeffs(p, q, kind, tuple(coeffs))


def congruence_check(p: int, q: int) -> bool:
    """h_i = P_i(t) and e_i = tilde P_i(t) mod p for all i < q."""
    h = expansion_coeffs(p, q, "h")
    e = expansion_coeffs(p, q, "e")
    P = legendre(q - 1)
    tP = tilde_legendre(q - 1)
    return all(h[i] == P[i].reduce_mod(p) and e[i] == tP[i].reduce_mod(p) for i in range(q))


def syzygy_matrices(p: int, q: int, t_val: int):
    """The matrices E ((l/2) x (l/2 - 1), entries e_{2+r+c}) and
    H ((l/2 + 2) x (l/2), entries h_{r+c}) evaluated at t = t_val, l = (q-1)/2."""
    _check_pq(p, q)
    if q % 4 != 1:
        raise BadCongruence(f"q = {q} is not 1 mod 4")
    t_val %= p
    if (t_val * t_val - 1) % p == 0:
        raise BadParameter(f"t = {t_val} has t^2 = 1 mod {p}")
    l = (q - 1) // 2
    half = l // 2
    e = expansion_coeffs(p, q, "e")
    h = expansion_coeffs(p, q, "h")
    E = [[e.evaluate(2 + r + c, t_val) for c in range(half - 1)] for r in range(half)]
    H = [[h.evaluate(r + c, t_val) for c in range(half)] for r in range(half + 2)]
    return E, H


def syzygy_rank_check(p: int, q: int, t_val: int) -> bool:
    E, H = syzygy_matrices(p, q, t_val)
    l = (q - 1) // 2
    half = l // 2
    rank_E = rank_mod_p(np.array(E, dtype=np.int64).reshape(half, half - 1), p) if half > 1 else 0
    rank_H = rank_mod_p(np.array(H, dtype=np.int64).reshape(half + 2, half), p)
    return rank_E == half - 1 and rank_H == half


__all__ = [
    "RationalPoly", "HankelMatrix", "ExpansionCoeffs", "legendre", "legendre_from_series",
    "tilde_legendre", "series_inverse", "series_sqrt", "hankel_det", "hankel_minors",
    "geronimus_check", "corollary_check", "geronimus_check_range", "corollary_check_range",
    "geronimus_rhs", "corollary_rhs", "expansion_coeffs", "congruence_check",
    "syzygy_matrices", "syzygy_rank_check", "denominators_are_powers_of_two"
]
