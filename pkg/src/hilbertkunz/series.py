"""Exact generating-function arithmetic.

Hilbert function of Theta = S/(x_0^q, ..., x_n^q), the lower bound L(q) on
the generalized Hilbert-Kunz function of a degree-d form, the middle degree
m(q), and the constants beta_{n+1} that govern lim L(q)/q^n.

All arithmetic is in Python integers and :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import accumulate
from math import comb, factorial

from .errors import PreconditionViolated

Rational = Fraction


class IntSeries:
    """Truncated power series with integer coefficients, degrees 0..bound."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients, bound: int):
        coeffs = list(coefficients)[: bound + 1]
        coeffs.extend([0] * (bound + 1 - len(coeffs)))
        self.coefficients = coeffs

    @property
    def bound(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def from_terms(cls, terms: dict[int, int], bound: int) -> "IntSeries":
        coeffs = [0] * (bound + 1)
        for k, c in terms.items():
            if 0 <= k <= bound:
                coeffs[k] += c
        return cls(coeffs, bound)

    @classmethod
    def binomial_power(cls, e: int, sign: int, k: int, bound: int) -> "IntSeries":
        """(1 + sign*t^k)^e truncated at ``bound``."""
        return cls.from_terms({k * j: comb(e, j) * sign**j for j in range(e + 1)}, bound)

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        bound = min(self.bound, other.bound)
        out = [0] * (bound + 1)
        b = other.coefficients
        for i, a in enumerate(self.coefficients[: bound + 1]):
            if a == 0:
                continue
            for j in range(bound + 1 - i):
                if b[j]:
                    out[i + j] += a * b[j]
        return IntSeries(out, bound)

    def divide_by_one_minus_t(self, times: int = 1) -> "IntSeries":
        # 1/(1-t) is a running sum
        coeffs = self.coefficients
        for _ in range(times):
            coeffs = list(accumulate(coeffs))
        return IntSeries(coeffs, self.bound)

    def __eq__(self, other):
        return isinstance(other, IntSeries) and self.coefficients == other.coefficients

    def __repr__(self):
        return f"IntSeries({self.coefficients})"


def theta_dim(n: int, q: int, i: int) -> int:
    """Coefficient of t^i in (1 + t + ... + t^(q-1))^(n+1)."""
    top = (n + 1) * (q - 1)
    if i < 0 or i > top:
        return 0
    total = 0
    for j in range(min(n + 1, i // q) + 1):
        total += (-1) ** j * comb(n + 1, j) * comb(i - j * q + n, n)
    return total


def theta_hilbert_series(n: int, q: int) -> list[int]:
    return [theta_dim(n, q, i) for i in range((n + 1) * (q - 1) + 1)]


def _check_nqd(n: int, d: int, q: int) -> None:
    if n < 1 or d < 1 or q < 1:
        raise PreconditionViolated(f"need n, d, q >= 1, got n={n} d={d} q={q}")


def m_of_q(n: int, d: int, q: int) -> int:
    _check_nqd(n, d, q)
    return ((n + 1) * (q - 1) + (d - 1)) // 2


def lower_bound_L(n: int, d: int, q: int) -> int:
    """Coefficient of t^m(q) in (1 - t^d)(1 - t^q)^(n+1) / (1 - t)^(n+2)."""
    m = m_of_q(n, d, q)
    numerator = IntSeries.binomial_power(1, -1, d, m) * IntSeries.binomial_power(n + 1, -1, q, m)
    return numerator.divide_by_one_minus_t(n + 2)[m]


def lower_bound_window(n: int, d: int, q: int) -> int:
    """Same bound as :func:`lower_bound_L`, as a sum of d consecutive Theta dimensions."""
    m = m_of_q(n, d, q)
    return sum(theta_dim(n, q, i) for i in range(m - d + 1, m + 1))


def lower_bound_termwise(n: int, d: int, q: int) -> int:
    """sum_i max(dim Theta_i - dim Theta_{i-d}, 0), straight from the definition."""
    _check_nqd(n, d, q)
    return sum(
        max(theta_dim(n, q, i) - theta_dim(n, q, i - d), 0)
        for i in range((n + 1) * (q - 1) + d + 1)
    )


def beta(n_plus_1: int) -> Fraction:
    if n_plus_1 < 1:
        raise PreconditionViolated("beta index must be >= 1")
    n = n_plus_1 - 1
    s = sum((-1) ** i * (n + 1 - 2 * i) ** n * comb(n + 1, i) for i in range(n // 2 + 1))
    return Fraction(s, 2**n * factorial(n))


def beta_limit_gap(n: int, d: int, q: int) -> Fraction:
    """|L(q)/q^n - d*beta_{n+1}|, exactly."""
    if d < 2:
        raise PreconditionViolated("beta_limit_gap needs d >= 2")
    return abs(Fraction(lower_bound_L(n, d, q), q**n) - d * beta(n + 1))
