"""Sparse multivariate polynomials over F_p and a small parser for them."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .errors import NotHomogeneous, ParseError, ZeroPolynomial
from .field import make_prime_field

Exponents = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: Exponents

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def format(self, names: Sequence[str]) -> str:
        parts = []
        for name, e in zip(names, self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) or "1"


def monomials_of_degree(nvars: int, degree: int) -> list[Exponents]:
    """All exponent vectors of the given total degree, lex order with x_0 largest first."""
    if degree < 0:
        return []
    if nvars == 1:
        return [(degree,)]
    out = []
    for a in range(degree, -1, -1):
        out.extend((a,) + rest for rest in monomials_of_degree(nvars - 1, degree - a))
    return out


class MultiPoly:
    """Polynomial in ``nvars`` variables with coefficients in F_p.

    ``terms`` maps exponent tuples to nonzero integers in [1, p).
    """

    __slots__ = ("p", "nvars", "terms", "names")

    def __init__(self, terms: Mapping[Exponents, int], nvars: int, p: int,
                 names: Sequence[str] | None = None):
        make_prime_field(p)
        self.p = p
        self.nvars = nvars
        clean: dict[Exponents, int] = {}
        for exps, c in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or min(exps, default=0) < 0:
                raise ValueError(f"bad exponent vector {exps} for {nvars} variables")
            c = (clean.get(exps, 0) + int(c)) % p
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.terms = dict(sorted(clean.items(), key=lambda kv: (-sum(kv[0]), tuple(-e for e in kv[0]))))
        self.names = tuple(names) if names else default_names(nvars)

    @classmethod
    def parse(cls, text: str, names: Sequence[str], p: int) -> "MultiPoly":
        return parse_poly(text, names, p)

    @classmethod
    def variable(cls, i: int, nvars: int, p: int, names=None) -> "MultiPoly":
        exps = [0] * nvars
        exps[i] = 1
        return cls({tuple(exps): 1}, nvars, p, names)

    @classmethod
    def constant(cls, c: int, nvars: int, p: int, names=None) -> "MultiPoly":
        return cls({(0,) * nvars: c}, nvars, p, names)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_degree(self) -> int:
        """Degree of a nonzero homogeneous polynomial; raises otherwise."""
        if not self.terms:
            raise ZeroPolynomial("the zero polynomial has no degree")
        if not self.is_homogeneous():
            raise NotHomogeneous(f"{self} is not homogeneous")
        return self.degree

    def _same_ring(self, other: "MultiPoly") -> None:
        if other.p != self.p or other.nvars != self.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._same_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(terms, self.nvars, self.p, self.names)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({e: -c for e, c in self.terms.items()}, self.nvars, self.p, self.names)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly({e: c * other for e, c in self.terms.items()}, self.nvars, self.p, self.names)
        self._same_ring(other)
        terms: dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = (terms.get(e, 0) + c1 * c2) % self.p
        return MultiPoly(terms, self.nvars, self.p, self.names)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        result = MultiPoly.constant(1, self.nvars, self.p, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MultiPoly)
            and self.p == other.p
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.p, self.nvars, tuple(self.terms.items())))

    def coefficient(self, exps: Exponents) -> int:
        return self.terms.get(tuple(exps), 0)

    def substitute_linear(self, matrix: Sequence[Sequence[int]]) -> "MultiPoly":
        """Replace x_i by sum_j matrix[i][j] * x_j."""
        images = [
            MultiPoly({tuple(int(k == j) for k in range(self.nvars)): matrix[i][j]
                       for j in range(self.nvars)}, self.nvars, self.p, self.names)
            for i in range(self.nvars)
        ]
        total = MultiPoly({}, self.nvars, self.p, self.names)
        for exps, c in self.terms.items():
            term = MultiPoly.constant(c, self.nvars, self.p, self.names)
            for img, e in zip(images, exps):
                if e:
                    term = term * img**e
            total = total + term
        return total

    def pure_power_variables(self) -> list[int]:
        """Indices j such that x_j^deg appears with nonzero coefficient."""
        d = self.degree
        out = []
        for j in range(self.nvars):
            exps = tuple(d if k == j else 0 for k in range(self.nvars))
            if exps in self.terms:
                out.append(j)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.terms.items():
            mono = Monomial(exps).format(self.names)
            if mono == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self}, p={self.p})"


def default_names(nvars: int) -> tuple[str, ...]:
    if nvars <= 4:
        return ("x", "y", "z", "w")[:nvars]
    return tuple(f"x{i}" for i in range(nvars))


def random_homogeneous(nvars: int, degree: int, p: int, rng, density: float = 1.0) -> MultiPoly:
    """Random homogeneous form; each monomial kept with probability ``density``."""
    terms = {}
    for exps in monomials_of_degree(nvars, degree):
        if rng.random() < density:
            terms[exps] = rng.randrange(1, p)
    if not terms:
        terms[monomials_of_degree(nvars, degree)[0]] = 1
    return MultiPoly(terms, nvars, p)


def all_forms(nvars: int, degree: int, p: int) -> Iterable[MultiPoly]:
    """Every nonzero form of the given degree (tiny cases only)."""
    monos = monomials_of_degree(nvars, degree)
    for coeffs in product(range(p), repeat=len(monos)):
        if any(coeffs):
            yield MultiPoly(dict(zip(monos, coeffs)), nvars, p)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif name is not None:
            tokens.append(("name", name))
        else:
            if sym not in "+-*^":
                raise ParseError(f"unexpected character {sym!r} at offset {m.start(3)}")
            tokens.append(("op", sym))
        pos = m.end()
    return tokens


def parse_poly(text: str, names: Sequence[str], p: int) -> MultiPoly:
    """Parse sums of ``c*v1^e1*...*vk^ek`` terms; ``*`` is required between factors."""
    names = [n.strip() for n in names]
    if len(set(names)) != len(names) or not all(names):
        raise ParseError(f"bad variable list {names}")
    index = {n: i for i, n in enumerate(names)}
    nvars = len(names)
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial")
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None)

    def take():
        nonlocal pos
        tok = peek()
        if tok[0] is None:
            raise ParseError("unexpected end of input")
        pos += 1
        return tok

    def factor(exps: list[int]) -> int:
        kind, val = take()
        if kind == "int":
            return int(val)
        if kind == "name":
            if val not in index:
                raise ParseError(f"unknown variable {val!r}")
            e = 1
            if peek() == ("op", "^"):
                take()
                k2, v2 = take()
                if k2 != "int":
                    raise ParseError(f"exponent must be an integer, got {v2!r}")
                e = int(v2)
            exps[index[val]] += e
            return 1
        raise ParseError(f"unexpected token {val!r}")

    def term() -> tuple[Exponents, int]:
        exps = [0] * nvars
        c = factor(exps)
        while peek() == ("op", "*"):
            take()
            c *= factor(exps)
        return tuple(exps), c

    terms: dict[Exponents, int] = {}
    sign = 1
    if peek() in (("op", "+"), ("op", "-")):
        sign = -1 if take()[1] == "-" else 1
    while True:
        exps, c = term()
        terms[exps] = terms.get(exps, 0) + sign * c
        tok = peek()
        if tok[0] is None:
            break
        if tok not in (("op", "+"), ("op", "-")):
            raise ParseError(f"expected '+' or '-', got {tok[1]!r}")
        sign = -1 if take()[1] == "-" else 1
    return MultiPoly(terms, nvars, p, names)
