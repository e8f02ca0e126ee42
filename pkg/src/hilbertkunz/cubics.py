"""Singular irreducible plane cubics in Weierstrass form.

f = z*(y^2 + a1*x*y - a2*x^2) - x^3 has its singular point at [0:0:1]; it
is nodal iff a1^2 + 4*a2 != 0.  Its Hilbert-Kunz value at q splits through
the normalization k[s,t]^(3) as

    dim E = dim F - dim G + dim D,

with dim G = q, dim F read off a Hilbert-Burch resolution, and dim D
controlled by whether tau2 (a symmetric function of the roots u, v of the
tangential quadric) vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import CuspidalInput, PreconditionViolated
from .field import QuadExtElement, QuadraticExtension, make_prime_field, quadratic_roots
from .linalg import rank_mod_p
from .polynomial import MultiPoly, monomials_of_degree


@dataclass(frozen=True)
class WeierstrassCubic:
    a1: int
    a2: int
    p: int

    def __post_init__(self):
        make_prime_field(self.p)
        object.__setattr__(self, "a1", self.a1 % self.p)
        object.__setattr__(self, "a2", self.a2 % self.p)

    @property
    def discriminant(self) -> int:
        return (self.a1 * self.a1 + 4 * self.a2) % self.p

    @property
    def is_nodal(self) -> bool:
        return self.discriminant != 0

    def shifted(self, alpha: int) -> "WeierstrassCubic":
        """Same curve in the coordinates (x, y + alpha*x, z)."""
        a1 = self.a1 + 2 * alpha
        a2 = self.a2 - alpha * alpha - self.a1 * alpha
        return WeierstrassCubic(a1, a2, self.p)

    def polynomial(self) -> MultiPoly:
        p = self.p
        return MultiPoly(
            {(0, 2, 1): 1, (1, 1, 1): self.a1, (2, 0, 1): -self.a2, (3, 0, 0): -1},
            3, p, ("x", "y", "z"),
        )

    def quadric(self) -> MultiPoly:
        """Q(s, t) = t^2 + a1*s*t - a2*s^2 in variables (s, t)."""
        return MultiPoly({(0, 2): 1, (1, 1): self.a1, (2, 0): -self.a2}, 2, self.p, ("s", "t"))


def classify(a1: int, a2: int, p: int) -> str:
    return "nodal" if WeierstrassCubic(a1, a2, p).is_nodal else "cuspidal"


@dataclass(frozen=True)
class QuadricRoots:
    u: QuadExtElement
    v: QuadExtElement

    def expand(self) -> tuple[QuadExtElement, QuadExtElement]:
        """Coefficients (of s*t, of s^2) of (t - u*s)(t - v*s)."""
        return -(self.u + self.v), self.u * self.v


def split_roots(a1: int, a2: int, p: int) -> QuadricRoots:
    # (t - us)(t - vs) = t^2 + a1 st - a2 s^2  <=>  u, v roots of T^2 + a1 T - a2
    u, v = quadratic_roots(a1, -a2, p)
    roots = QuadricRoots(u, v)
    st, ss = roots.expand()
    assert st == a1 % p and ss == (-a2) % p
    return roots


def tau(u: QuadExtElement, v: QuadExtElement, q: int) -> tuple[QuadExtElement, QuadExtElement]:
    """Coefficients in t^q = tau1 s^q + tau2 s^(q-1) t  (mod Q)."""
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    ext = u.ext
    t2 = ext(0)
    for i in range(q):
        t2 = t2 + u ** (q - 1 - i) * v**i
    t1 = ext(0)
    for i in range(q - 1):
        t1 = t1 + u ** (q - 2 - i) * v**i
    t1 = -(u * v) * t1
    return t1, t2


def reduce_t_power(a1: int, a2: int, p: int, q: int) -> tuple[int, int]:
    """(tau1, tau2) straight from reducing t^q modulo Q(1, t) over F_p.

    Independent of root splitting: t^2 = -a1*t + a2 in F_p[t]/(Q(1, t)).
    """
    c0, c1 = 1, 0  # t^0 = 1 + 0*t
    for _ in range(q):
        # t*(c0 + c1 t) = c0 t + c1 (-a1 t + a2)
        c0, c1 = c1 * a2 % p, (c0 - c1 * a1) % p
    return c0, c1


def residues(q: int) -> tuple[int, int, int]:
    """(epsilon, eta, zeta) in {0,1,2} making (q-3+e)/3, (q-2+h)/3, (2q-2+z)/3 integral."""
    return (-q) % 3, (2 - q) % 3, (2 - 2 * q) % 3


def dim_D(tau2_is_zero: bool, q: int) -> int:
    if q < 2:
        raise PreconditionViolated("dim D needs q >= 2")
    eps, eta, zeta = residues(q)
    if tau2_is_zero:
        num = 3 * q - 4 + eta + zeta
    else:
        num = 2 * q - 5 + eps + eta
    assert num % 3 == 0
    value = num // 3
    if not tau2_is_zero:
        simplified = 2 * (q // 3) if q % 3 else 2 * q // 3 - 1
        assert value == simplified, (q, value, simplified)
    return value


def dim_F(q: int) -> int:
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    num = 7 * q * q - (0 if q % 3 == 0 else 1)
    assert num % 3 == 0
    return num // 3


def _dim_P(j: int) -> int:
    return max(0, j + 1)


def dim_F_direct(q: int) -> int:
    """Sum over i of dim M_{3i} from the graded free resolution of M."""
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    total = 0
    for i in range(0, 2 * q + 2):
        j = 3 * i
        total += _dim_P(j) - 3 * _dim_P(j - 3 * q) + _dim_P(j - 4 * q) + _dim_P(j - 5 * q)
    return total


def dim_M_model(a1: int, a2: int, p: int, q: int, veronese: bool = True) -> int:
    """dim of k[s,t]/(s^q Q^q, t^q Q^q, s^(3q)) by linear algebra on monomials.

    With ``veronese`` only degrees divisible by 3 are counted (that is dim F).
    """
    cubic = WeierstrassCubic(a1, a2, p)
    Qq = cubic.quadric() ** q
    s = MultiPoly.variable(0, 2, p, ("s", "t"))
    t = MultiPoly.variable(1, 2, p, ("s", "t"))
    gens = [s**q * Qq, t**q * Qq, s ** (3 * q)]
    total = 0
    for j in range(0, 5 * q + 1):
        if veronese and j % 3:
            continue
        cols = {m: k for k, m in enumerate(monomials_of_degree(2, j))}
        rows = []
        for g in gens:
            for m in monomials_of_degree(2, j - 3 * q):
                row = np.zeros(len(cols), dtype=np.int64)
                for exps, c in g.terms.items():
                    row[cols[(exps[0] + m[0], exps[1] + m[1])]] += c
                rows.append(row)
        rk = rank_mod_p(np.array(rows), p) if rows else 0
        total += len(cols) - rk
    return total


def normalization_dims(a1: int, a2: int, p: int, i: int) -> tuple[int, int]:
    """(dim R_i, dim of k[s,t]_{3i}) with R_i computed as the image of
    S_i under x -> s*Q, y -> t*Q, z -> s^3."""
    cubic = WeierstrassCubic(a1, a2, p)
    Q = cubic.quadric()
    s = MultiPoly.variable(0, 2, p, ("s", "t"))
    t = MultiPoly.variable(1, 2, p, ("s", "t"))
    images = [s * Q, t * Q, s**3]
    cols = {m: k for k, m in enumerate(monomials_of_degree(2, 3 * i))}
    rows = []
    for exps in monomials_of_degree(3, i):
        img = MultiPoly.constant(1, 2, p)
        for g, e in zip(images, exps):
            img = img * g**e
        row = np.zeros(len(cols), dtype=np.int64)
        for m, c in img.terms.items():
            row[cols[m]] = c
        rows.append(row)
    return rank_mod_p(np.array(rows), p), len(cols)


@dataclass(frozen=True)
class NodalDecomposition:
    q: int
    tau1: QuadExtElement
    tau2: QuadExtElement
    dimF: int
    dimG: int
    dimD: int
    hk_assembled: int
    epsilon: int
    eta: int
    zeta: int
    nodal: bool


def hk_singular_assembled(a1: int, a2: int, p: int, q: int, alpha: int = 0) -> NodalDecomposition:
    if q < 2:
        raise PreconditionViolated("assembly needs q >= 2")
    cubic = WeierstrassCubic(a1, a2, p).shifted(alpha)
    roots = split_roots(cubic.a1, cubic.a2, p)
    t1, t2 = tau(roots.u, roots.v, q)
    eps, eta, zeta = residues(q)
    dF, dG = dim_F(q), q
    dD = dim_D(t2.is_zero(), q)
    return NodalDecomposition(
        q=q, tau1=t1, tau2=t2, dimF=dF, dimG=dG, dimD=dD, hk_assembled=dF - dG + dD,
        epsilon=eps, eta=eta, zeta=zeta, nodal=cubic.is_nodal,
    )


def tau2_jump_probe(a1: int, a2: int, p: int, q: int) -> bool:
    """True iff u^q = v^q, i.e. tau2 = 0 and the generalized value jumps to the cuspidal one."""
    if not WeierstrassCubic(a1, a2, p).is_nodal:
        raise CuspidalInput("probe needs a nodal cubic (a1^2 + 4*a2 != 0)")
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    roots = split_roots(a1, a2, p)
    return roots.u**q == roots.v**q


def cuspidal_generalized(q: int) -> int:
    num = 7 * q * q - (0 if q % 3 == 0 else 4)
    assert num % 3 == 0
    return num // 3


def nodal_formula(q: int) -> int:
    num = 7 * q * q - q - (5 if q % 3 == 2 else 3)
    assert num % 3 == 0
    return num // 3


__all__ = [
    "QuadExtElement", "QuadraticExtension", "WeierstrassCubic", "QuadricRoots",
    "NodalDecomposition", "classify", "split_roots", "tau", "reduce_t_power", "residues",
    "dim_D", "dim_F", "dim_F_direct", "dim_M_model", "normalization_dims",
    "hk_singular_assembled", "tau2_jump_probe", "cuspidal_generalized", "nodal_formula",
]
