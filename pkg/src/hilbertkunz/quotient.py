"""Graded pieces of theta = S/(f, x_0^q, ..., x_n^q) and the Hilbert-Kunz profile.

Two routes compute the same numbers:

``slices``
    For every degree i build the matrix of multiplication by f from
    Theta_{i-d} to Theta_i (Theta = S/x^[q], monomial bases) and take its
    rank.  Works for every f.
``monic``
    If f contains c*x_j^d with c != 0, then S/(f, x_k^q : k != j) is a free
    module over A = k[x_k : k != j]/(x_k^q) with basis 1, x_j, ..., x_j^(d-1).
    theta is its quotient by the A-span of x_j^q, ..., x_j^(q+d-1), and each
    graded piece of that quotient is a matrix of size at most d*q^(n-1)
    instead of ~q^n.

:func:`brute_force_colength` is an independent oracle that works in the full
polynomial ring without any truncation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NotHomogeneous, PreconditionViolated, TooLarge, ZeroPolynomial
from .linalg import FpMatrix, rank_mod_p
from .polynomial import MultiPoly, monomials_of_degree
from .series import lower_bound_L, m_of_q, theta_dim

BRUTE_FORCE_LIMIT = 10**5
# largest Theta slice handled by the slices route when ``method="auto"``
AUTO_SLICE_LIMIT = 1500


@lru_cache(maxsize=4096)
def _bounded(nvars: int, q: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent vectors of total ``degree`` with entries < q, lex order, x_0 largest first."""
    if degree < 0 or degree > nvars * (q - 1):
        return ()
    if nvars == 1:
        return ((degree,),)
    out = []
    hi = min(degree, q - 1)
    lo = max(0, degree - (nvars - 1) * (q - 1))
    for a in range(hi, lo - 1, -1):
        out.extend((a,) + rest for rest in _bounded(nvars - 1, q, degree - a))
    return tuple(out)


def _bounded_array(nvars: int, q: int, degree: int) -> np.ndarray:
    mons = _bounded(nvars, q, degree)
    if not mons:
        return np.zeros((0, nvars), dtype=np.int64)
    return np.array(mons, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class SliceBasis:
    """Monomial basis of Theta_i: degree-i monomials with every exponent < q."""

    n: int
    q: int
    i: int
    monomials: np.ndarray

    def __len__(self) -> int:
        return self.monomials.shape[0]

    def as_tuples(self) -> list[tuple[int, ...]]:
        return [tuple(int(e) for e in row) for row in self.monomials]

    def codes(self) -> np.ndarray:
        # base-q digits, x_0 most significant; strictly decreasing along the basis
        weights = self.q ** np.arange(self.n, -1, -1, dtype=np.int64)
        return self.monomials @ weights


def slice_basis(n: int, q: int, i: int) -> SliceBasis:
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    return SliceBasis(n, q, i, _bounded_array(n + 1, q, i))


def _check_form(f: MultiPoly) -> int:
    if f.is_zero():
        raise ZeroPolynomial("f must be nonzero")
    if not f.is_homogeneous():
        raise NotHomogeneous(f"{f} is not homogeneous")
    return f.degree


def _mult_entries(f: MultiPoly, q: int, i: int) -> np.ndarray:
    d = f.degree
    n = f.nvars - 1
    src = slice_basis(n, q, i - d)
    tgt = slice_basis(n, q, i)
    out = np.zeros((len(tgt), len(src)), dtype=np.int64)
    if len(src) == 0 or len(tgt) == 0:
        return out
    tcodes = tgt.codes()[::-1]  # ascending for searchsorted
    weights = q ** np.arange(n, -1, -1, dtype=np.int64)
    cols = np.arange(len(src))
    for exps, c in f.terms.items():
        shifted = src.monomials + np.array(exps, dtype=np.int64)
        keep = (shifted < q).all(axis=1)
        if not keep.any():
            continue
        codes = shifted[keep] @ weights
        rows = len(tgt) - 1 - np.searchsorted(tcodes, codes)
        np.add.at(out, (rows, cols[keep]), c)
    return out % f.p


def mult_matrix(f: MultiPoly, q: int, i: int) -> FpMatrix:
    """Matrix of multiplication by f from Theta_{i-d} to Theta_i (rows: Theta_i)."""
    _check_form(f)
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    return FpMatrix(_mult_entries(f, q, i), f.p)


def rank(M: FpMatrix) -> int:
    return M.rank()


def is_in_frobenius_power(f: MultiPoly, q: int) -> bool:
    """True iff f lies in (x_0^q, ..., x_n^q), i.e. every term has an exponent >= q."""
    return all(max(exps) >= q for exps in f.terms)


def _slice_ranks(f: MultiPoly, q: int) -> list[int]:
    top = f.nvars * (q - 1)
    d = f.degree
    return [rank_mod_p(_mult_entries(f, q, i), f.p) if i >= d else 0 for i in range(top + 1)]


def _shift(arr: np.ndarray, e: tuple[int, ...], q: int) -> np.ndarray:
    """Multiply an element of A = F_p[y]/(y^q) (as a q x ... x q array) by the monomial y^e."""
    out = np.zeros_like(arr)
    if any(k >= q for k in e):
        return out
    out[tuple(slice(k, None) for k in e)] = arr[tuple(slice(0, q - k) for k in e)]
    return out


def _monic_dims(f: MultiPoly, q: int, j: int) -> list[int]:
    """dim theta_i for i = 0..(n+1)(q-1) via the free-module description over A."""
    p, d, nv = f.p, f.degree, f.nvars
    others = [k for k in range(nv) if k != j]
    na = len(others)
    lead = f.coefficient(tuple(d if k == j else 0 for k in range(nv)))
    scale = (-pow(lead, -1, p)) % p
    # x_j^d = scale * sum_k g_k x_j^k with g_k in k[others]
    tail: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for exps, c in f.terms.items():
        k = exps[j]
        if k == d:
            continue
        tail.setdefault(k, []).append((tuple(exps[o] for o in others), c * scale % p))

    shape = (d,) + (q,) * na
    vec = np.zeros(shape, dtype=np.int64)
    vec[(0,) * (na + 1)] = 1
    columns = []
    for s in range(q + d):
        if s >= q:
            columns.append(vec.copy())
        top_coeff = vec[d - 1]
        nxt = np.zeros_like(vec)
        nxt[1:] = vec[: d - 1]
        if top_coeff.any():
            for k, terms in tail.items():
                for e, c in terms:
                    nxt[k] += c * _shift(top_coeff, e, q)
        vec = nxt % p

    top = nv * (q - 1)
    dims = []
    for i in range(top + d + 1):
        targets = [_bounded_array(na, q, i - r) for r in range(d)]
        width = sum(t.shape[0] for t in targets)
        if width == 0:
            dims.append(0)
            continue
        blocks = []
        for k in range(d):
            gens = _bounded_array(na, q, i - q - k)
            if gens.shape[0] == 0:
                continue
            row_block = []
            for r in range(d):
                t = targets[r]
                if t.shape[0] == 0:
                    row_block.append(np.zeros((gens.shape[0], 0), dtype=np.int64))
                    continue
                idx = t[None, :, :] - gens[:, None, :]
                valid = (idx >= 0).all(axis=2)
                idx = np.where(valid[:, :, None], idx, 0)
                vals = columns[k][r][tuple(idx[:, :, a] for a in range(na))]
                row_block.append(np.where(valid, vals, 0))
            blocks.append(np.concatenate(row_block, axis=1))
        rk = rank_mod_p(np.concatenate(blocks, axis=0), p) if blocks else 0
        dims.append(width - rk)
    if any(dims[top + 1 :]):
        raise AssertionError("quotient nonzero above the socle degree of Theta")
    return dims[: top + 1]


@dataclass
class HKProfile:
    """Graded data of theta = S/(f, x^[q]) at one q."""

    q: int
    n: int
    d: int
    p: int
    theta_quotient_dims: list[int]
    ranks: list[int]
    hk_value: int
    a_q: int
    iota_q: int
    m_q: int
    L_q: int
    maximal_rank: bool
    method: str = "slices"
    iota_from_duality: bool = False
    theta_dims: list[int] = field(default_factory=list)

    @property
    def nullities(self) -> list[int]:
        """dim of the kernel of f on Theta_i, i.e. dim vartheta_i."""
        top = len(self.theta_dims) - 1
        return [
            self.theta_dims[i] - (self.ranks[i + self.d] if i + self.d <= top else 0)
            for i in range(top + 1)
        ]

    def all_maps_maximal_rank(self) -> bool:
        """Per-degree check: every f: Theta_{i-d} -> Theta_i is injective or surjective."""
        ok = True
        for i, r in enumerate(self.ranks):
            src = self.theta_dims[i - self.d] if i >= self.d else 0
            ok &= r == min(src, self.theta_dims[i])
        return ok


def hk_profile(f: MultiPoly, q: int, method: str = "auto") -> HKProfile:
    """Compute dim theta_i for all i and the derived invariants a(q), iota(q), L(q)."""
    d = _check_form(f)
    if q < 1:
        raise PreconditionViolated("q must be >= 1")
    n = f.nvars - 1
    if n < 1:
        raise PreconditionViolated("need at least two variables")
    top = (n + 1) * (q - 1)
    alpha = [theta_dim(n, q, i) for i in range(top + 1)]

    monic = f.pure_power_variables()
    if method == "auto":
        method = "monic" if monic and max(alpha) > AUTO_SLICE_LIMIT else "slices"
    if method == "slices":
        ranks = _slice_ranks(f, q)
        dims = [a - r for a, r in zip(alpha, ranks)]
    elif method == "monic":
        if not monic:
            raise PreconditionViolated("monic route needs a term c*x_j^d in f")
        dims = _monic_dims(f, q, monic[0])
        ranks = [a - t for a, t in zip(alpha, dims)]
    else:
        raise ValueError(f"unknown method {method!r}")

    a_q = max(i for i, t in enumerate(dims) if t)
    nullity = [alpha[i] - (ranks[i + d] if i + d <= top else 0) for i in range(top + 1)]
    positive = [i for i, v in enumerate(nullity) if v > 0]
    if positive:
        iota, fallback = positive[0], False
    else:
        iota, fallback = top - a_q, True
    maximal = 2 * a_q < top + d < 2 * (iota + d)
    return HKProfile(
        q=q, n=n, d=d, p=f.p,
        theta_quotient_dims=dims,
        ranks=ranks,
        hk_value=sum(dims),
        a_q=a_q,
        iota_q=iota,
        m_q=m_of_q(n, d, q),
        L_q=lower_bound_L(n, d, q),
        maximal_rank=maximal,
        method=method,
        iota_from_duality=fallback,
        theta_dims=alpha,
    )


def _sparse_rank(rows, p: int) -> int:
    """Rank of sparse rows ({column: value}) mod p by incremental echelon reduction."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            factor = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - factor * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def brute_force_colength(f: MultiPoly, q: int) -> int:
    """dim_k S/(f, x_0^q, ..., x_n^q), computed inside the full polynomial ring."""
    d = _check_form(f)
    nv = f.nvars
    if q**nv > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"q^(n+1) = {q ** nv} exceeds {BRUTE_FORCE_LIMIT}")
    total = 0
    # theta vanishes from degree nv*(q-1)+1 on; one extra degree is checked
    for i in range(nv * (q - 1) + 2):
        monos = monomials_of_degree(nv, i)
        index = {m: k for k, m in enumerate(monos)}
        rows = []
        for m in monomials_of_degree(nv, i - q):
            for j in range(nv):
                e = list(m)
                e[j] += q
                rows.append({index[tuple(e)]: 1})
        for m in monomials_of_degree(nv, i - d):
            row: dict[int, int] = {}
            for exps, c in f.terms.items():
                col = index[tuple(a + b for a, b in zip(exps, m))]
                row[col] = row.get(col, 0) + c
            rows.append(row)
        codim = len(monos) - _sparse_rank(rows, f.p)
        if i > nv * (q - 1) and codim:
            raise AssertionError("colength computation did not terminate where expected")
        total += codim
    return total
