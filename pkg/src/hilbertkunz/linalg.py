"""Dense linear algebra over F_p on numpy int64 arrays."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import is_prime
from .errors import NotPrime

# entries < p and products < p^2 must fit in int64
MAX_MODULUS = 3_037_000_499


@dataclass(frozen=True, eq=False)
class FpMatrix:
    """Matrix over F_p; rows index the target basis, columns the source basis."""

    entries: np.ndarray
    p: int

    def __post_init__(self):
        if self.entries.ndim != 2:
            raise ValueError("FpMatrix must be two-dimensional")
        if not is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        object.__setattr__(self, "entries", np.mod(self.entries, self.p).astype(np.int64))

    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def from_rows(cls, rows, p: int) -> "FpMatrix":
        arr = np.array(rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(len(rows), -1)
        return cls(arr, p)

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    def __eq__(self, other):
        return (
            isinstance(other, FpMatrix)
            and self.p == other.p
            and self.entries.shape == other.entries.shape
            and bool(np.array_equal(self.entries, other.entries))
        )

    def rank(self) -> int:
        return rank_mod_p(self.entries, self.p)


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Rank of an integer matrix reduced mod p, by Gaussian elimination."""
    if p > MAX_MODULUS:
        raise ValueError(f"modulus {p} too large for int64 elimination")
    m = np.mod(np.asarray(a, dtype=np.int64), p)
    if m.size == 0:
        return 0
    # eliminate along the shorter side
    if m.shape[0] > m.shape[1]:
        m = m.T.copy()
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        col = m[r:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r, c:] = m[r, c:] * inv % p
        below = r + 1 + np.flatnonzero(m[r + 1 :, c])
        if below.size:
            factors = m[below, c][:, None]
            m[below, c:] = (m[below, c:] - factors * m[r, c:]) % p
        r += 1
    return r


def rank(M: FpMatrix) -> int:
    return M.rank()
