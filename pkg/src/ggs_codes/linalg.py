"""Gaussian elimination over a :class:`~ggs_codes.ffield.Field`.

Matrices are int64 numpy arrays of field encodings.  Row operations are
vectorized through the field's log/antilog tables.
"""

from __future__ import annotations

import numpy as np

from .ffield import Field


def rref(field: Field, mat) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = np.array(mat, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if len(nz) == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        a[r] = field.vmul(a[r], field.inv(int(a[r, c])))
        col = a[:, c].copy()
        col[r] = 0
        if np.any(col):
            a = field.vsub(a, field.outer_mul(col, a[r]))
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(field: Field, mat) -> int:
    return len(rref(field, mat)[1])


class RowSpace:
    """Incrementally grown row space kept in reduced echelon form."""

    def __init__(self, field: Field, length: int):
        self.field = field
        self.length = length
        self.basis = np.zeros((0, length), dtype=np.int64)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v) -> np.ndarray:
        f = self.field
        v = np.asarray(v, dtype=np.int64)
        if not self.pivots:
            return v.copy()
        coeffs = v[self.pivots]
        if not np.any(coeffs):
            return v.copy()
        return f.vsub(v, f.vsum(f.vmul(self.basis, coeffs[:, None]), axis=0))

    def contains(self, v) -> bool:
        return not np.any(self.reduce(v))

    def add(self, v) -> bool:
        """Add ``v``; return False when it was already in the span."""
        f = self.field
        w = self.reduce(v)
        nz = np.flatnonzero(w)
        if len(nz) == 0:
            return False
        c = int(nz[0])
        w = f.vmul(w, f.inv(int(w[c])))
        if self.pivots:
            col = self.basis[:, c]
            if np.any(col):
                self.basis = f.vsub(self.basis, f.outer_mul(col, w))
        self.basis = np.vstack([self.basis, w[None, :]])
        self.pivots.append(c)
        return True


def nullspace_sampler(field: Field, mat, rng: np.random.Generator, max_support: int = 8):
    """Return a function drawing random nonzero vectors c with mat @ c = 0.

    With mat in reduced form [I | A] on pivot columns P and free columns F,
    a kernel vector is fixed by its free part: c_P = -A c_F.  The free part
    gets a random support of size 1..max_support so that weights stay small
    enough to probe the order bound.
    """
    red, piv = rref(field, mat)
    n = red.shape[1]
    free = np.setdiff1d(np.arange(n), piv)
    piv_arr = np.array(piv, dtype=np.int64)

    def draw() -> np.ndarray:
        w = int(rng.integers(1, min(max_support, len(free)) + 1))
        cols = rng.choice(free, size=w, replace=False)
        vals = rng.integers(1, field.size, size=w)
        c = np.zeros(n, dtype=np.int64)
        c[cols] = vals
        if len(piv):
            part = field.vsum(field.vmul(red[:, cols], vals[None, :]), axis=1)
            c[piv_arr] = field.vneg(part)
        return c

    return draw
