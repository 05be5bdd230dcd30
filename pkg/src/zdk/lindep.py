"""Incremental detection of the first linear dependency among a stream of
vectors.

Vectors are fed one at a time; the mill row-reduces against what it has
seen and reports, for the first vector that is a combination of the
earlier ones, the coefficients of that combination.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .errors import DimensionMismatch
from .fields import Field

# float64 dot products are exact while p^2 * dim stays below 2^53
_FLOAT_EXACT = 1 << 53


class LinDepMill:
    """Feed vectors of a fixed dimension; feed() returns None while they
    stay independent and the combination coefficients once one depends on
    its predecessors.

    Over a prime field the reduction runs on numpy rows (float64 when the
    dot products stay exact, int64 with per-row reduction otherwise);
    over Q it runs on Fraction lists.
    """

    def __init__(self, field: Field, dim: int):
        self.field = field
        self.dim = dim
        self.count = 0
        self._pivots: list[int] = []
        p = field.char
        if p:
            self._fast = p * p * (dim + 1) < _FLOAT_EXACT
            dt = np.float64 if self._fast else np.int64
            # reduced rows (unit pivots) and the combination of fed
            # vectors each row represents
            self._rows = np.zeros((dim, max(dim, 1)), dtype=dt)
            self._combs = np.zeros((dim, dim + 1), dtype=dt)
        else:
            self._rows = []
            self._combs = []

    def feed(self, vec):
        if len(vec) != self.dim:
            raise DimensionMismatch(f"expected dim {self.dim}, got {len(vec)}")
        if self.field.char:
            return self._feed_fp(vec)
        return self._feed_q(vec)

    def _feed_fp(self, vec):
        p = self.field.char
        k = len(self._pivots)
        dt = self._rows.dtype
        row = np.array([int(v) % p for v in vec], dtype=dt)
        cap = self._combs.shape[1]
        if self.count >= cap:
            # more feeds than dim + 1: widen the combination tracking
            pad = np.zeros((self._combs.shape[0], cap), dtype=dt)
            self._combs = np.hstack([self._combs, pad])
        comb = np.zeros(self._combs.shape[1], dtype=dt)
        comb[self.count] = 1
        if k:
            if self._fast:
                factors = row[self._pivots]
                row = (row - factors @ self._rows[:k]) % p
                comb = (comb - factors @ self._combs[:k]) % p
            else:
                for i, piv in enumerate(self._pivots):
                    f = int(row[piv])
                    if f:
                        row = (row - f * self._rows[i]) % p
                        comb = (comb - f * self._combs[i]) % p
        nz = np.nonzero(row)[0]
        idx = self.count
        self.count += 1
        if len(nz) == 0:
            # comb expresses the zero vector; solve for vec in terms of
            # the earlier vectors
            inv = pow(int(comb[idx]), -1, p)
            return [(-int(c) * inv) % p for c in comb[:idx]]
        piv = int(nz[0])
        inv = pow(int(row[piv]), -1, p)
        row = row * inv % p
        comb = comb * inv % p
        if self._fast and k:
            # keep stored rows fully inter-reduced so that the one-shot
            # reduction above stays valid
            col = self._rows[:k, piv].copy()
            if np.any(col):
                self._rows[:k] = (self._rows[:k] - np.outer(col, row)) % p
                self._combs[:k] = (self._combs[:k] - np.outer(col, comb)) % p
        self._rows[k] = row
        self._combs[k] = comb
        self._pivots.append(piv)
        return None

    def _feed_q(self, vec):
        row = [Fraction(v) for v in vec]
        comb = [Fraction(0)] * self.count + [Fraction(1)]
        for piv, r, c in zip(self._pivots, self._rows, self._combs):
            f = row[piv]
            if f:
                row = [a - f * b for a, b in zip(row, r)]
                for i, b in enumerate(c):
                    comb[i] -= f * b
        idx = self.count
        self.count += 1
        piv = next((i for i, v in enumerate(row) if v), None)
        if piv is None:
            lead = comb[idx]
            return [-c / lead for c in comb[:idx]]
        inv = 1 / row[piv]
        self._pivots.append(piv)
        self._rows.append([v * inv for v in row])
        self._combs.append([c * inv for c in comb])
        return None
