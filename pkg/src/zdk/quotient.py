"""Linear algebra in a zero-dimensional quotient ring over a prime field.

The quotient P/I is handled as the column space spanned by the monomials
outside LT(I).  Multiplication-by-variable matrices are built once by a
dynamic program over the border monomials; everything else (multiplication
matrices of ring elements, Frobenius matrices) is matrix arithmetic on top
of them.

Matrix products run in float64 when p^2 * d < 2^53 keeps the dot products
exact, and fall back to 15-bit limb splitting in int64 otherwise.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch
from .groebner import QuotientBasis, ReducedGB, normal_form, quotient_basis
from .poly import MultiPoly

_FLOAT_EXACT = 1 << 53


def _float_ok(p: int, inner: int) -> bool:
    return p * p * max(inner, 1) < _FLOAT_EXACT


def fp_matmul(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    """Exact (A @ B) mod p for int64 matrices with entries in [0, p)."""
    inner = A.shape[-1]
    if _float_ok(p, inner):
        C = A.astype(np.float64) @ B.astype(np.float64)
        return (C % p).astype(np.int64)
    # split A into 15-bit limbs; partial products stay below 2^45 * inner
    A_lo = A & 0x7FFF
    A_hi = A >> 15
    return ((A_lo @ B) + (((A_hi @ B) % p) << 15)) % p


def fp_matvec(A: np.ndarray, v: np.ndarray, p: int) -> np.ndarray:
    return fp_matmul(A, v.reshape(-1, 1), p).ravel()


def fp_mat_pow(A: np.ndarray, n: int, p: int) -> np.ndarray:
    d = A.shape[0]
    result = np.eye(d, dtype=np.int64)
    base = A
    while n:
        if n & 1:
            result = fp_matmul(result, base, p)
        n >>= 1
        if n:
            base = fp_matmul(base, base, p)
    return result


class QuotientEngine:
    """Coordinates and multiplication matrices for P/I over F_p.

    The border dynamic program walks monomials in increasing sigma-order;
    a proper divisor of a monomial is always sigma-smaller, so the walk
    is well-founded for any multiplicative ordering.
    """

    def __init__(self, gb: ReducedGB, qb: QuotientBasis | None = None):
        ring = gb.ring
        if ring.field.char == 0:
            raise ValueError("QuotientEngine requires a prime field")
        self.ring = ring
        self.p = ring.field.char
        self.gb = gb
        self.qb = qb or quotient_basis(gb)
        self.basis = self.qb.monomials
        self.idx = self.qb.index()
        self.dim = len(self.basis)
        self._var_mats: list[np.ndarray] | None = None

    # -- coordinates ---------------------------------------------------------

    def vector_of(self, f: MultiPoly) -> np.ndarray:
        """Coordinate vector of NF(f) in the quotient basis."""
        nf = normal_form(f, self.gb)
        v = np.zeros(self.dim, dtype=np.int64)
        for pp, c in nf.terms.items():
            i = self.idx.get(pp)
            if i is None:
                raise DimensionMismatch(f"monomial {pp} not in quotient basis")
            v[i] = c
        return v

    def poly_of(self, v) -> MultiPoly:
        fld = self.ring.field
        terms = {}
        for i, c in enumerate(v):
            c = int(c) % self.p
            if c:
                terms[self.basis[i]] = fld.coerce(c)
        return MultiPoly(self.ring, terms)

    # -- multiplication matrices ----------------------------------------------

    def var_matrices(self) -> list[np.ndarray]:
        """M_k with column j the coordinates of NF(x_k * t_j)."""
        if self._var_mats is not None:
            return self._var_mats
        ring, d, n = self.ring, self.dim, self.ring.nvars
        key = ring.order.key
        lt_tails = {g.leading_pp(): g for g in self.gb.elements}

        # border monomials: x_k * t for basis t, outside the basis
        border = set()
        for t in self.basis:
            for k in range(n):
                s = t[:k] + (t[k] + 1,) + t[k + 1:]
                if s not in self.idx:
                    border.add(s)

        nfcol: dict[tuple, np.ndarray] = {}
        for b in sorted(border, key=key):
            g = lt_tails.get(b)
            if g is not None:
                col = np.zeros(d, dtype=np.int64)
                for pp, c in g.terms.items():
                    if pp != b:
                        col[self.idx[pp]] = (-c) % self.p
                nfcol[b] = col
                continue
            # b = x_m * u with u itself in LT(I): fold the known column of u
            # through multiplication by x_m
            for m in range(n):
                if b[m] == 0:
                    continue
                u = b[:m] + (b[m] - 1,) + b[m + 1:]
                if u not in self.idx and u in nfcol:
                    break
            else:
                raise AssertionError("border monomial without reduced divisor")
            col = np.zeros(d, dtype=np.int64)
            for i, c in enumerate(nfcol[u]):
                if c:
                    ti = self.basis[i]
                    s = ti[:m] + (ti[m] + 1,) + ti[m + 1:]
                    j = self.idx.get(s)
                    if j is not None:
                        col[j] = (col[j] + c) % self.p
                    else:
                        col = (col + c * nfcol[s]) % self.p
            nfcol[b] = col

        mats = []
        for k in range(n):
            M = np.zeros((d, d), dtype=np.int64)
            for j, t in enumerate(self.basis):
                s = t[:k] + (t[k] + 1,) + t[k + 1:]
                i = self.idx.get(s)
                if i is not None:
                    M[i, j] = 1
                else:
                    M[:, j] = nfcol[s]
            mats.append(M)
        self._var_mats = mats
        return mats

    def _column_dp(self, first_col: np.ndarray) -> np.ndarray:
        """Matrix with column j equal to NF(t_j * f), given column 0 = NF(f).

        Walks the basis in order; every t_j with j > 0 is x_k times an
        earlier basis monomial.
        """
        mats = self.var_matrices()
        d = self.dim
        out = np.zeros((d, d), dtype=np.int64)
        out[:, 0] = first_col % self.p
        for j in range(1, d):
            t = self.basis[j]
            k = next(i for i in range(len(t)) if t[i] > 0)
            prev = t[:k] + (t[k] - 1,) + t[k + 1:]
            out[:, j] = fp_matvec(mats[k], out[:, self.idx[prev]], self.p)
        return out

    def mult_matrix(self, f: MultiPoly | np.ndarray) -> np.ndarray:
        """Matrix of multiplication by f on the quotient basis."""
        v = f if isinstance(f, np.ndarray) else self.vector_of(f)
        return self._column_dp(v)

    def frobenius_matrix(self) -> np.ndarray:
        """Matrix of a -> a^p on the quotient basis.

        Column j is the coordinate vector of t_j^p; since
        (x_k * t)^p = x_k^p * t^p the columns follow from the p-th powers
        of the variable matrices by the same walk as _column_dp.
        """
        mats = self.var_matrices()
        pk = [fp_mat_pow(M, self.p, self.p) for M in mats]
        d = self.dim
        out = np.zeros((d, d), dtype=np.int64)
        out[0, 0] = 1
        for j in range(1, d):
            t = self.basis[j]
            k = next(i for i in range(len(t)) if t[i] > 0)
            prev = t[:k] + (t[k] - 1,) + t[k + 1:]
            out[:, j] = fp_matvec(pk[k], out[:, self.idx[prev]], self.p)
        return out


def fp_kernel_basis(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of ker(A) over F_p, rows of the returned matrix."""
    d = A.shape[1]
    M = A.copy() % p
    pivots = []
    r = 0
    for c in range(d):
        piv = None
        for i in range(r, M.shape[0]):
            if M[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = M[r] * inv % p
        colvals = M[:, c].copy()
        colvals[r] = 0
        M = (M - np.outer(colvals, M[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(d) if c not in pivots]
    out = np.zeros((len(free), d), dtype=np.int64)
    for row, c in enumerate(free):
        out[row, c] = 1
        for i, pc in enumerate(pivots):
            out[row, pc] = (-int(M[i, c])) % p
    return out
