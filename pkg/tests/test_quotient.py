import random

import numpy as np
import pytest

from zdk.fields import GF
from zdk.groebner import Ideal, normal_form, quotient_basis, reduced_gb
from zdk.poly import DEGREVLEX, LEX, Ring
from zdk.quotient import (
    QuotientEngine,
    fp_kernel_basis,
    fp_mat_pow,
    fp_matmul,
    fp_matvec,
)
from zdk.zparse import parse_poly

BIG_P = 1073741789  # forces the limb-splitting matmul path


def _naive_matmul(A, B, p):
    n, k = A.shape
    k2, m = B.shape
    C = np.zeros((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            C[i, j] = sum(int(A[i, t]) * int(B[t, j]) for t in range(k)) % p
    return C.astype(np.int64)


@pytest.mark.parametrize("p", [101, BIG_P])
def test_fp_matmul_exact(p):
    rng = np.random.default_rng(4)
    A = rng.integers(0, p, size=(17, 23)).astype(np.int64)
    B = rng.integers(0, p, size=(23, 11)).astype(np.int64)
    assert np.array_equal(fp_matmul(A, B, p), _naive_matmul(A, B, p))


def test_fp_matvec_and_pow():
    p = 101
    A = np.array([[1, 1], [0, 1]], dtype=np.int64)
    v = np.array([2, 3], dtype=np.int64)
    assert list(fp_matvec(A, v, p)) == [5, 3]
    # A^n is upper triangular with n in the corner
    An = fp_mat_pow(A, 55, p)
    assert An[0, 1] == 55 % p


def test_fp_kernel_basis():
    p = 7
    A = np.array([[1, 2, 3], [2, 4, 6]], dtype=np.int64) % p
    K = fp_kernel_basis(A, p)
    assert K.shape[0] == 2  # rank 1
    for row in K:
        assert np.all(fp_matvec(A, row, p) == 0)
    # independence
    assert np.linalg.matrix_rank(K.astype(float)) == 2


def _ideal(ring, exprs):
    return Ideal(ring, [parse_poly(e, ring) for e in exprs])


@pytest.fixture
def engine():
    ring = Ring(GF(101), ("x", "y"), DEGREVLEX)
    I = _ideal(ring, ["x^3 - y", "y^2 - x - 1"])
    return QuotientEngine(reduced_gb(I))


def test_vector_poly_roundtrip(engine):
    f = parse_poly("x^2 + 5y + 7", engine.ring)
    v = engine.vector_of(f)
    g = engine.poly_of(v)
    assert g == normal_form(f, engine.gb)


def test_var_matrices_match_normal_form(engine):
    gb = engine.gb
    mats = engine.var_matrices()
    for k in range(engine.ring.nvars):
        for j, t in enumerate(engine.basis):
            prod = engine.ring.var(k).mul_pp(t)
            expect = engine.vector_of(prod)
            assert list(mats[k][:, j]) == list(expect)


def test_mult_matrix_columns(engine):
    f = parse_poly("x^2+3x*y+1", engine.ring)
    A = engine.mult_matrix(f)
    from zdk.poly import MultiPoly
    for j, t in enumerate(engine.basis):
        tj = MultiPoly(engine.ring, {t: engine.ring.field.one})
        expect = engine.vector_of(f * tj)
        assert list(A[:, j]) == list(expect)


def test_frobenius_matrix_columns(engine):
    from zdk.poly import MultiPoly
    Phi = engine.frobenius_matrix()
    p = engine.p
    for j, t in enumerate(engine.basis):
        tj = MultiPoly(engine.ring, {t: engine.ring.field.one})
        expect = engine.vector_of(tj ** p)
        assert list(Phi[:, j]) == list(expect)


def test_engine_under_lex():
    """The border walk holds under non-degree orderings too."""
    ring = Ring(GF(13), ("x", "y"), LEX)
    I = _ideal(ring, ["x^2 - y", "y^3 - 2"])
    eng = QuotientEngine(reduced_gb(I))
    from zdk.poly import MultiPoly
    f = parse_poly("x + y^2", ring)
    A = eng.mult_matrix(f)
    for j, t in enumerate(eng.basis):
        tj = MultiPoly(ring, {t: ring.field.one})
        assert list(A[:, j]) == list(eng.vector_of(f * tj))


def test_engine_rejects_q():
    from zdk.fields import QQ
    ring = Ring(QQ, ("x",), DEGREVLEX)
    I = _ideal(ring, ["x^2"])
    with pytest.raises(ValueError):
        QuotientEngine(reduced_gb(I))
