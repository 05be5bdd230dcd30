import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdk.errors import DimensionMismatch
from zdk.fields import GF, QQ, is_prime
from zdk.lindep import LinDepMill

# forces the int64 per-row path: p^2 (dim+1) overflows the float window
BIG_P = 1073741789


def test_big_p_is_prime():
    assert is_prime(BIG_P)


def test_zero_vector_first():
    mill = LinDepMill(GF(101), 3)
    assert mill.feed([0, 0, 0]) == []


def test_simple_dependency():
    mill = LinDepMill(GF(101), 2)
    assert mill.feed([1, 0]) is None
    assert mill.feed([0, 1]) is None
    # [3, 4] = 3*e0 + 4*e1
    assert mill.feed([3, 4]) == [3, 4]


def test_dimension_mismatch():
    mill = LinDepMill(GF(101), 2)
    with pytest.raises(DimensionMismatch):
        mill.feed([1, 2, 3])


def _check_combination(field, vecs, last, comb):
    n = len(last)
    for j in range(n):
        s = field.zero
        for c, v in zip(comb, vecs):
            s = field.add(s, field.mul(c, field.coerce(v[j])))
        assert s == field.coerce(last[j])


@pytest.mark.parametrize("p", [101, BIG_P])
@given(st.integers(0, 2**32))
@settings(max_examples=40, deadline=None)
def test_fp_random(p, seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 12)
    field = GF(p)
    mill = LinDepMill(field, dim)
    vecs = []
    for _ in range(dim + 1):
        v = [rng.randrange(p) for _ in range(dim)]
        comb = mill.feed(v)
        if comb is not None:
            _check_combination(field, vecs, v, comb)
            return
        vecs.append(v)
    pytest.fail("no dependency among dim+1 vectors")


@given(st.integers(0, 2**32))
@settings(max_examples=25, deadline=None)
def test_q_random(seed):
    rng = random.Random(seed)
    dim = rng.randint(1, 8)
    mill = LinDepMill(QQ, dim)
    vecs = []
    for _ in range(dim + 1):
        v = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
             for _ in range(dim)]
        comb = mill.feed(v)
        if comb is not None:
            _check_combination(QQ, vecs, v, comb)
            return
        vecs.append(v)
    pytest.fail("no dependency among dim+1 vectors")


def test_planted_dependency_big_dim():
    """A vector planted as a known combination is recovered exactly."""
    rng = random.Random(9)
    p, dim = 23, 150
    field = GF(p)
    mill = LinDepMill(field, dim)
    vecs = [[rng.randrange(p) for _ in range(dim)] for _ in range(60)]
    for v in vecs:
        assert mill.feed(v) is None
    coeffs = [rng.randrange(p) for _ in range(60)]
    planted = [sum(c * v[j] for c, v in zip(coeffs, vecs)) % p
               for j in range(dim)]
    comb = mill.feed(planted)
    assert comb is not None
    _check_combination(field, vecs, planted, comb)
