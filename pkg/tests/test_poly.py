import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdk.errors import ZeroPolynomial
from zdk.fields import GF, QQ
from zdk.poly import (
    DEGLEX,
    DEGREVLEX,
    LEX,
    MultiPoly,
    Ring,
    UniPoly,
    content_primitive,
    den_poly,
    map_mod_p,
    poly_map_field,
    pp_div,
    pp_divides,
    pp_lcm,
    pp_mul,
    sqfree_uni,
    subst_univariate,
    uni_pth_root,
)

RQ = Ring(QQ, ("x", "y", "z"), DEGREVLEX)
RP = Ring(GF(101), ("x", "y", "z"), DEGREVLEX)


def test_orderings_disagree_correctly():
    # x^2 y vs x y^2 z: deg 3 vs 4
    a, b = (2, 1, 0), (1, 2, 1)
    assert LEX.key(a) > LEX.key(b)
    assert DEGLEX.key(a) < DEGLEX.key(b)
    assert DEGREVLEX.key(a) < DEGREVLEX.key(b)


def test_degrevlex_classic():
    # among degree-2 monomials in x,y,z: x^2 > xy > y^2 > xz > yz > z^2
    order = [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)]
    keys = [DEGREVLEX.key(pp) for pp in order]
    assert keys == sorted(keys, reverse=True)


def test_pp_ops():
    a, b = (2, 1, 0), (1, 2, 0)
    assert pp_mul(a, b) == (3, 3, 0)
    assert pp_lcm(a, b) == (2, 2, 0)
    assert not pp_divides(a, b)
    assert pp_divides((1, 1, 0), a)
    assert pp_div(a, (1, 1, 0)) == (1, 0, 0)


def _rand_poly(ring, rng, nterms=5, maxdeg=4):
    terms = []
    for _ in range(rng.randint(0, nterms)):
        pp = tuple(rng.randint(0, maxdeg) for _ in range(ring.nvars))
        c = rng.randint(-20, 20)
        terms.append((pp, c))
    return ring.from_terms(terms)


@pytest.mark.parametrize("ring", [RQ, RP])
def test_ring_axioms(ring):
    rng = random.Random(3)
    for _ in range(50):
        f = _rand_poly(ring, rng)
        g = _rand_poly(ring, rng)
        h = _rand_poly(ring, rng)
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert f - f == ring.zero()
        assert f * ring.one() == f
        assert f * ring.zero() == ring.zero()


def test_leading_term():
    f = RQ.from_terms([((2, 0, 0), 1), ((1, 1, 1), 1)])
    assert f.leading_pp() == (1, 1, 1)
    with pytest.raises(ZeroPolynomial):
        RQ.zero().leading_pp()


def test_str_canonical():
    f = RQ.from_terms([((0, 0, 0), Fraction(1, 9)), ((2, 0, 0), 1),
                       ((0, 1, 0), Fraction(-1, 9))])
    assert str(f) == "x^2 - 1/9y + 1/9"


def test_den_poly_and_mod_p():
    f = RQ.from_terms([((1, 0, 0), Fraction(1, 6)), ((0, 0, 0), Fraction(1, 4))])
    assert den_poly(f) == 12
    g = map_mod_p(f, 5)
    assert g.ring.field.char == 5
    # 1/6 = 1 mod 5, 1/4 = 4 mod 5
    assert g.terms == {(1, 0, 0): 1, (0, 0, 0): 4}


def test_poly_map_field_roundtrip():
    f = RQ.from_terms([((1, 2, 0), 7), ((0, 0, 0), -3)])
    g = poly_map_field(f, RP)
    assert g.terms == {(1, 2, 0): 7, (0, 0, 0): 98}


def test_subst_univariate():
    mu = UniPoly(QQ, [Fraction(1), Fraction(0), Fraction(1)])  # z^2 + 1
    f = RQ.from_terms([((1, 0, 0), 1), ((0, 1, 0), 1)])  # x + y
    g = subst_univariate(mu, f)
    expect = f * f + RQ.one()
    assert g == expect


# -- univariate ------------------------------------------------------------

F5 = GF(5)


def _uni(field, coeffs):
    return UniPoly(field, [field.coerce(c) for c in coeffs])


def test_unipoly_divmod():
    f = _uni(QQ, [-1, 0, 0, 1])  # z^3 - 1
    g = _uni(QQ, [-1, 1])  # z - 1
    q, r = f.divmod(g)
    assert r.is_zero()
    assert q == _uni(QQ, [1, 1, 1])


@given(st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_unipoly_divmod_random(seed):
    rng = random.Random(seed)
    p = 101
    fld = GF(p)
    f = _uni(fld, [rng.randrange(p) for _ in range(rng.randint(1, 120))])
    g = _uni(fld, [rng.randrange(p) for _ in range(rng.randint(1, 80))])
    if g.is_zero():
        return
    q, r = f.divmod(g)
    assert q * g + r == f
    assert r.is_zero() or r.degree() < g.degree()


def test_unipoly_long_mul_matches_schoolbook():
    # exercise the convolution fast path against direct expansion
    rng = random.Random(11)
    p = 101
    fld = GF(p)
    a = [rng.randrange(p) for _ in range(90)]
    b = [rng.randrange(p) for _ in range(70)]
    f, g = _uni(fld, a), _uni(fld, b)
    direct = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            direct[i + j] = (direct[i + j] + ca * cb) % p
    assert (f * g).coeffs == UniPoly(fld, direct).coeffs


def test_unipoly_gcd():
    f = _uni(QQ, [-1, 0, 1])  # (z-1)(z+1)
    g = _uni(QQ, [-1, 1])
    assert f.gcd(g) == g.monic()
    assert f.gcd(_uni(QQ, [1])).degree() == 0


def test_pow_mod():
    fld = F5
    m = _uni(fld, [1, 0, 1])  # z^2 + 1
    x = UniPoly.x(fld)
    r = x.pow_mod(4, m)
    # z^4 = (z^2)^2 = (-1)^2 = 1 mod z^2+1
    assert r == UniPoly.one(fld)


def test_sqfree_char0():
    f = _uni(QQ, [0, 0, 1]) * _uni(QQ, [-1, 1])  # z^2 (z-1)
    s = sqfree_uni(f)
    assert s == _uni(QQ, [0, -1, 1])  # z(z-1)


def test_sqfree_char_p_pth_powers():
    fld = F5
    # f = (z^5 - z)^1 has 5 distinct roots; f^5 collapses back to f
    f = UniPoly.x_pow(fld, 5) - UniPoly.x(fld)
    g = f ** 5
    assert sqfree_uni(g) == f.monic()


def test_uni_pth_root():
    fld = F5
    f = _uni(fld, [2, 0, 0, 0, 0, 3])  # 3z^5 + 2 = (3^(1/5) z + ...)^5 shape
    r = uni_pth_root(f)
    assert r ** 5 == f


def test_content_primitive():
    f = _uni(QQ, [Fraction(2, 3), Fraction(4, 3)])
    c, ints = content_primitive(f)
    assert c == Fraction(2, 3)
    assert ints == [1, 2]


def test_unipoly_str_uses_z():
    f = _uni(QQ, [Fraction(8, 81), Fraction(-17, 81), 0, 1])
    assert str(f) == "z^3 - 17/81z + 8/81"
