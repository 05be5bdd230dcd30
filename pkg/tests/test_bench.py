import random
from fractions import Fraction

import pytest

from zdk.bench import (
    CASES,
    _elem_sym,
    _random_points,
    _splitting_ideal,
    run_suite,
    vanishing_ideal,
)
from zdk.fields import GF, QQ
from zdk.groebner import normal_form, quotient_basis, reduced_gb
from zdk.poly import DEGREVLEX, MultiPoly, Ring
from zdk.zparse import parse_poly


def test_case_ids_unique():
    ids = [c.id for c in CASES]
    assert len(ids) == len(set(ids)) == 14


@pytest.mark.slow
def test_cases_build():
    """Every light case builds and parses; stretch-only cases are skipped."""
    for case in CASES:
        if all(ch.suite == "stretch" for ch in case.checks):
            continue
        ideal = case.build()
        for ch in case.checks:
            if ch.elem:
                parse_poly(ch.elem, ideal.ring)


def test_elem_sym():
    ring = Ring(QQ, ("a", "b", "c"), DEGREVLEX)
    e1, e2, e3 = _elem_sym(ring)
    a, b, c = ring.vars()
    assert e1 == a + b + c
    assert e2 == a * b + a * c + b * c
    assert e3 == a * b * c


def test_splitting_ideal_dimension():
    # splitting algebra of x^3 - 2 has dimension 3! = 6
    I = _splitting_ideal(QQ, 3, {3: -2})
    assert len(quotient_basis(reduced_gb(I))) == 6
    # and each generator encodes a coefficient: e3 - 2 vanishes
    a = parse_poly("a1*a2*a3", I.ring)
    gb = reduced_gb(I)
    assert normal_form(a, gb) == I.ring.const(2)


def test_vanishing_ideal_small():
    ring = Ring(QQ, ("x", "y"), DEGREVLEX)
    pts = [(0, 0), (1, 2), (-1, 3), (4, 4)]
    I = vanishing_ideal(ring, pts)
    gb = reduced_gb(I)
    assert len(quotient_basis(gb)) == len(pts)
    for g in gb.elements:
        for pt in pts:
            val = sum(c * Fraction(pt[0]) ** pp[0] * Fraction(pt[1]) ** pp[1]
                      for pp, c in g.terms.items())
            assert val == 0
    # a polynomial vanishing at all points is in the ideal
    f = ring.one()
    for pt in pts:
        f = f * (ring.var(0) - ring.const(pt[0]))
    assert normal_form(f, gb).is_zero()


def test_vanishing_ideal_fp():
    ring = Ring(GF(101), ("x", "y"), DEGREVLEX)
    rng = random.Random(1)
    pts = {(rng.randrange(101), rng.randrange(101)) for _ in range(12)}
    I = vanishing_ideal(ring, sorted(pts))
    assert len(quotient_basis(reduced_gb(I))) == len(pts)


def test_random_points_deterministic():
    a = _random_points(20, 3, seed=87)
    assert a == _random_points(20, 3, seed=87)
    assert len(set(a)) == 20


@pytest.mark.slow
def test_run_suite_single_case(capsys):
    ok = run_suite(suite="desk", case_id="twomaxsimple", seed=0)
    out = capsys.readouterr().out
    assert ok
    assert "[twomaxsimple] minpoly-deg" in out
    assert "pass" in out
