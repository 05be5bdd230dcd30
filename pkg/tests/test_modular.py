import random
from fractions import Fraction

import pytest

from zdk.errors import HeuristicExhausted
from zdk.fields import GF, QQ
from zdk.groebner import Ideal, reduce_ideal_mod_p, reduced_gb
from zdk.minpoly import minpoly_def
from zdk.modular import (
    PrimeClass,
    classify_prime,
    minpoly,
    minpoly_modular,
    minpoly_modular_heuristic,
)
from zdk.poly import DEGREVLEX, Ring, UniPoly, poly_map_field
from zdk.zparse import parse_poly

from helpers import random_element, random_zero_dim_ideal


def _ideal(ring, exprs):
    return Ideal(ring, [parse_poly(e, ring) for e in exprs])


RQ = Ring(QQ, ("x", "y"), DEGREVLEX)


@pytest.fixture
def square_ideal():
    return _ideal(RQ, ["x^2", "y^2"])


def test_bad_prime_recovery(square_ideal):
    """p=2 drops the degree from 3 to 2; the run recovers and flags it."""
    f = parse_poly("x+y", RQ)
    mu, report = minpoly_modular(f, square_ideal, first_primes=(2,))
    assert str(mu) == "z^3"
    assert report.verified
    assert (2, 2) in report.primes_rejected
    assert 2 not in report.primes_used


def test_classify_prime():
    I = _ideal(RQ, ["3x^3 - x^2 + 1", "x^2 - y"])  # den_sigma = 9
    f = parse_poly("x", RQ)
    assert classify_prime(3, f, I) is PrimeClass.UGLY
    assert classify_prime(5, f, I) is PrimeClass.USABLE
    g = parse_poly("1/7x", RQ)
    assert classify_prime(7, g, I) is PrimeClass.UGLY


def test_ugly_primes_skipped_silently():
    I = _ideal(RQ, ["3x^3 - x^2 + 1", "x^2 - y"])
    f = parse_poly("x", RQ)
    mu, report = minpoly_modular(f, I, first_primes=(3,))
    assert mu == UniPoly(QQ, [Fraction(1, 3), 0, Fraction(-1, 3), 1])
    assert 3 not in report.primes_used
    assert all(p != 3 for p, _ in report.primes_rejected)


def test_early_exit_certificate():
    ring = Ring(QQ, ("x",), DEGREVLEX)
    I = _ideal(ring, ["x^3 - 2"])
    mu, report = minpoly_modular(parse_poly("x", ring), I)
    assert str(mu) == "z^3 - 2"
    assert report.early_exit
    assert report.verified


def test_no_verify_flag(square_ideal):
    f = parse_poly("x+y", RQ)
    mu, report = minpoly_modular(f, square_ideal, verify=False)
    assert str(mu) == "z^3"
    assert report.unverified_flag and not report.verified


def test_modular_image_divisibility(square_ideal):
    """The modular minimal polynomial divides the reduction of the true one."""
    f = parse_poly("x+y", RQ)
    mu, _ = minpoly_modular(f, square_ideal)
    for p in (2, 5, 7, 11, 13):
        I_p = reduce_ideal_mod_p(square_ideal, p)
        f_p = poly_map_field(f, I_p.ring)
        mu_p = minpoly_def(f_p, I_p)
        mu_mod = UniPoly(GF(p), [c for c in map(GF(p).coerce, mu.coeffs)])
        assert (mu_mod % mu_p).is_zero()


def test_modular_matches_def_random():
    rng = random.Random(21)
    ring = Ring(QQ, ("x", "y"), DEGREVLEX)
    for _ in range(10):
        I = random_zero_dim_ideal(ring, rng, max_dim=9)
        f = random_element(ring, rng, max_deg=2)
        mu, report = minpoly_modular(f, I)
        assert report.verified
        assert mu == minpoly_def(f, I)


def test_heuristic_single_prime_pitfall(square_ideal):
    """With p=2 as the only prime the heuristic returns the wrong z^2."""
    f = parse_poly("x+y", RQ)
    mu, report = minpoly_modular_heuristic(
        square_ideal.gens, RQ, f, primes=[2])
    assert str(mu) == "z^2"
    assert report.unverified_flag


def test_heuristic_agrees_with_enough_primes(square_ideal):
    f = parse_poly("x+y", RQ)
    mu, report = minpoly_modular_heuristic(square_ideal.gens, RQ, f)
    assert str(mu) == "z^3"
    assert len(report.primes_used) >= 2
    assert report.unverified_flag  # never certified


def test_heuristic_no_usable_prime(square_ideal):
    f = parse_poly("1/2x", RQ)
    with pytest.raises(HeuristicExhausted):
        minpoly_modular_heuristic(square_ideal.gens, RQ, f, primes=[2])


def test_dispatcher(square_ideal):
    f = parse_poly("x+y", RQ)
    mu, report = minpoly(f, square_ideal)
    assert str(mu) == "z^3" and report is not None
    mu, report = minpoly(f, square_ideal, alg="def")
    assert str(mu) == "z^3" and report is None
    ring2 = Ring(GF(2), ("x", "y"), DEGREVLEX)
    I2 = _ideal(ring2, ["x^2", "y^2"])
    f2 = parse_poly("x+y", ring2)
    mu, report = minpoly(f2, I2, alg="modular")
    assert str(mu) == "z^2" and report is None
    with pytest.raises(ValueError):
        minpoly(f, square_ideal, alg="nope")
