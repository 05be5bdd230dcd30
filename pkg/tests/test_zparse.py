import pytest

from zdk.errors import NonPrimeField, ParseError, UnknownVariable
from zdk.fields import GF, QQ
from zdk.poly import DEGREVLEX, LEX, Ring
from zdk.zparse import parse_poly, parse_problem

EX = """\
# sample problem
ring Q[x,y] order degrevlex
ideal = [3x^3 - x^2 + 1, x^2 - y]
elem f = x + y
"""


def test_parse_problem():
    pf = parse_problem(EX)
    assert pf.ring.field == QQ
    assert pf.ring.names == ("x", "y")
    assert pf.ring.order == DEGREVLEX
    assert len(pf.ideal.gens) == 2
    assert str(pf.ideal.gens[0]) == "3x^3 - x^2 + 1"
    assert str(pf.elems["f"]) == "x + y"


def test_prime_field_header():
    pf = parse_problem("ring F101[x] order lex\nideal = [x^2]")
    assert pf.ring.field == GF(101)
    assert pf.ring.order == LEX


def test_field_with_space():
    pf = parse_problem("ring F 7[x] order degrevlex\nideal = [x]")
    assert pf.ring.field == GF(7)


def test_non_prime_field():
    with pytest.raises(NonPrimeField):
        parse_problem("ring F4[x] order lex\nideal = [x^2]")


def test_unknown_variable():
    with pytest.raises(UnknownVariable):
        parse_problem("ring Q[x] order lex\nideal = [x + w]")


def test_duplicate_variable():
    with pytest.raises(ParseError):
        parse_problem("ring Q[x,x] order lex\nideal = [x]")


def test_parse_error_position():
    with pytest.raises(ParseError) as e:
        parse_problem("ring Q[x] order lex\nideal = [x +]")
    assert e.value.position == 32
    assert "position 32" in str(e.value)


def test_unexpected_character():
    with pytest.raises(ParseError) as e:
        parse_problem("ring Q[x] order lex\nideal = [x?]")
    assert e.value.position is not None


RING = Ring(QQ, ("x", "y"), DEGREVLEX)


def test_coefficient_juxtaposition():
    assert parse_poly("3x^2", RING) == parse_poly("3 * x^2", RING)
    assert parse_poly("3x^2y", RING) == parse_poly("3*x^2*y", RING)


def test_rational_coefficients():
    f = parse_poly("1/3x - 2/9", RING)
    assert str(f) == "1/3x - 2/9"


def test_signs_and_merging():
    assert parse_poly("-x + 2x", RING) == parse_poly("x", RING)
    assert parse_poly("x - x", RING).is_zero()
    assert str(parse_poly("+x", RING)) == "x"


def test_repeated_variable_factors():
    assert parse_poly("x*x*y", RING) == parse_poly("x^2y", RING)


def test_trailing_garbage():
    with pytest.raises(ParseError):
        parse_poly("x + y ]", RING)


def test_roundtrip_idempotent():
    cases = [
        "x^2 - 1/9y + 1/9",
        "x*y - 1/3y + 1/3",
        "-x - y",
        "0",
        "5",
        "3x^3*y^2 + x - 7",
    ]
    for text in cases:
        f = parse_poly(text, RING)
        assert parse_poly(str(f), RING) == f
        assert str(parse_poly(str(f), RING)) == str(f)


def test_fp_coefficients_reduced():
    ring = Ring(GF(7), ("x",), DEGREVLEX)
    assert str(parse_poly("10x", ring)) == "3x"
    assert parse_poly("7x", ring).is_zero()
    assert str(parse_poly("1/3x", ring)) == "5x"  # 3*5 = 1 mod 7
