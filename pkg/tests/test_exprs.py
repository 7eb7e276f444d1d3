import random
from fractions import Fraction

import pytest

from conftest import rand_poly
from gaql.exprs import PolyParseError, format_polynomial, parse_polynomial
from gaql.poly import Ring

R3 = Ring(("x", "y", "z"))
R4 = Ring(("x", "y", "u", "v"))
X, Y, Z = R3.gens()
X4, Y4, U4, V4 = R4.gens()


def test_parse_basic():
    assert parse_polynomial("1 + x*z", R3) == 1 + X * Z
    assert parse_polynomial("x*u + y*v", R4) == X4 * U4 + Y4 * V4
    assert parse_polynomial("-3/2*x^2*y + x - 7", R3) == (
        Fraction(-3, 2) * X**2 * Y + X - 7
    )


def test_parse_parentheses_and_powers():
    assert parse_polynomial("(x + y)^2", R3) == X**2 + 2 * X * Y + Y**2
    assert parse_polynomial("2^3", R3) == R3.const(8)
    assert parse_polynomial("x^0", R3) == R3.one()
    assert parse_polynomial("(-x + y)*(x + y)", R3) == Y**2 - X**2
    assert parse_polynomial("0", R3) == R3.zero()


def test_parse_leading_sign():
    assert parse_polynomial("-x", R3) == -X
    assert parse_polynomial("+x", R3) == X
    assert parse_polynomial("- 3*y", R3) == -3 * Y


def test_implicit_multiplication_is_an_identifier():
    with pytest.raises(PolyParseError) as err:
        parse_polynomial("xy + 1", R3)
    assert "xy" in str(err.value)


def test_unknown_variable_position():
    with pytest.raises(PolyParseError) as err:
        parse_polynomial("x +\n  q", R3)
    assert err.value.line == 2
    assert err.value.col == 3


def test_syntax_errors():
    for bad in ("x +", "* x", "x ^ y", "(x", "x)", "1/0", "x^-2", "x & y", ""):
        with pytest.raises(PolyParseError):
            parse_polynomial(bad, R3)


def test_division_only_in_rationals():
    with pytest.raises(PolyParseError):
        parse_polynomial("x/2", R3)


def test_format_examples():
    assert format_polynomial(R3.zero()) == "0"
    assert format_polynomial(X**2 - Y**2) == "x^2 - y^2"
    assert format_polynomial(-X + 1) == "-x + 1"
    assert format_polynomial(Fraction(3, 2) * X * Y**2) == "3/2*x*y^2"
    assert format_polynomial(R3.const(-7)) == "-7"


def test_format_descending_grevlex():
    p = Y**2 + X**2 + X * Y + X + 1
    assert format_polynomial(p) == "x^2 + x*y + y^2 + x + 1"


def test_round_trip_random():
    rng = random.Random(61)
    rings = [R3, R4, Ring(("a",)), Ring(("x1", "x2", "x3"))]
    for _ in range(500):
        ring = rng.choice(rings)
        p = rand_poly(rng, ring, max_degree=4, max_terms=5, coeff_bound=9)
        assert parse_polynomial(format_polynomial(p), ring) == p


def test_round_trip_preserves_canonical_text():
    rng = random.Random(62)
    for _ in range(100):
        p = rand_poly(rng, R4, max_degree=3, max_terms=4)
        text = format_polynomial(p)
        assert format_polynomial(parse_polynomial(text, R4)) == text
