from fractions import Fraction

import pytest
from hypothesis import given

from normmax.errors import ParseError
from normmax.polytope import (
    HPolytope,
    VPolytope,
    box,
    cross_polytope,
    parse_polytope,
    serialize_polytope,
)
from strategies import symmetric_hpolytopes


def test_parse_square():
    P = parse_polytope("H 2 4\n1 0 1\n-1 0 1\n0 1 1\n0 -1 1")
    assert P == box([1, 1])
    assert P.is_symmetric()


def test_parse_segment_and_rationals():
    S = parse_polytope("V 2 2\n1 0\n-1 0")
    assert isinstance(S, VPolytope) and S.is_symmetric()
    H = parse_polytope("H 2 1\n1/3 2 5/7")
    assert H.A == ((Fraction(1, 3), Fraction(2)),)
    assert H.b == (Fraction(5, 7),)


def test_comments_and_blank_lines():
    text = "# unit interval\nH 1 2\n\n1 1  # right\n-1 1\n"
    assert len(parse_polytope(text)) == 2


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("Q 2 1\n1 1 1", 1),
        ("H 2 2\n1 0 1", 2),
        ("H 2 1\n1 0 1\n0 1 1", 3),
        ("H 2 1\n1 0", 2),
        ("H 2 1\n1 0.5 1", 2),
        ("V 2 1\n1 1/0", 2),
    ],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as err:
        parse_polytope(text)
    assert err.value.line == line
    assert f"line {line}" in str(err.value)


@given(symmetric_hpolytopes())
def test_round_trip(P):
    assert parse_polytope(serialize_polytope(P)) == P


def test_round_trip_v():
    V = VPolytope.from_points([(Fraction(1, 2), 3), (-1, Fraction(-7, 3))])
    assert parse_polytope(serialize_polytope(V)) == V


def test_symmetry_flags():
    assert cross_polytope(3).is_symmetric()
    half = HPolytope.from_rows([((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)])
    assert not half.is_symmetric()
    # symmetric up to row scaling
    scaled = HPolytope.from_rows([((2, 0), 2), ((-1, 0), 1)])
    assert scaled.is_symmetric()


def test_contains_and_scaling():
    P = box([1, 1])
    assert P.contains((1, 1)) and not P.contains((Fraction(3, 2), 0))
    assert P.scaled(3).contains((3, -3))
    with pytest.raises(ValueError):
        P.scaled(0)
