from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from normmax.errors import BallNotNormalized, DependentGenerators, DimensionCapExceeded
from normmax.polytope import HPolytope, box, cross_polytope
from normmax.rational import pnorm_pow
from normmax.solvers import decide_normmax, exact_normmax, max_phi, normmax1, parmax
from normmax.vertices import enumerate_vertices
from strategies import symmetric_hpolytopes

SQUARE = box([1, 1])
WIDE = box([3, 1])
E3 = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_exact_normmax_examples():
    r = exact_normmax(SQUARE, 2)
    assert r.value == 2
    # every corner attains 2; ties go to the lexicographically smallest
    assert r.witness == (-1, -1)
    assert exact_normmax(cross_polytope(2), 2).value == 1
    assert exact_normmax(WIDE, 1).value == 4


def test_max_phi_examples():
    assert max_phi(SQUARE, cross_polytope(2)).value == 2
    assert max_phi(WIDE, cross_polytope(2)).value == 4
    assert max_phi(SQUARE, SQUARE).value == 1
    with pytest.raises(BallNotNormalized):
        max_phi(SQUARE, box([2, 2]))


def test_normmax1_examples():
    assert normmax1(SQUARE).value == 2
    assert normmax1(cross_polytope(2)).value == 1
    assert normmax1(WIDE).value == 4


def test_parmax_examples():
    assert parmax(E3, "zero_one", 2).value == 3
    assert parmax(E3, "sym", 2).value == 3
    r = parmax([(1, 0), (1, 1)], "01", 2)
    assert r.value == 5 and r.witness == (2, 1)
    with pytest.raises(DependentGenerators):
        parmax([(1, 2), (2, 4)], "sym", 2)
    with pytest.raises(DependentGenerators):
        parmax([(1, 0, 0), (0, 1, 0)], "sym", 2)


def test_decide_examples():
    assert decide_normmax(SQUARE, 2, 2)
    assert not decide_normmax(SQUARE, 2, Fraction(2001, 1000))
    assert decide_normmax(cross_polytope(2), 1, 1, solver="l1")
    with pytest.raises(ValueError):
        decide_normmax(SQUARE, 2, 1, solver="l1")


def test_dimension_cap(monkeypatch):
    P = box([1] * 3)
    with pytest.raises(DimensionCapExceeded):
        exact_normmax(P, 2, cap=2)
    monkeypatch.setenv("NORMMAX_DIM_CAP", "2")
    with pytest.raises(DimensionCapExceeded):
        normmax1(P)


@given(symmetric_hpolytopes(dims=(2, 3, 4)))
def test_normmax1_matches_brute_force(P):
    assert normmax1(P).value == exact_normmax(P, 1).value


@given(symmetric_hpolytopes(), st.integers(1, 4), st.builds(Fraction, st.integers(1, 9), st.integers(1, 4)))
def test_scaling(P, p, lam):
    assert exact_normmax(P.scaled(lam), p).value == lam**p * exact_normmax(P, p).value


@given(symmetric_hpolytopes(), st.integers(1, 4))
def test_witness_mirror(P, p):
    r = exact_normmax(P, p)
    mirror = tuple(-x for x in r.witness)
    assert P.contains(mirror) and pnorm_pow(mirror, p) == r.value


@given(st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=3, max_size=3), st.integers(1, 3))
def test_parmax_sym_dominates(gens, p):
    try:
        zo = parmax(gens, "01", p)
    except DependentGenerators:
        return
    assert parmax(gens, "sym", p).value >= zo.value


def test_max_phi_monotone_in_ball():
    # B = cross-polytope sits inside B' = square; the gauge of the smaller ball is larger
    small, large = cross_polytope(2), box([1, 1])
    assert all(large.contains(v) for v in enumerate_vertices(small))
    for P in (SQUARE, WIDE, HPolytope.from_rows([((1, 2), 3), ((-1, -2), 3), ((1, 0), 1), ((-1, 0), 1)])):
        assert max_phi(P, small).value >= max_phi(P, large).value


def test_parmax_against_point_enumeration():
    gens = [(1, -2, 0), (3, 1, 1), (0, 1, -1)]
    best = max(
        pnorm_pow(tuple(sum(l * g[i] for l, g in zip(lam, gens)) for i in range(3)), 3)
        for lam in product((-1, 1), repeat=3)
    )
    assert parmax(gens, "sym", 3).value == best
