import random
from fractions import Fraction

import pytest

from normmax.errors import NotSymmetric, OriginNotInterior
from normmax.instances import random_symmetric_hpolytope, random_symmetric_vpolytope
from normmax.polytope import HPolytope, VPolytope, box, cross_polytope
from normmax.radii import inscribed_cube_lp, radius_h, radius_v
from normmax.rational import pnorm_pow
from normmax.vertices import enumerate_vertices

CUBE2 = VPolytope.from_points([(1, 1), (1, -1), (-1, 1), (-1, -1)])
CROSS3 = VPolytope.from_points([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])


def test_radius_h_examples():
    assert radius_h(box([1, 1]), 2) == 2
    assert radius_h(box([1, 1]), 1) == 2
    assert radius_h(cross_polytope(2), 2, "half_diameter") == 1
    with pytest.raises(NotSymmetric):
        radius_h(HPolytope.from_rows([((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)]), 2)


def test_radius_v_examples():
    r = radius_v(CUBE2, 2)
    assert r.v == 1 and r.power == 1
    r = radius_v(CROSS3, 2, "width")
    assert r.v == 3 and r.power == Fraction(1, 3)
    assert r.decide(Fraction(1, 3)) and not r.decide(Fraction(1, 4))
    with pytest.raises(OriginNotInterior):
        radius_v(VPolytope.from_points([(1, 0), (-1, 0)]), 2)
    with pytest.raises(NotSymmetric):
        radius_v(VPolytope.from_points([(1, 0), (0, 1), (-1, -1)]), 2)


def test_inscribed_cube_examples():
    assert inscribed_cube_lp(CUBE2) == 1
    assert inscribed_cube_lp(CROSS3) == Fraction(1, 3)


def test_polarity_against_lp():
    rng = random.Random(23)
    for d in (2, 3):
        for _ in range(6):
            P = random_symmetric_vpolytope(rng, d)
            assert radius_v(P, 1).power == inscribed_cube_lp(P)


def test_radius_h_is_vertex_max_and_scales():
    rng = random.Random(29)
    for _ in range(10):
        P = random_symmetric_hpolytope(rng)
        if P.dim > 3:
            continue
        for p in (1, 2, 3):
            value = radius_h(P, p)
            assert value == max(pnorm_pow(v, p) for v in enumerate_vertices(P, method="cdd"))
            assert radius_h(P.scaled(Fraction(3, 2)), p) == Fraction(3, 2) ** p * value
