import random
from fractions import Fraction

import pytest

from normmax.ballapprox import (
    ApproxBall,
    BallRow,
    beta_approx_normmax,
    build_ball_approx,
    check_outer_containment,
    grid_ball,
    row_inside_certificate,
    verify_inner_containment,
    verify_outer_containment,
)
from normmax.errors import BallTooLarge, DimensionCapExceeded, NotSymmetric
from normmax.instances import PolytopeConfig, random_symmetric_hpolytope
from normmax.polytope import HPolytope, box, cross_polytope
from normmax.rational import dot, pnorm_pow
from normmax.solvers import exact_normmax
from normmax.vertices import enumerate_vertices


def test_small_ball_examples():
    B = build_ball_approx(2, 2, 2)
    assert verify_inner_containment(B) and verify_outer_containment(B)
    assert B.facet_count <= 24
    # the m = 2 grid of the worked example
    B2 = grid_ball(2, 2, 2, 2)
    assert B2.facet_count <= 24 and verify_inner_containment(B2) and verify_outer_containment(B2)


@pytest.mark.parametrize("beta", [2, 5, 16])
def test_one_dimensional_ball(beta):
    B = build_ball_approx(2, beta, 1)
    lo, hi = (v[0] for v in enumerate_vertices(B.polytope))
    delta = hi - 1
    assert lo == -hi and 0 <= delta <= Fraction(1, beta - 1)


def test_axis_facet_is_exact():
    B = grid_ball(3, 4, 3, 2)
    row = next(r for r in B.rows if r.z == (1, 0, 0))
    assert row.beta_z == 1
    assert (Fraction(1), Fraction(0), Fraction(0)) in B.polytope.A


def test_inner_certificate_examples():
    assert not row_inside_certificate(BallRow(None, (Fraction(1), Fraction(1)), Fraction(1)), 2)
    assert row_inside_certificate(BallRow(None, (Fraction(1), Fraction(0)), Fraction(1)), 2)
    # ||(1,1)||_{3/2} = 2^(2/3) is just below 8/5
    assert row_inside_certificate(BallRow(None, (Fraction(1), Fraction(1)), Fraction(8, 5)), 3)
    assert not row_inside_certificate(BallRow(None, (Fraction(1), Fraction(1)), Fraction(3, 2)), 3)
    assert not verify_inner_containment(ApproxBall.from_rows([((1, 1), 1)], 2, 2))


def test_outer_box_examples():
    square = ApproxBall(box([1, 1]), 2, 2, ())
    assert verify_outer_containment(square)
    assert not verify_outer_containment(ApproxBall(box([1, 1]), 2, 8, ()))
    with pytest.raises(DimensionCapExceeded):
        check_outer_containment(ApproxBall(box([1] * 4), 2, 2, ()), mode="exact")


def test_sampled_mode_catches_a_loose_ball():
    rep = check_outer_containment(ApproxBall(box([1] * 4), 2, 8, ()), mode="sampled")
    assert not rep.ok and rep.mode == "sampled"
    rep = check_outer_containment(build_ball_approx(2, 2, 4), mode="sampled")
    assert rep.ok


def test_facet_budget():
    with pytest.raises(BallTooLarge):
        build_ball_approx(2, 500, 4, max_facets=1000)


def test_sandwich_per_facet():
    rng = random.Random(5)
    for p in (2, 3):
        B = build_ball_approx(p, 4, 3)
        for _ in range(30):
            x = tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(3))
            # a^T x <= ||x||_p, compared in p-th powers when a^T x >= 0
            for a in B.polytope.A:
                t = dot(a, x)
                assert t <= 0 or t**p <= pnorm_pow(x, p)
        for v in enumerate_vertices(B.polytope):
            assert pnorm_pow(v, p) <= Fraction(4, 3) ** p


def test_approx_examples():
    w, g = beta_approx_normmax(box([1, 1]), 2, 4)
    assert pnorm_pow(w, 2) >= Fraction(9, 16) * 2
    w, g = beta_approx_normmax(cross_polytope(2), 2, 2)
    assert pnorm_pow(w, 2) >= Fraction(1, 4)
    with pytest.raises(NotSymmetric):
        beta_approx_normmax(HPolytope.from_rows([((1, 0), 1), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)]), 2, 2)


def test_self_maximization():
    B = build_ball_approx(2, 4, 2)
    lam = Fraction(5, 3)
    res = beta_approx_normmax(B.polytope.scaled(lam), 2, 4)
    assert res.gauge == lam
    assert max(dot(a, res.witness) for a in B.polytope.A) == lam


def test_ratio_and_monotone_guarantee():
    rng = random.Random(17)
    for _ in range(12):
        P = random_symmetric_hpolytope(rng, PolytopeConfig(dims=(2, 3), max_rows=10))
        for p in (2, 3):
            opt = exact_normmax(P, p).value
            last = None
            for beta in (2, 3, 4, 8):
                res = beta_approx_normmax(P, p, beta)
                val = pnorm_pow(res.witness, p)
                assert val >= Fraction(beta - 1, beta) ** p * opt
                assert res.guarantee <= val and res.guarantee <= opt <= res.upper_bound
                assert last is None or res.guarantee >= last
                last = res.guarantee
