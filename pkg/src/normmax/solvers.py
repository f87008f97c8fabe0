"""Exact and FPT norm maximization over H-polytopes."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from . import config
from .errors import (
    BallNotNormalized,
    DependentGenerators,
    DimensionCapExceeded,
    InfeasiblePolytope,
    UnboundedPolytope,
)
from .lp import INFEASIBLE, UNBOUNDED, solve_lp_max
from .polytope import HPolytope, cross_polytope
from .rational import Vector, pnorm_pow, rank, vec, zero
from .vertices import enumerate_vertices

BRUTEFORCE = "bruteforce"
MAX_PHI = "max_phi"
PARMAX = "parmax"


@dataclass(frozen=True)
class NormmaxResult:
    value: Fraction
    witness: Vector
    method: str


def _check_cap(d, cap, what):
    limit = config.dim_cap(cap)
    if d > limit:
        raise DimensionCapExceeded(f"{what}: dimension {d} exceeds cap {limit}")


def _argmax(pairs):
    """Max value; ties go to the lexicographically smallest point."""
    best_val, best_pt = None, None
    for val, pt in pairs:
        if best_val is None or val > best_val or (val == best_val and pt < best_pt):
            best_val, best_pt = val, pt
    return best_val, best_pt


def exact_normmax(P: HPolytope, p: int, cap=None, method: str = "auto") -> NormmaxResult:
    """``max ||x||_p^p`` over the vertices of ``P`` (a convex function peaks at a vertex)."""
    _check_cap(P.dim, cap, "exact_normmax")
    verts = enumerate_vertices(P, method=method)
    if not verts:
        raise InfeasiblePolytope("cannot maximize over an empty polytope")
    value, witness = _argmax((pnorm_pow(v, p), v) for v in verts)
    return NormmaxResult(value, witness, BRUTEFORCE)


def max_phi(P: HPolytope, ball: HPolytope) -> NormmaxResult:
    """Maximize the gauge of ``ball = {a_i^T x <= 1}`` over ``P``, one LP per facet.

    The gauge is ``max_i a_i^T x``, so its maximum over ``P`` is the largest
    of the per-facet LP optima.
    """
    if ball.dim != P.dim:
        raise ValueError("ball and polytope live in different dimensions")
    if any(beta != 1 for beta in ball.b):
        raise BallNotNormalized("ball rows must be scaled to right-hand side 1")
    results = []
    for a in ball.A:
        res = solve_lp_max(a, P)
        if res.status == UNBOUNDED:
            raise UnboundedPolytope("facet LP is unbounded")
        if res.status == INFEASIBLE:
            raise InfeasiblePolytope("polytope is empty")
        results.append((res.value, res.point))
    value, witness = _argmax(results)
    return NormmaxResult(value, witness, MAX_PHI)


def normmax1(P: HPolytope, cap=None) -> NormmaxResult:
    """Exact ``max ||x||_1`` via the 2^d facet normals of the cross-polytope."""
    _check_cap(P.dim, cap, "normmax1")
    return max_phi(P, cross_polytope(P.dim))


def parmax(generators: Sequence[Sequence], mode: str, p: int, cap=None) -> NormmaxResult:
    """Norm maximum over the parallelotope ``sum lambda_i v_i``.

    ``mode="zero_one"`` takes ``lambda in [0, 1]^d``, ``mode="sym"`` takes
    ``[-1, 1]^d``. The maximum sits at a vertex, i.e. at an extreme
    coefficient vector, so all 2^d of those are evaluated.
    """
    gens = [vec(g) for g in generators]
    if not gens:
        raise DependentGenerators("need at least one generator")
    d = len(gens[0])
    if any(len(g) != d for g in gens):
        raise ValueError("generators of mixed length")
    if mode in ("01", "zero_one"):
        coeffs = (0, 1)
    elif mode == "sym":
        coeffs = (-1, 1)
    else:
        raise ValueError(f"unknown parmax mode {mode!r}")
    _check_cap(len(gens), cap, "parmax")
    if len(gens) != d or rank(gens) != d:
        raise DependentGenerators(f"{len(gens)} generators in dimension {d} are not a basis")

    def points():
        for lam in product(coeffs, repeat=len(gens)):
            x = list(zero(d))
            for l, g in zip(lam, gens):
                if l:
                    for i in range(d):
                        x[i] += l * g[i]
            x = tuple(x)
            yield pnorm_pow(x, p), x

    value, witness = _argmax(points())
    return NormmaxResult(value, witness, PARMAX)


def decide_normmax(P: HPolytope, p: int, gamma, solver: str = "exact", cap=None) -> bool:
    """Answer ``max ||x||_p^p >= gamma`` exactly."""
    gamma = Fraction(gamma)
    if solver in ("exact", "exact_normmax"):
        value = exact_normmax(P, p, cap=cap).value
    elif solver in ("l1", "normmax1"):
        if p != 1:
            raise ValueError("the l1 solver only answers p = 1")
        value = normmax1(P, cap=cap).value
    else:
        raise ValueError(f"unknown solver {solver!r}")
    return value >= gamma
