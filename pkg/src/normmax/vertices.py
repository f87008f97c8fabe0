"""Vertex enumeration and polarity for exact polytopes."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb, lcm

from . import config
from .errors import InfeasiblePolytope, OriginNotInterior, UnboundedPolytope
from .lp import is_bounded
from .polytope import HPolytope, VPolytope
from .rational import dot, rank, solve_square


def enumerate_vertices(P: HPolytope, method: str = "auto", check_bounded: bool = True):
    """Exact vertex set of a bounded H-polytope, sorted lexicographically.

    ``method="brute"`` solves every d-subset of rows (the O(n^d) textbook
    algorithm); ``"cdd"`` runs exact double description through pycddlib.
    ``"auto"`` picks brute force while ``C(n, d)`` is small.
    """
    if check_bounded and not is_bounded(P):
        raise UnboundedPolytope(f"polytope with {len(P)} rows in dimension {P.dim} is unbounded")
    if method == "auto":
        method = "brute" if comb(len(P), P.dim) <= config.BRUTE_FORCE_SUBSETS else "cdd"
    if method == "brute":
        verts = _brute_force(P)
    elif method == "cdd":
        verts = _double_description(P)
    else:
        raise ValueError(f"unknown vertex enumeration method {method!r}")
    return sorted(verts)


def _brute_force(P: HPolytope):
    found = set()
    for idx in combinations(range(len(P)), P.dim):
        x = solve_square([P.A[i] for i in idx], [P.b[i] for i in idx])
        if x is not None and P.contains(x):
            found.add(x)
    return found


def _double_description(P: HPolytope):
    return {
        tuple(Fraction(x, den) for x in nums) for den, nums in integer_vertices(P.A, P.b)
    }


def integer_vertices(A, b, known=frozenset()):
    """Exact double description returning vertices as ``(den, numerators)``.

    Integer keys hash and compare far faster than tuples of Fractions, which
    matters when many small polytopes are enumerated. Every vertex not in
    ``known`` is re-checked against all rows in integer arithmetic.
    """
    import cdd

    # cdd rows are [b, -a] meaning b - a^T x >= 0
    mat = cdd.Matrix([[beta] + [-x for x in a] for a, beta in zip(A, b)], number_type="fraction")
    mat.rep_type = cdd.RepType.INEQUALITY
    gens = cdd.Polyhedron(mat).get_generators()
    int_rows = [integer_row(a, beta) for a, beta in zip(A, b)]
    verts = set()
    for i in range(gens.row_size):
        row = gens[i]
        if row[0] == 0:
            raise UnboundedPolytope("double description returned a ray")
        coords = [x if isinstance(x, Fraction) else Fraction(x) for x in row[1:]]
        den = lcm(*(x.denominator for x in coords))
        key = (den, tuple(x.numerator * (den // x.denominator) for x in coords))
        if key not in known:
            num = key[1]
            for a, beta in int_rows:
                if sum(ai * xi for ai, xi in zip(a, num) if ai) > beta * den:
                    raise AssertionError("double description produced an infeasible vertex")
        verts.add(key)
    if verts and gens.lin_set:
        raise UnboundedPolytope("polytope has a lineality space")
    return verts


def integer_row(a, beta):
    if type(beta) is int and all(type(x) is int for x in a):
        return list(a), beta
    beta = Fraction(beta)
    den = lcm(*(Fraction(x).denominator for x in a), beta.denominator)
    return [int(x * den) for x in a], int(beta * den)


def require_nonempty(verts, P):
    if not verts:
        raise InfeasiblePolytope(f"polytope with {len(P)} rows is empty")
    return verts


def polar_of_vpoly(P: VPolytope) -> HPolytope:
    """``{x : v^T x <= 1 for all points v}``; needs 0 in the interior of conv(P).

    The polar is bounded exactly when the origin is interior, so the
    precondition is checked with the same 2d boundedness LPs.
    """
    rows = []
    seen = set()
    for v in P.points:
        if any(v) and v not in seen:
            seen.add(v)
            rows.append((v, Fraction(1)))
    if not rows:
        raise OriginNotInterior("all points are the origin")
    Q = HPolytope.from_rows(rows, dim=P.dim)
    if not is_bounded(Q):
        raise OriginNotInterior("origin is not in the interior of the convex hull")
    return Q


def polar_of_hpoly(P: HPolytope) -> VPolytope:
    """``conv{a_i / b_i}``, valid when every right-hand side is positive."""
    if any(beta <= 0 for beta in P.b):
        raise OriginNotInterior("polar needs all right-hand sides > 0")
    return VPolytope.from_points(tuple(x / beta for x in a) for a, beta in zip(P.A, P.b))


def hull_vertices(P: VPolytope, method: str = "auto"):
    """Extreme points of a full-dimensional V-polytope containing 0 in its interior."""
    Q = polar_of_vpoly(P)
    facets = enumerate_vertices(Q, method=method)
    # a point is extreme iff its polar row is facet-defining: tight at d
    # linearly independent vertices of the polar
    out = []
    for v in sorted(set(P.points)):
        tight = [f for f in facets if dot(v, f) == 1]
        if len(tight) >= P.dim and rank(tight) == P.dim:
            out.append(v)
    return out
