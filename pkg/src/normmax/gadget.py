"""Clique -> norm-maximization gadget with rounded rational data.

A graph on ``n`` vertices and a clique size ``k`` become a polytope in
dimension ``2k``: every 2-D block is a rounded copy of a ``2n``-gon inscribed in
the unit p-sphere, and coupling rows forbid pairs of blocks that sit on a
non-edge (or twice on the same vertex). Its maximal p-norm power is at least
``k (1-U)^p`` iff the graph has a k-clique, and at most
``(k-1)(1+U)^p + 1 - 2^(p-3)/(p n^p)`` otherwise.

Vertex labels follow the graph convention: 1-based, ``1..n`` for the points
in the upper half-plane and ``n+1..2n`` for their mirror images.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import config
from .errors import (
    DimensionCapExceeded,
    GapViolation,
    KTooLarge,
    NotInConvexPosition,
    OddN,
    ParseError,
)
from .polytope import HPolytope
from .rational import Vector, dot, neg, pnorm_pow, signed_power, solve_square, sub
from .solvers import exact_normmax
from .vertices import integer_row, enumerate_vertices, integer_vertices


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        clean = set()
        for e in self.edges:
            u, v = sorted(e)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {e} outside vertex range 1..{self.n}")
            clean.add((u, v))
        object.__setattr__(self, "edges", frozenset(clean))

    def adjacent(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def non_edges(self):
        return [e for e in combinations(range(1, self.n + 1), 2) if e not in self.edges]

    def padded(self, n):
        """Same graph with isolated vertices appended up to ``n``."""
        if n < self.n:
            raise ValueError("cannot pad to fewer vertices")
        return Graph(n, self.edges)


def complete_graph(n):
    return Graph(n, frozenset(combinations(range(1, n + 1), 2)))


def parse_dimacs(text: str) -> Graph:
    """Read ``p edge n m`` / ``e u v`` (1-indexed); ``c`` and ``#`` lines are comments."""
    n = None
    declared = None
    p_line = 1
    edge_lines = 0
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "c#":
            continue
        tok = line.split()
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tok) != 4:
                raise ParseError("problem line must read 'p edge n m'", lineno)
            try:
                n, declared = int(tok[2]), int(tok[3])
            except ValueError:
                raise ParseError("vertex and edge counts must be integers", lineno) from None
            p_line = lineno
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(tok) != 3:
                raise ParseError("edge line must read 'e u v'", lineno)
            try:
                u, v = int(tok[1]), int(tok[2])
            except ValueError:
                raise ParseError("edge endpoints must be integers", lineno) from None
            if u == v or not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"bad edge {u} {v}", lineno)
            edges.add((min(u, v), max(u, v)))
            edge_lines += 1
        else:
            raise ParseError(f"unknown line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line", 1)
    if declared != edge_lines:
        raise ParseError(f"declared {declared} edges, found {edge_lines} edge lines", p_line)
    return Graph(n, frozenset(edges))


def serialize_dimacs(G: Graph) -> str:
    lines = [f"p edge {G.n} {len(G.edges)}"]
    lines += [f"e {u} {v}" for u, v in sorted(G.edges)]
    return "\n".join(lines) + "\n"


def clique_oracle(G: Graph, k: int) -> bool:
    """Exhaustive k-subset search (ground truth for small graphs)."""
    if k <= 0:
        return True
    if k > G.n:
        return False
    return any(
        all(G.adjacent(u, v) for u, v in combinations(S, 2))
        for S in combinations(range(1, G.n + 1), k)
    )


# --- sphere points ---------------------------------------------------------


@dataclass(frozen=True)
class SpherePoint:
    """Rounded point plus an exact bracket ``[lo, hi]`` around the true point."""

    rounded: Vector
    lo: Vector
    hi: Vector


def _ray_start(v, n):
    if v <= n // 2:
        s = Fraction(2 * (v - 1), n)
        return (1 - s, s), (1, 1)
    s = Fraction(2 * v - (n + 2), n)
    return (-s, 1 - s), (-1, 1)


def _on_ray(start, direction, t):
    return (start[0] + t * direction[0], start[1] + t * direction[1])


def _l1(x):
    return abs(x[0]) + abs(x[1])


def _snap_inside(lo, hi, p, U):
    """Grid point of ``(U/2) Z^2`` inside the unit p-ball closest to segment [lo, hi].

    Closeness is the certified worst case ``max(|g - lo|_1, |g - hi|_1)``,
    which bounds the distance to the true point on the segment.
    """
    h = U / 2
    best = None
    ranges = []
    for i in range(2):
        base = min(lo[i], hi[i]) // h
        ranges.append([(base + off) * h for off in range(-1, 3)])
    for gx in ranges[0]:
        for gy in ranges[1]:
            g = (Fraction(gx), Fraction(gy))
            if pnorm_pow(g, p) > 1:
                continue
            bound = max(_l1(sub(g, lo)), _l1(sub(g, hi)))
            key = (bound, g)
            if best is None or key < best:
                best = key
    return best


def sphere_bracket(v: int, n: int, p: int, U: Fraction) -> SpherePoint:
    """Rounded sphere point for label ``v`` in ``1..n``.

    The ray ``start + t * dir`` crosses the unit p-sphere exactly once for
    ``t >= 0``; ``t -> ||start + t dir||_p^p`` is strictly increasing, so
    bisection brackets the crossing. The bracket is refined until the rounded
    point is certified within ``U`` (l1, hence every p'-norm) of the true one.
    """
    start, direction = _ray_start(v, n)
    t_lo, t_hi = Fraction(0), Fraction(1)
    if pnorm_pow(start, p) == 1:
        t_hi = t_lo
    width_goal = U / 8
    while True:
        while t_hi - t_lo > width_goal:
            mid = (t_lo + t_hi) / 2
            val = pnorm_pow(_on_ray(start, direction, mid), p)
            if val == 1:
                t_lo = t_hi = mid
            elif val < 1:
                t_lo = mid
            else:
                t_hi = mid
        lo, hi = _on_ray(start, direction, t_lo), _on_ray(start, direction, t_hi)
        bound, g = _snap_inside(lo, hi, p, U)
        if bound <= U:
            return SpherePoint(g, lo, hi)
        width_goal /= 16


def sphere_points(n: int, p: int, U: Fraction) -> list[Vector]:
    """The ``2n`` rounded points, labels ``1..2n`` in counterclockwise order."""
    return [sp.rounded for sp in _sphere_brackets(n, p, U)]


def _sphere_brackets(n, p, U):
    if n % 2:
        raise OddN(f"n={n} is odd; pad the graph first")
    if n < 4:
        raise ValueError("need n >= 4")
    if p < 2:
        raise ValueError("the gadget needs p >= 2")
    U = Fraction(U)
    half = [sphere_bracket(v, n, p, U) for v in range(1, n + 1)]
    mirror = [
        SpherePoint(tuple(-x for x in sp.rounded), tuple(-x for x in sp.lo), tuple(-x for x in sp.hi))
        for sp in half
    ]
    return half + mirror


def dual_normals(points: Sequence[Vector], p: int) -> list[Vector]:
    """``q(x) = (sgn(x_i) |x_i|^(p-1))_i`` for every point."""
    return [tuple(signed_power(c, p - 1) for c in x) for x in points]


def eps_bar(points, normals) -> Fraction:
    """``1 - max_{u != v} q_u^T p_v``."""
    best = max(
        dot(q, x) for u, q in enumerate(normals) for v, x in enumerate(points) if u != v
    )
    return 1 - best


# --- the 2n-gon ---------------------------------------------------------------


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def polygon_hrep(points: Sequence[Vector], normals: Sequence[Vector] | None = None) -> HPolytope:
    """Facets ``a_v^T x <= 1`` through consecutive points (2x2 Cramer solves).

    The points must be in counterclockwise order around the origin and in
    strictly convex position; otherwise :class:`NotInConvexPosition`. When
    ``normals`` are given, each ``normals[v]`` must also strictly separate
    ``points[v]`` from every other point.
    """
    m = len(points)
    if m < 3:
        raise NotInConvexPosition("need at least three points")
    for v in range(m):
        a, b, c = points[v], points[(v + 1) % m], points[(v + 2) % m]
        if _cross(sub(b, a), sub(c, b)) <= 0:
            raise NotInConvexPosition(f"points {v + 1}, {v + 2}, {v + 3} do not turn left")
    # a single counterclockwise loop around the origin: angles add up to 2*pi,
    # i.e. each consecutive pair turns left as seen from 0
    for v in range(m):
        if _cross(points[v], points[(v + 1) % m]) <= 0:
            raise NotInConvexPosition(f"points {v + 1}, {v + 2} do not wind around the origin")
    winding = sum(
        1 for v in range(m) if points[v][1] < 0 <= points[(v + 1) % m][1]
    )
    if winding != 1:
        raise NotInConvexPosition("points wind around the origin more than once")

    rows = []
    for v in range(m):
        a = solve_square([points[v], points[(v + 1) % m]], [Fraction(1), Fraction(1)])
        rows.append((a, Fraction(1)))
    P = HPolytope.from_rows(rows, dim=2)
    for v, x in enumerate(points):
        tight = P.tight_rows(x)
        if not P.contains(x) or sorted(tight) != sorted({(v - 1) % m, v}):
            raise NotInConvexPosition(f"point {v + 1} is not a vertex of the polygon")
    if normals is not None:
        for v, q in enumerate(normals):
            own = dot(q, points[v])
            if any(dot(q, x) >= own for u, x in enumerate(points) if u != v):
                raise NotInConvexPosition(f"normal {v + 1} does not separate its point")
    return P


# --- the gadget ---------------------------------------------------------------


def gadget_U(n, k, p) -> Fraction:
    return Fraction(1, n ** (2 * p) * k * k)


def yes_threshold(k, p, U) -> Fraction:
    return k * (1 - U) ** p


def no_threshold(k, p, U, n) -> Fraction:
    return (k - 1) * (1 + U) ** p + 1 - Fraction(2) ** (p - 3) / (p * n ** p)


def far_bound(n, p) -> Fraction:
    """Largest allowed p-norm power of a block that is far from every vertex."""
    return 1 - Fraction(2) ** (p - 3) / (p * n ** p)


def far_region_vertices(points, normals, eps, v):
    """Vertices of the triangle ``0, p_v, p_{v+1}`` cut by ``q_v^T x <= 1 - eps/2``
    and ``q_{v+1}^T x <= 1 - eps/2`` (0-based ``v``)."""
    m = len(points)
    a, b = points[v], points[(v + 1) % m]
    level = 1 - eps / 2
    edge = solve_square([a, b], [Fraction(1), Fraction(1)])
    rows = [
        (edge, Fraction(1)),
        ((a[1], -a[0]), Fraction(0)),  # cross(a, x) >= 0
        ((-b[1], b[0]), Fraction(0)),  # cross(x, b) >= 0
        (normals[v], level),
        (normals[(v + 1) % m], level),
    ]
    Q = HPolytope.from_rows(rows, dim=2)
    return enumerate_vertices(Q, method="brute", check_bounded=False)


@dataclass(frozen=True)
class GadgetInstance:
    polytope: HPolytope
    p: int
    k: int
    n_padded: int
    graph: Graph
    U: Fraction
    eps_bar: Fraction
    vertices_bar: tuple
    normals_bar: tuple
    yes_threshold: Fraction
    no_threshold: Fraction
    polygon: HPolytope = field(repr=False)
    n_original: int = 0

    @property
    def dim(self):
        return 2 * self.k

    def sidecar(self) -> dict:
        from .rational import fmt_rational

        return {
            "n_original": self.n_original,
            "n_padded": self.n_padded,
            "k": self.k,
            "p": self.p,
            "dim": self.dim,
            "rows": len(self.polytope),
            "U": fmt_rational(self.U),
            "eps_bar": fmt_rational(self.eps_bar),
            "yes_threshold": fmt_rational(self.yes_threshold),
            "no_threshold": fmt_rational(self.no_threshold),
        }


def certify_size(n, k, p, points=None, normals=None):
    """Per-instance replacement for "n sufficiently large".

    Returns a dict of named exact checks; the gadget for ``n`` is usable when
    all of them hold.
    """
    U = gadget_U(n, k, p)
    if points is None:
        points = sphere_points(n, p, U)
        normals = dual_normals(points, p)
    eps = eps_bar(points, normals)
    yes, no = yes_threshold(k, p, U), no_threshold(k, p, U, n)
    eps_lb = Fraction(2) ** (p - 1) / (p * n ** p)
    checks = {
        "gap": no < yes,
        "eps_positive": eps > 0,
        "eps_lower_bound": eps >= eps_lb - 3 * p * U,
        "norms": all((1 - U) ** p <= pnorm_pow(x, p) <= 1 for x in points),
    }
    if checks["eps_positive"]:
        bound = far_bound(n, p)
        checks["far"] = all(
            max(pnorm_pow(x, p) for x in far_region_vertices(points, normals, eps, v)) <= bound
            for v in range(len(points))
        )
    else:
        checks["far"] = False
    return checks, points, normals, eps


def _block_row(k, i, a):
    row = [Fraction(0)] * (2 * k)
    row[2 * i], row[2 * i + 1] = a
    return row


def _pair_row(k, i, a, j, b):
    row = [Fraction(0)] * (2 * k)
    row[2 * i], row[2 * i + 1] = a
    row[2 * j], row[2 * j + 1] = b
    return row


def build_gadget(G: Graph, k: int, p: int, max_n: int = 200) -> GadgetInstance:
    """Pad ``G`` until every exact certificate holds, then assemble the polytope."""
    if k < 2:
        raise ValueError("the gadget needs k >= 2")
    if p < 2:
        raise ValueError("the gadget needs p >= 2")
    n = max(4, G.n + G.n % 2)
    while True:
        if k > n:
            raise KTooLarge(f"k={k} exceeds the {n} vertices of the padded graph")
        checks, points, normals, eps = certify_size(n, k, p)
        if all(checks.values()):
            break
        n += 2
        if n > max_n:
            raise RuntimeError(f"no certified gadget size up to n={max_n}: {checks}")

    U = gadget_U(n, k, p)
    Gp = G.padded(n)
    polygon = polygon_hrep(points, normals)

    rows = []
    for i in range(k):
        for a, beta in polygon.rows:
            rows.append((_block_row(k, i, a), beta))
    rhs = 2 - eps
    pairs = Gp.non_edges() + [(v, v) for v in range(1, n + 1)]
    for u, v in pairs:
        qu, qv = normals[u - 1], normals[v - 1]
        nqu, nqv = tuple(-x for x in qu), tuple(-x for x in qv)
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                rows.append((_pair_row(k, i, qu, j, qv), rhs))
                rows.append((_pair_row(k, i, nqu, j, nqv), rhs))
                rows.append((_pair_row(k, i, qu, j, nqv), rhs))
                rows.append((_pair_row(k, i, nqu, j, qv), rhs))
    P = HPolytope.from_rows(rows, dim=2 * k).dedup()
    return GadgetInstance(
        polytope=P,
        p=p,
        k=k,
        n_padded=n,
        graph=Gp,
        U=U,
        eps_bar=eps,
        vertices_bar=tuple(points),
        normals_bar=tuple(normals),
        yes_threshold=yes_threshold(k, p, U),
        no_threshold=no_threshold(k, p, U, n),
        polygon=polygon,
        n_original=G.n,
    )


def nearest_vertex_index(x_block: Sequence, normals: Sequence[Vector]) -> int:
    """1-based label maximizing ``q_v^T x_block``; lowest label on ties."""
    best, best_val = None, None
    for v, q in enumerate(normals, start=1):
        val = dot(q, x_block)
        if best is None or val > best_val:
            best, best_val = v, val
    return best


def blocks(x: Sequence, k: int):
    return [tuple(x[2 * i : 2 * i + 2]) for i in range(k)]


def gadget_normmax(inst: GadgetInstance, cap=None, method: str = "cells"):
    """Exact norm maximum of a gadget.

    ``"cells"`` uses the triangle decomposition (:func:`cell_normmax`), which is
    much faster for k >= 3; ``"direct"`` enumerates all vertices of the gadget
    and serves as the cross-check.
    """
    if method == "direct":
        return exact_normmax(inst.polytope, inst.p, cap=cap, method="cdd")
    if method != "cells":
        raise ValueError(f"unknown gadget method {method!r}")
    limit = config.dim_cap(cap)
    if inst.dim > limit:
        raise DimensionCapExceeded(f"gadget dimension {inst.dim} exceeds cap {limit}")
    return cell_normmax(inst)


def decide_clique_via_normmax(inst: GadgetInstance, cap=None, method: str = "cells") -> bool:
    """Exact norm maximum against the YES threshold; a value inside the gap is a bug."""
    value = gadget_normmax(inst, cap=cap, method=method).value
    if inst.no_threshold < value < inst.yes_threshold:
        raise GapViolation(
            f"optimum {value} lies strictly between {inst.no_threshold} and {inst.yes_threshold}"
        )
    return value >= inst.yes_threshold


@dataclass
class BoundsReport:
    n: int
    p: int
    k: int
    U: Fraction
    eps_bar: Fraction
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(self.checks.values())


def verify_gadget_bounds(n: int, p: int, k: int = 2) -> BoundsReport:
    """Re-derive the rounded points for ``n`` and check the per-point bounds.

    ``U`` depends on ``k`` too; the bounds hold for any ``k >= 1`` and the
    default ``k=2`` is the smallest meaningful clique size.
    """
    if n < 4 or n % 2:
        raise OddN(f"n must be even and >= 4, got {n}")
    U = gadget_U(n, k, p)
    sps = _sphere_brackets(n, p, U)
    pts = [sp.rounded for sp in sps]
    qs = dual_normals(pts, p)
    eps = eps_bar(pts, qs)
    m = 2 * n

    slack = 16 * U / n + 4 * U * U
    lo_d, hi_d = Fraction(8, n * n) - slack, Fraction(16, n * n) + slack
    dist_ok = all(
        lo_d <= pnorm_pow(sub(pts[v], pts[(v + 1) % m]), 2) <= hi_d for v in range(m)
    )
    eps_lb = Fraction(2) ** (p - 1) / (p * n ** p)

    def normal_gap(sp, qbar):
        # q is monotone in each coordinate, so the bracket endpoints bound it
        total = Fraction(0)
        for i in range(2):
            ends = [signed_power(sp.lo[i], p - 1), signed_power(sp.hi[i], p - 1)]
            total += max(abs(e - qbar[i]) for e in ends)
        return total

    checks = {
        "neighbor_distances": dist_ok,
        "eps_lower_bound": eps >= eps_lb - 3 * p * U,
        "eps_positive": eps > 0,
        "support_identity": all(dot(q, x) == pnorm_pow(x, p) for q, x in zip(qs, pts)),
        "norm_bounds": all((1 - U) ** p <= pnorm_pow(x, p) <= (1 + U) ** p for x in pts),
        "rounding_distance": all(
            max(_l1(sub(sp.rounded, sp.lo)), _l1(sub(sp.rounded, sp.hi))) <= U for sp in sps
        ),
        "normal_rounding": all(normal_gap(sp, q) <= (p - 1) * U for sp, q in zip(sps, qs)),
    }
    return BoundsReport(n, p, k, U, eps, checks)


def _triangle_rows(points, polygon, v):
    m = len(points)
    a, b = points[v], points[(v + 1) % m]
    return [
        (polygon.A[v], polygon.b[v]),
        ((a[1], -a[0]), Fraction(0)),
        ((-b[1], b[0]), Fraction(0)),
    ]


def _lift(k, i, a):
    row = [Fraction(0)] * (2 * k)
    row[2 * i], row[2 * i + 1] = a
    return tuple(row)


def _block_symmetries(inst: GadgetInstance):
    """Coordinate maps ``(perm, sign)`` that provably fix the gadget, or just the identity.

    Candidates are block permutations and the global sign flip. Each is
    accepted only if it maps the row set of ``P`` onto itself exactly and the
    polygon is centrally symmetric (``p_{v+n} = -p_v``).
    """
    from itertools import permutations

    k, pts = inst.k, inst.vertices_bar
    m = len(pts)
    rows = inst.polytope.canonical_rows()
    central = all(pts[(v + m // 2) % m] == neg(pts[v]) for v in range(m))

    def image(a, perm, sign):
        out = [None] * (2 * k)
        for i, j in enumerate(perm):
            out[2 * j], out[2 * j + 1] = sign * a[2 * i], sign * a[2 * i + 1]
        return tuple(out)

    found = []
    for perm in permutations(range(k)):
        for sign in (1, -1):
            if sign == -1 and not central:
                continue
            mapped = HPolytope(
                2 * k, tuple(image(a, perm, sign) for a, _ in rows), tuple(b for _, b in rows)
            )
            if mapped.canonical_rows() == rows:
                found.append((perm, sign))
    return found, m


def cell_normmax(inst: GadgetInstance):
    """Exact ``max ||x||_p^p`` over the gadget, one cell at a time.

    The 2n-gon is the union of the triangles ``conv{0, p_v, p_{v+1}}``, so the
    gadget is covered by the cells ``(T_{v_1} x ... x T_{v_k}) ∩ P``. A row of
    ``P`` whose block-separable maximum over the triangle product stays within
    its right-hand side cannot cut the cell and is dropped. Cells that are
    images of each other under a verified symmetry are solved once; the
    maximizers found are then pushed through every symmetry so the witness is
    still the lexicographically smallest maximizer over all of ``P``.
    """
    from itertools import product

    from .solvers import BRUTEFORCE, NormmaxResult

    P, k, p = inst.polytope, inst.k, inst.p
    pts = inst.vertices_bar
    syms, m = _block_symmetries(inst)
    tri_verts = [((Fraction(0), Fraction(0)), pts[v], pts[(v + 1) % m]) for v in range(m)]

    # per row: its nonzero blocks, and the max of each block part over each triangle
    row_blocks = []
    for a in P.A:
        parts = []
        for i in range(k):
            blk = (a[2 * i], a[2 * i + 1])
            if blk[0] or blk[1]:
                parts.append((i, [max(dot(blk, w) for w in tri_verts[v]) for v in range(m)]))
        row_blocks.append(parts)

    # cdd is measurably faster on integer rows
    tri_rows = [
        [
            [integer_row(_lift(k, i, a), beta) for a, beta in _triangle_rows(pts, inst.polygon, v)]
            for v in range(m)
        ]
        for i in range(k)
    ]
    int_rows = [integer_row(a, beta) for a, beta in P.rows]

    def cell_image(cell, perm, sign):
        out = [None] * k
        for i, j in enumerate(perm):
            out[j] = cell[i] if sign == 1 else (cell[i] + m // 2) % m
        return tuple(out)

    def point_image(x, perm, sign):
        out = [None] * (2 * k)
        for i, j in enumerate(perm):
            out[2 * j], out[2 * j + 1] = sign * x[2 * i], sign * x[2 * i + 1]
        return tuple(out)

    best_val, maximizers, seen = None, set(), set()
    for cell in product(range(m), repeat=k):
        if min(cell_image(cell, perm, sign) for perm, sign in syms) != cell:
            continue
        rows = [r for i, v in enumerate(cell) for r in tri_rows[i][v]]
        for row, beta, parts in zip(int_rows, P.b, row_blocks):
            if sum(mx[cell[i]] for i, mx in parts) > beta:
                rows.append(row)
        for key in integer_vertices([a for a, _ in rows], [b for _, b in rows], seen):
            if key in seen:
                continue
            seen.add(key)
            den, num = key
            val = Fraction(sum(abs(xi) ** p for xi in num), den**p)
            if best_val is None or val > best_val:
                best_val, maximizers = val, {key}
            elif val == best_val:
                maximizers.add(key)
    maximizers = [tuple(Fraction(xi, den) for xi in num) for den, num in maximizers]
    witness = min(point_image(x, perm, sign) for x in maximizers for perm, sign in syms)
    return NormmaxResult(best_val, witness, BRUTEFORCE)
