"""Seeded random instances shared by the tests and the experiment scripts."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .gadget import Graph
from .polytope import HPolytope, VPolytope
from .rational import rank


@dataclass(frozen=True)
class PolytopeConfig:
    dims: tuple = (2, 3, 4)
    max_rows: int = 12  # counts both members of each +-pair
    coef: int = 5  # numerators in [-coef, coef]
    max_den: int = 3
    max_rhs: int = 5


def random_rational(rng, bound, max_den):
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(-bound * den, bound * den), den)


def random_symmetric_hpolytope(rng: random.Random, cfg: PolytopeConfig = PolytopeConfig(), d=None):
    """``{|a_i^T x| <= b_i}`` with rational data; resampled until the normals span R^d."""
    d = d if d is not None else rng.choice(cfg.dims)
    pairs_max = cfg.max_rows // 2
    while True:
        pairs = rng.randint(d, pairs_max)
        normals = [tuple(random_rational(rng, cfg.coef, cfg.max_den) for _ in range(d)) for _ in range(pairs)]
        if rank(normals) < d:
            continue
        rows = []
        for a in normals:
            b = Fraction(rng.randint(1, cfg.max_rhs * cfg.max_den), rng.randint(1, cfg.max_den))
            rows.append((a, b))
            rows.append((tuple(-x for x in a), b))
        return HPolytope.from_rows(rows, dim=d)


def random_symmetric_vpolytope(rng: random.Random, d, max_pairs=4, coef=4, max_den=2):
    """``conv{+-v_j}`` with the ``v_j`` spanning R^d, so 0 is interior."""
    while True:
        k = rng.randint(d, max_pairs)
        pts = [tuple(random_rational(rng, coef, max_den) for _ in range(d)) for _ in range(k)]
        if rank(pts) == d:
            return VPolytope.from_points(pts + [tuple(-x for x in v) for v in pts])


def random_generators(rng: random.Random, d, coef=3):
    while True:
        gens = [tuple(Fraction(rng.randint(-coef, coef)) for _ in range(d)) for _ in range(d)]
        if rank(gens) == d:
            return gens


def all_graphs(n):
    """Every labeled graph on ``n`` vertices."""
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in product((0, 1), repeat=len(pairs)):
        yield Graph(n, frozenset(e for e, bit in zip(pairs, mask) if bit))


def random_graph(rng: random.Random, n, density=Fraction(1, 2)):
    edges = frozenset(e for e in combinations(range(1, n + 1), 2) if rng.random() < density)
    return Graph(n, edges)
