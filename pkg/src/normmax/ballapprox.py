"""Rational polytopes sandwiched around the p-ball, and the beta-approximation.

A grid direction ``z`` gives the halfspace ``q(z)^T x <= beta_z`` with
``q(z)_i = sgn(z_i)|z_i|^(p-1)``. Its support-function test is
``||q(z)||_q <= beta_z``, i.e. ``(sum |z_i|^p)^(p-1) <= beta_z^p``, which is an
integer comparison once ``beta_z`` is dyadic.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from . import config
from .errors import BallTooLarge, DimensionCapExceeded, NotSymmetric
from .lp import solve_lp_max
from .polytope import HPolytope
from .rational import iroot_ceil, pnorm_pow, sgn
from .solvers import max_phi
from .vertices import enumerate_vertices

OUTER_EXACT_MAX_DIM = 3


@dataclass(frozen=True)
class BallRow:
    z: tuple | None  # grid direction, None for hand-built rows
    q: tuple
    beta_z: Fraction


@dataclass(frozen=True)
class ApproxBall:
    polytope: HPolytope  # rows scaled to rhs 1
    p: int
    beta: int
    rows: tuple  # BallRow per facet, pre-normalization
    m: int | None = None

    @property
    def facet_count(self):
        return len(self.polytope)

    @property
    def dim(self):
        return self.polytope.dim

    @property
    def outer_bound(self) -> Fraction:
        """``(beta/(beta-1))^p``, the allowed blow-up of ``||v||_p^p``."""
        return Fraction(self.beta, self.beta - 1) ** self.p

    @classmethod
    def from_rows(cls, rows, p, beta):
        """Wrap hand-made ``(a, b)`` rows; inner containment is then checked generically."""
        brows, A = [], []
        for a, b in rows:
            a = tuple(Fraction(x) for x in a)
            b = Fraction(b)
            if b <= 0:
                raise ValueError("ball rows need a positive right-hand side")
            brows.append(BallRow(None, a, b))
            A.append(tuple(x / b for x in a))
        P = HPolytope(len(A[0]), tuple(A), tuple(Fraction(1) for _ in A))
        return cls(P, p, beta, tuple(brows))


def precision_bits(beta, m, p):
    return math.ceil(math.log2(beta * m**p)) + 4


def _beta_z(s, p, bits):
    # smallest N / 2^bits with (N / 2^bits)^p >= s^(p-1)
    return Fraction(iroot_ceil(s ** (p - 1) << (bits * p), p), 1 << bits)


def _primitive(q):
    g = math.gcd(*q)
    return tuple(x // g for x in q), g


def grid_ball(p, beta, d, m):
    """The ball for a fixed grid radius ``m``; parallel rows keep the tightest one."""
    if p < 2 or beta < 2 or d < 1 or m < 1:
        raise ValueError("need p >= 2, beta >= 2, d >= 1, m >= 1")
    bits = precision_bits(beta, m, p)
    cache = {}
    best = {}
    for z in product(range(-m, m + 1), repeat=d):
        if not any(z):
            continue
        s = sum(abs(zi) ** p for zi in z)
        if s not in cache:
            cache[s] = _beta_z(s, p, bits)
        q = tuple(sgn(zi) * abs(zi) ** (p - 1) for zi in z)
        key, g = _primitive(q)
        rhs = cache[s] / g
        if key not in best or rhs < best[key][0]:
            best[key] = (rhs, BallRow(z, q, cache[s]))
    rows, A, b = [], [], []
    for key in sorted(best):
        rhs, row = best[key]
        rows.append(row)
        A.append(tuple(Fraction(x) / row.beta_z for x in row.q))
        b.append(Fraction(1))
    return ApproxBall(HPolytope(d, tuple(A), tuple(b)), p, beta, tuple(rows), m)


def build_ball_approx(p: int, beta: int, d: int, m=None, max_facets=None) -> ApproxBall:
    """Grid ball with ``B_p^d ⊆ B ⊆ beta/(beta-1) B_p^d``.

    With ``m`` unset the grid radius runs through 1, 2, 4, ... until the outer
    containment check passes. Grids nest, so the facet count only grows; a
    ball that would exceed ``max_facets`` raises :class:`BallTooLarge`.
    """
    key = (int(p), int(beta), int(d), m, config.max_ball_facets(max_facets))
    if key in _too_large:
        raise BallTooLarge(_too_large[key])
    try:
        return _build_cached(*key)
    except BallTooLarge as exc:
        # lru_cache does not remember exceptions, and finding out is not cheap
        _too_large[key] = str(exc)
        raise


_too_large: dict = {}


@lru_cache(maxsize=64)
def _build_cached(p, beta, d, m, limit):
    radii = [m] if m is not None else (2**i for i in range(64))
    for r in radii:
        if (2 * r + 1) ** d - 1 > limit:
            # the dedup count is not known before building, but it is
            # bounded below by the primitive directions; build only if close
            if _primitive_count(d, r) > limit:
                raise BallTooLarge(
                    f"ball for p={p}, beta={beta}, d={d} needs grid radius >= {r}, "
                    f"over the {limit}-facet budget"
                )
        B = grid_ball(p, beta, d, r)
        if B.facet_count > limit:
            raise BallTooLarge(f"{B.facet_count} facets exceed the budget of {limit}")
        if m is not None or check_outer_containment(B).ok:
            return B
    raise AssertionError("unreachable")


def _primitive_count(d, m):
    # nonzero integer vectors in {-m..m}^d with gcd 1, by Moebius inversion
    mu = _mobius(m)
    return sum(mu[g] * ((2 * (m // g) + 1) ** d - 1) for g in range(1, m + 1))


def _mobius(n):
    mu = [1] * (n + 1)
    is_comp = [False] * (n + 1)
    primes = []
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            mu[i] = -1
        for pr in primes:
            if i * pr > n:
                break
            is_comp[i * pr] = True
            if i % pr == 0:
                mu[i * pr] = 0
                break
            mu[i * pr] = -mu[i]
    return mu


def row_inside_certificate(row: BallRow, p: int, max_bits: int = 4096) -> bool:
    """Exact test that ``B_p`` lies in ``{x : q^T x <= beta_z}``.

    Grid rows use the integer inequality ``s^(p-1) <= beta_z^p``. Hand-built
    rows need ``sum |q_i/b|^(p/(p-1)) <= 1``; the (p-1)-th roots are bracketed
    by rational bounds and refined until the comparison is decided.
    """
    if row.z is not None:
        s = sum(abs(zi) ** p for zi in row.z)
        return Fraction(s) ** (p - 1) <= row.beta_z**p
    t = [abs(x) / row.beta_z for x in row.q]
    r = p - 1
    bits = 32
    while bits <= max_bits:
        lo = hi = Fraction(0)
        scale = 1 << bits
        for ti in t:
            # ti^(1/r) in [a, a'] / 2^bits
            n = ti.numerator * scale**r
            up = iroot_ceil(-(-n // ti.denominator), r)
            down = iroot_ceil(n // ti.denominator + 1, r) - 1
            lo += Fraction(down, scale) ** p
            hi += Fraction(up, scale) ** p
        if hi <= 1:
            return True
        if lo > 1:
            return False
        bits *= 2
    return False


def verify_inner_containment(B: ApproxBall) -> bool:
    return all(row_inside_certificate(row, B.p) for row in B.rows)


@dataclass(frozen=True)
class OuterReport:
    ok: bool
    mode: str  # "exact" or "sampled"
    checked: int

    def __bool__(self):
        return self.ok


def check_outer_containment(
    B: ApproxBall, mode: str = "auto", rays: int = 512, lp_samples: int = 16, seed: int = 0
):
    """Every vertex of ``B`` inside ``beta/(beta-1) B_p``.

    ``exact`` enumerates all vertices (d <= 3). ``sampled`` first checks the
    boundary point ``u / ||u||_B`` along random rays (cheap, catches most
    failures), then maximizes a few dual directions ``q(z)`` over ``B`` and
    checks those vertices. A sampled pass is evidence, not proof.
    """
    if mode == "auto":
        mode = "exact" if B.dim <= OUTER_EXACT_MAX_DIM else "sampled"
    bound = B.outer_bound
    if mode == "exact":
        if B.dim > OUTER_EXACT_MAX_DIM:
            raise DimensionCapExceeded(f"exact outer check needs d <= {OUTER_EXACT_MAX_DIM}")
        verts = enumerate_vertices(B.polytope, method="cdd", check_bounded=False)
        return OuterReport(all(pnorm_pow(v, B.p) <= bound for v in verts), "exact", len(verts))
    if mode != "sampled":
        raise ValueError(f"unknown outer containment mode {mode!r}")
    rng = random.Random(seed)
    d, p = B.dim, B.p
    dirs = [tuple(rng.randint(-64, 64) for _ in range(d)) for _ in range(rays + lp_samples)]
    dirs = [z for z in dirs if any(z)]
    for u in dirs[:rays]:
        g = max(sum(a * ui for a, ui in zip(row, u)) for row in B.polytope.A)
        if pnorm_pow(u, p) > bound * g**p:
            return OuterReport(False, "sampled", len(dirs))
    for z in dirs[rays:]:
        c = [sgn(zi) * abs(zi) ** (p - 1) for zi in z]
        res = solve_lp_max(c, B.polytope)
        if not res.optimal or pnorm_pow(res.point, p) > bound:
            return OuterReport(False, "sampled", len(dirs))
    return OuterReport(True, "sampled", len(dirs))


def verify_outer_containment(B: ApproxBall, mode: str = "auto") -> bool:
    return check_outer_containment(B, mode).ok


@dataclass(frozen=True)
class ApproxResult:
    witness: tuple
    guarantee: Fraction  # ||x||_B^p, a certified lower bound on OPT and on ||witness||_p^p
    gauge: Fraction
    upper_bound: Fraction  # OPT <= upper_bound
    facets: int

    def __iter__(self):
        return iter((self.witness, self.guarantee))


def beta_approx_normmax(P: HPolytope, p: int, beta: int, max_facets=None) -> ApproxResult:
    """Maximize the gauge of a grid ball over ``P``.

    Since ``||x||_B <= ||x||_p <= beta/(beta-1) ||x||_B``, the witness ``x``
    satisfies ``||x||_p^p >= ((beta-1)/beta)^p OPT``.
    """
    if not P.is_symmetric():
        raise NotSymmetric("beta-approximation expects a 0-symmetric polytope")
    B = build_ball_approx(p, beta, P.dim, max_facets=max_facets)
    res = max_phi(P, B.polytope)
    guarantee = res.value**p
    return ApproxResult(res.witness, guarantee, res.value, B.outer_bound * guarantee, B.facet_count)
