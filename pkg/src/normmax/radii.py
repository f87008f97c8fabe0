"""Outer and inner radii of 0-symmetric polytopes, kept in p-th powers.

For a 0-symmetric H-polytope the circumradius and half-diameter w.r.t. B_p
coincide with ``max ||x||_p``. For a 0-symmetric V-polytope the inradius and
half-width w.r.t. the dual ball B_q are the reciprocals of the corresponding
outer radii of the polar, so everything reduces to norm maximization.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InfeasiblePolytope, NotSymmetric, OriginNotInterior, UnboundedPolytope
from .lp import INFEASIBLE, UNBOUNDED, solve_lp_max
from .polytope import HPolytope, VPolytope
from .solvers import exact_normmax
from .vertices import polar_of_vpoly

OUTER = ("circumradius", "half_diameter", "diameter")
INNER = ("inradius", "width")


def radius_h(P: HPolytope, p: int, which: str = "circumradius", cap=None) -> Fraction:
    """``R(P, B_p)^p``; circumradius and half-diameter agree on symmetric ``P``."""
    if which not in OUTER:
        raise ValueError(f"radius_h answers {OUTER}, not {which!r}")
    if not P.is_symmetric():
        raise NotSymmetric("radius_h needs a 0-symmetric H-polytope")
    return exact_normmax(P, p, cap=cap).value


@dataclass(frozen=True)
class InnerRadius:
    """``v = R(P°, B_p)^p``; the inner radius of ``P`` satisfies ``r^p = 1/v``."""

    v: Fraction
    p: int
    which: str

    @property
    def power(self) -> Fraction:
        return 1 / self.v

    def decide(self, gamma) -> bool:
        """``r(P, B_q)^p <= gamma``, answered without roots."""
        return self.v * Fraction(gamma) >= 1


def radius_v(P: VPolytope, p: int, which: str = "inradius", cap=None) -> InnerRadius:
    if which not in INNER:
        raise ValueError(f"radius_v answers {INNER}, not {which!r}")
    if not P.is_symmetric():
        raise NotSymmetric("radius_v needs a 0-symmetric V-polytope")
    Q = polar_of_vpoly(P)
    return InnerRadius(exact_normmax(Q, p, cap=cap).value, p, which)


def inscribed_cube_lp(P: VPolytope) -> Fraction:
    """Largest ``t`` with ``t * [-1, 1]^d`` inside ``conv(P)``, by one LP on the V-form.

    Variables are ``t`` and, for every sign vector ``s``, convex weights that
    write ``t * s`` as a combination of the points. This is the inradius for
    the max-norm, i.e. the ``p = 1`` side of the polarity identity.
    """
    pts = list(dict.fromkeys(P.points))
    d, n = P.dim, len(pts)
    signs = list(product((1, -1), repeat=d))
    nvar = 1 + len(signs) * n
    rows = []

    def eq(coefs, rhs):
        rows.append((coefs, rhs))
        rows.append(([-c for c in coefs], -rhs))

    for s_idx, s in enumerate(signs):
        base = 1 + s_idx * n
        for i in range(d):
            coefs = [Fraction(0)] * nvar
            coefs[0] = Fraction(-s[i])
            for j, v in enumerate(pts):
                coefs[base + j] = v[i]
            eq(coefs, Fraction(0))
        coefs = [Fraction(0)] * nvar
        for j in range(n):
            coefs[base + j] = Fraction(1)
        eq(coefs, Fraction(1))
        for j in range(n):
            coefs = [Fraction(0)] * nvar
            coefs[base + j] = Fraction(-1)
            rows.append((coefs, Fraction(0)))
    c = [Fraction(0)] * nvar
    c[0] = Fraction(1)
    res = solve_lp_max(c, HPolytope.from_rows(rows, dim=nvar))
    if res.status == UNBOUNDED:
        raise UnboundedPolytope("inscribed cube LP is unbounded")
    if res.status == INFEASIBLE:
        raise InfeasiblePolytope("inscribed cube LP is infeasible")
    if res.value <= 0:
        raise OriginNotInterior("no cube of positive size fits")
    return res.value
