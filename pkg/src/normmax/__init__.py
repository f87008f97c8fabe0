"""Exact norm maximization over rational polytopes, and the Clique reduction around it."""
from .approx_decider import choose_beta, decide_clique_via_approx
from .ballapprox import (
    beta_approx_normmax,
    build_ball_approx,
    verify_inner_containment,
    verify_outer_containment,
)
from .gadget import (
    Graph,
    build_gadget,
    clique_oracle,
    decide_clique_via_normmax,
    parse_dimacs,
    verify_gadget_bounds,
)
from .lp import solve_lp_max
from .polytope import HPolytope, VPolytope, parse_polytope, serialize_polytope
from .radii import radius_h, radius_v
from .solvers import decide_normmax, exact_normmax, max_phi, normmax1, parmax
from .vertices import enumerate_vertices, polar_of_hpoly, polar_of_vpoly

__all__ = [
    "Graph",
    "HPolytope",
    "VPolytope",
    "beta_approx_normmax",
    "build_ball_approx",
    "build_gadget",
    "choose_beta",
    "clique_oracle",
    "decide_clique_via_approx",
    "decide_clique_via_normmax",
    "decide_normmax",
    "enumerate_vertices",
    "exact_normmax",
    "max_phi",
    "normmax1",
    "parmax",
    "parse_dimacs",
    "parse_polytope",
    "polar_of_hpoly",
    "polar_of_vpoly",
    "radius_h",
    "radius_v",
    "serialize_polytope",
    "solve_lp_max",
    "verify_gadget_bounds",
    "verify_inner_containment",
    "verify_outer_containment",
]
