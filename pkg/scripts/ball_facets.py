"""Facet counts and grid radii of the approximate p-balls.

    python scripts/ball_facets.py --ps 2 3 --betas 2 4 8 16 --dims 2 3
"""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from normmax.ballapprox import build_ball_approx, check_outer_containment, verify_inner_containment
from normmax.errors import BallTooLarge


@dataclass
class BallGrid:
    ps: tuple = (2, 3)
    betas: tuple = (2, 4, 8, 16)
    dims: tuple = (2, 3)
    max_facets: int | None = None


def run(grid):
    print(f"{'d':>2} {'p':>2} {'beta':>5} {'m':>4} {'facets':>7} {'f/beta^d':>9} inner outer       sec")
    for d in grid.dims:
        for p in grid.ps:
            for beta in grid.betas:
                t = time.perf_counter()
                try:
                    B = build_ball_approx(p, beta, d, max_facets=grid.max_facets)
                except BallTooLarge as exc:
                    print(f"{d:>2} {p:>2} {beta:>5}  too large: {exc}")
                    continue
                inner = verify_inner_containment(B)
                outer = check_outer_containment(B)
                secs = time.perf_counter() - t
                print(f"{d:>2} {p:>2} {beta:>5} {B.m:>4} {B.facet_count:>7} {B.facet_count / beta**d:9.3f} "
                      f"{inner!s:>5} {outer.ok!s:>5}/{outer.mode:<7} {secs:6.2f}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--ps", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--betas", type=int, nargs="+", default=[2, 4, 8, 16])
    ap.add_argument("--dims", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-facets", type=int)
    a = ap.parse_args()
    run(BallGrid(tuple(a.ps), tuple(a.betas), tuple(a.dims), a.max_facets))


if __name__ == "__main__":
    main()
