"""Exact rational simplex for ``max c^T x  s.t.  A x <= b`` with ``x`` free.

The solver keeps a dictionary ``basic = const + sum coef * nonbasic``. Slack
variables ``s_i = b_i - a_i^T x`` start basic; the free ``x_j`` are pivoted in
first and never leave again, so the tableau has only ``d + 1`` columns.
An artificial ``t`` (added to every slack row) repairs an infeasible start.
Pivot selection follows Bland's rule everywhere; with exact arithmetic that
guarantees termination.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polytope import HPolytope
from .rational import Vector, dot

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    point: Vector | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL


class _Dictionary:
    # Variable ids: x_j -> j, s_i -> d + i, t -> d + m.
    def __init__(self, P: HPolytope, with_artificial: bool):
        d, m = P.dim, len(P.A)
        self.d, self.m = d, m
        self.t = d + m
        self.nonbasic = list(range(d)) + ([self.t] if with_artificial else [])
        self.basic = [d + i for i in range(m)]
        self.rows = []
        for a, beta in zip(P.A, P.b):
            row = [Fraction(beta)] + [-x for x in a]
            if with_artificial:
                row.append(Fraction(1))
            self.rows.append(row)

    def is_free(self, var):
        return var < self.d

    def pivot(self, r, j):
        """Basic variable of row ``r`` leaves; nonbasic column ``j`` enters."""
        row = self.rows[r]
        piv = row[j + 1]
        leaving = self.basic[r]
        # entering = (leaving - const - sum_{k != j} row_k N_k) / piv
        new = [-c / piv for c in row]
        new[j + 1] = 1 / piv
        self.rows[r] = new
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[j + 1]
            if f == 0:
                continue
            for k, v in enumerate(new):
                if k == j + 1:
                    other[k] = f * v
                elif v:
                    other[k] += f * v
        self.basic[r] = self.nonbasic[j]
        self.nonbasic[j] = leaving

    def ratio_row(self, j, increase=True):
        """Leaving row for column ``j`` (lowest variable id breaks ties)."""
        best, best_ratio = None, None
        for r, row in enumerate(self.rows):
            if self.is_free(self.basic[r]):
                continue
            coef = row[j + 1]
            if (coef < 0) if increase else (coef > 0):
                ratio = row[0] / abs(coef)
                if (
                    best is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and self.basic[r] < self.basic[best])
                ):
                    best, best_ratio = r, ratio
        return best

    def drop_column(self, j):
        del self.nonbasic[j]
        for row in self.rows:
            del row[j + 1]


def _bland(D: _Dictionary, objective, stuck):
    """Maximize ``objective`` (list over [const] + nonbasic). Returns 'optimal' or 'unbounded'."""
    while True:
        entering = None
        for j, var in enumerate(D.nonbasic):
            if var in stuck or objective[j + 1] <= 0:
                continue
            if entering is None or var < D.nonbasic[entering]:
                entering = j
        if entering is None:
            return OPTIMAL
        r = D.ratio_row(entering)
        if r is None:
            return UNBOUNDED
        D.pivot(r, entering)
        # objective picks up the entering variable's new expression
        f = objective[entering + 1]
        new = D.rows[r]
        for k, v in enumerate(new):
            if k == entering + 1:
                objective[k] = f * v
            else:
                objective[k] += f * v


def solve_lp_max(c: Sequence, P: HPolytope) -> LPResult:
    """Maximize ``c^T x`` over ``P`` exactly.

    Infeasibility and unboundedness come back in-band through ``status``.
    The optimal point is a basic solution (a vertex when ``P`` is pointed).
    """
    c = tuple(Fraction(ci) for ci in c)
    if len(c) != P.dim:
        raise ValueError(f"objective has length {len(c)}, polytope dimension is {P.dim}")
    need_artificial = any(beta < 0 for beta in P.b)
    D = _Dictionary(P, need_artificial)

    if need_artificial:
        worst = min(range(D.m), key=lambda i: (P.b[i], i))
        D.pivot(worst, D.nonbasic.index(D.t))

    stuck = set()
    for xj in range(D.d):
        j = D.nonbasic.index(xj)
        r = D.ratio_row(j, increase=True)
        if r is None:
            r = D.ratio_row(j, increase=False)
        if r is None:
            stuck.add(xj)
        else:
            D.pivot(r, j)

    if need_artificial:
        if D.t in D.basic:
            r = D.basic.index(D.t)
            objective = [-v for v in D.rows[r]]
        else:
            objective = [Fraction(0)] * (len(D.nonbasic) + 1)
            objective[D.nonbasic.index(D.t) + 1] = Fraction(-1)
        _bland(D, objective, stuck)
        if objective[0] < 0:
            return LPResult(INFEASIBLE)
        if D.t in D.basic:
            r = D.basic.index(D.t)
            j = next(
                (k for k, var in enumerate(D.nonbasic) if var not in stuck and D.rows[r][k + 1] != 0),
                None,
            )
            if j is None:
                del D.rows[r]
                del D.basic[r]
            else:
                D.pivot(r, j)
        D.drop_column(D.nonbasic.index(D.t))

    objective = [Fraction(0)] * (len(D.nonbasic) + 1)
    for r, var in enumerate(D.basic):
        if var < D.d and c[var]:
            for k, v in enumerate(D.rows[r]):
                objective[k] += c[var] * v
    for j, var in enumerate(D.nonbasic):
        if var < D.d:
            objective[j + 1] += c[var]
            if var in stuck and objective[j + 1] != 0:
                return LPResult(UNBOUNDED)

    if _bland(D, objective, stuck) == UNBOUNDED:
        return LPResult(UNBOUNDED)

    x = [Fraction(0)] * D.d
    for r, var in enumerate(D.basic):
        if var < D.d:
            x[var] = D.rows[r][0]
    x = tuple(x)
    value = dot(c, x)
    assert value == objective[0], "objective bookkeeping drifted"
    assert P.contains(x), "simplex returned an infeasible point"
    return LPResult(OPTIMAL, value, x)


def is_bounded(P: HPolytope) -> bool:
    """True iff every ``+-e_i`` LP over a nonempty ``P`` is bounded (2d solves)."""
    from .rational import unit

    for i in range(P.dim):
        for s in (1, -1):
            res = solve_lp_max(unit(P.dim, i, s), P)
            if res.status == UNBOUNDED:
                return False
            if res.status == INFEASIBLE:
                return True
    return True
