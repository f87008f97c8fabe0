"""Deciding Clique through the beta-approximation alone.

If ``(beta/(beta-1))^p * no < yes`` then an approximate maximizer separates the
two cases: on a NO instance every point of the gadget has value <= no, and on
a YES instance the witness has value >= ((beta-1)/beta)^p * yes > no.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ballapprox import beta_approx_normmax
from .errors import GapViolation
from .gadget import GadgetInstance, Graph, build_gadget
from .rational import pnorm_pow


@dataclass(frozen=True)
class AccuracySchedule:
    beta: int
    inflated_no: Fraction  # (beta/(beta-1))^p * no_threshold
    yes_threshold: Fraction

    @property
    def certified(self) -> bool:
        return self.inflated_no < self.yes_threshold


def certificate_holds(beta: int, p: int, no, yes) -> bool:
    return Fraction(beta, beta - 1) ** p * no < yes


def minimal_beta(p: int, no, yes) -> int:
    """Smallest integer ``beta >= 2`` with ``(beta/(beta-1))^p no < yes``.

    The left side decreases in beta towards ``no``, so the predicate is
    monotone: double until it holds, then binary search the last interval.
    """
    no, yes = Fraction(no), Fraction(yes)
    if not no < yes:
        raise GapViolation(f"no threshold {no} is not below yes threshold {yes}")
    if yes <= 0 or no < 0:
        # a nonpositive no threshold is certified by any beta
        return 2
    hi = 2
    while not certificate_holds(hi, p, no, yes):
        hi *= 2
    lo = hi // 2  # fails, unless hi == 2
    if hi == 2:
        return 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if certificate_holds(mid, p, no, yes):
            hi = mid
        else:
            lo = mid
    return hi


def choose_beta(inst: GadgetInstance) -> AccuracySchedule:
    beta = minimal_beta(inst.p, inst.no_threshold, inst.yes_threshold)
    inflated = Fraction(beta, beta - 1) ** inst.p * inst.no_threshold
    return AccuracySchedule(beta, inflated, inst.yes_threshold)


@dataclass(frozen=True)
class ApproxDecision:
    decision: bool
    schedule: AccuracySchedule
    value: Fraction  # ||x||_p^p of the approximate witness
    witness: tuple


def decide_clique_via_approx(G: Graph, k: int, p: int, max_facets=None, inst=None) -> ApproxDecision:
    """Build the gadget, pick beta, approximate, compare with the NO threshold."""
    if inst is None:
        inst = build_gadget(G, k, p)
    schedule = choose_beta(inst)
    res = beta_approx_normmax(inst.polytope, p, schedule.beta, max_facets=max_facets)
    value = pnorm_pow(res.witness, p)
    return ApproxDecision(value > inst.no_threshold, schedule, value, res.witness)
