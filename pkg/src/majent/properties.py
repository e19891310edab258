"""Inequality checks between entropies of pairs and their lattice bounds.

Every check evaluates one inequality, oriented so that a positive margin
means it holds with room to spare.  A violation is only reported when the
margin drops below ``-CHECK_TOL``; margins inside the window count as a
tight hold, so rounding noise cannot masquerade as a counterexample.  The
checks never refuse a parameter region: outside the guaranteed regions they
simply report whatever the numbers say.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import lattice
from .entropy import EntropyParams, sharma_mittal
from .simplex import ProbabilityDistribution

#: Margin below which a check counts as violated.
CHECK_TOL = 1e-9


class PropertyKind(Enum):
    SUBADDITIVE = "subadditive"
    SUPERADDITIVE = "superadditive"
    GENERALIZED_SUB_SUPER = "generalized"
    SUPERMODULAR = "supermodular"
    SUBMODULAR = "submodular"


@dataclass(frozen=True)
class PropertyCheckRecord:
    """Outcome of a single inequality check.

    ``margin = rhs - lhs`` oriented so that ``margin >= 0`` is the asserted
    direction; ``holds`` allows the ``tolerance`` window.  ``meet`` is always
    present, ``join`` only for the modular checks.
    """

    kind: PropertyKind
    p: ProbabilityDistribution
    q: ProbabilityDistribution
    params: EntropyParams
    lhs: float
    rhs: float
    margin: float
    holds: bool
    tolerance: float
    meet: ProbabilityDistribution
    join: ProbabilityDistribution | None = None

    @property
    def verdict_label(self) -> str:
        if self.margin < -self.tolerance:
            return "violated"
        if self.margin < self.tolerance:
            return "holds (tight)"
        return "holds"

    def to_json_dict(self) -> dict:
        out = {
            "kind": self.kind.value,
            "params": self.params.to_json_dict(),
            "p": self.p.weights_json(),
            "q": self.q.weights_json(),
            "meet": self.meet.weights_json(),
            "join": self.join.weights_json() if self.join is not None else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "holds": self.holds,
            "verdict": self.verdict_label,
            "tolerance": self.tolerance,
        }
        return out


def _record(kind, p, q, params, lhs, rhs, margin, tolerance, meet_d, join_d=None):
    return PropertyCheckRecord(
        kind=kind,
        p=p,
        q=q,
        params=params,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        holds=margin >= -tolerance,
        tolerance=tolerance,
        meet=meet_d,
        join=join_d,
    )


def check_subadditivity(
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    params: EntropyParams,
    *,
    tolerance: float = CHECK_TOL,
) -> PropertyCheckRecord:
    """S(p meet q) <= S(p) + S(q)."""
    m = lattice.meet(p, q)
    lhs = sharma_mittal(m, params)
    rhs = sharma_mittal(p, params) + sharma_mittal(q, params)
    return _record(
        PropertyKind.SUBADDITIVE, p, q, params, lhs, rhs, rhs - lhs, tolerance, m
    )


def check_superadditivity(
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    params: EntropyParams,
    *,
    tolerance: float = CHECK_TOL,
) -> PropertyCheckRecord:
    """S(p meet q) >= S(p) + S(q) (the negative-order regime)."""
    m = lattice.meet(p, q)
    lhs = sharma_mittal(m, params)
    rhs = sharma_mittal(p, params) + sharma_mittal(q, params)
    return _record(
        PropertyKind.SUPERADDITIVE, p, q, params, lhs, rhs, lhs - rhs, tolerance, m
    )


def check_generalized(
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    params: EntropyParams,
    *,
    tolerance: float = CHECK_TOL,
) -> PropertyCheckRecord:
    """S(p meet q) vs S(p) + S(q) + (1-beta) S(p) S(q).

    The comparison direction follows the sign of alpha: at or above zero the
    meet entropy must not exceed the pseudo-additive combination, below zero
    it must not fall short of it.
    """
    m = lattice.meet(p, q)
    lhs = sharma_mittal(m, params)
    sp = sharma_mittal(p, params)
    sq = sharma_mittal(q, params)
    rhs = sp + sq + (1.0 - params.beta) * sp * sq
    margin = rhs - lhs if params.alpha >= 0.0 else lhs - rhs
    return _record(
        PropertyKind.GENERALIZED_SUB_SUPER, p, q, params, lhs, rhs, margin, tolerance, m
    )


def _modular_sides(p, q, params):
    m = lattice.meet(p, q)
    j = lattice.join(p, q)
    lhs = sharma_mittal(p, params) + sharma_mittal(q, params)
    rhs = sharma_mittal(m, params) + sharma_mittal(j, params)
    return m, j, lhs, rhs


def check_supermodularity(
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    params: EntropyParams,
    *,
    tolerance: float = CHECK_TOL,
) -> PropertyCheckRecord:
    """S(p) + S(q) <= S(p meet q) + S(p join q).

    The dual submodularity margin is the negation of this record's margin;
    :func:`check_submodularity` reports it directly.
    """
    m, j, lhs, rhs = _modular_sides(p, q, params)
    return _record(
        PropertyKind.SUPERMODULAR, p, q, params, lhs, rhs, rhs - lhs, tolerance, m, j
    )


def check_submodularity(
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    params: EntropyParams,
    *,
    tolerance: float = CHECK_TOL,
) -> PropertyCheckRecord:
    """S(p) + S(q) >= S(p meet q) + S(p join q)."""
    m, j, lhs, rhs = _modular_sides(p, q, params)
    return _record(
        PropertyKind.SUBMODULAR, p, q, params, lhs, rhs, lhs - rhs, tolerance, m, j
    )


_CHECKS = {
    PropertyKind.SUBADDITIVE: check_subadditivity,
    PropertyKind.SUPERADDITIVE: check_superadditivity,
    PropertyKind.GENERALIZED_SUB_SUPER: check_generalized,
    PropertyKind.SUPERMODULAR: check_supermodularity,
    PropertyKind.SUBMODULAR: check_submodularity,
}


def run_check(
    kind: PropertyKind,
    p: ProbabilityDistribution,
    q: ProbabilityDistribution,
    params: EntropyParams,
    *,
    tolerance: float = CHECK_TOL,
) -> PropertyCheckRecord:
    """Dispatch to the check for ``kind``."""
    return _CHECKS[kind](p, q, params, tolerance=tolerance)
