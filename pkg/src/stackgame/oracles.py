"""Brute-force reference oracles for desk-scale instances.

These deliberately avoid the closed forms used elsewhere in the package:
payoffs are evaluated directly from the reward functionals and candidate
points are enumerated exhaustively.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .best_response import defense_family_at
from .errors import EmptyIntersectionError, EmptyIntervalError, GridCapExceededError, InfeasibleInstanceError
from .model import AttackVector, DefenseVector, GameInstance, attacker_payoff, defender_payoff

DEFAULT_GRID_CAP = 10**7


def grid_cap() -> int:
    raw = os.environ.get("STACKGAME_GRID_CAP")
    return int(raw) if raw else DEFAULT_GRID_CAP


def simplex_grid_size(dimension: int, resolution: int) -> int:
    return math.comb(resolution + dimension - 1, dimension - 1)


def enumerate_simplex_grid(dimension: int, resolution: int, cap: int | None = None) -> Iterator[tuple[Fraction, ...]]:
    """All points of the simplex with coordinates in multiples of 1/resolution.

    Lexicographic order on the integer compositions.
    """
    if dimension < 1 or resolution < 1:
        raise ValueError("dimension and resolution must be positive")
    cap = grid_cap() if cap is None else cap
    count = simplex_grid_size(dimension, resolution)
    if count > cap:
        raise GridCapExceededError(f"{count} grid points exceed the cap of {cap}")

    def compositions(remaining: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (remaining,)
            return
        for first in range(remaining + 1):
            for rest in compositions(remaining - first, parts - 1):
                yield (first,) + rest

    for comp in compositions(resolution, dimension):
        yield tuple(Fraction(c, resolution) for c in comp)


def brute_force_attacker(instance: GameInstance, defense: DefenseVector) -> tuple[Fraction, tuple[int, ...]]:
    """Best attacker payoff over the pure attacks, with every optimal asset number."""
    size = len(instance)
    values = [attacker_payoff(instance, defense, AttackVector.vertex(size, n)) for n in range(1, size + 1)]
    best = max(values)
    return best, tuple(n for n, v in enumerate(values, start=1) if v == best)


def brute_force_defender_on_family(instance: GameInstance, attack: AttackVector,
                                   resolution: int) -> tuple[Fraction, Fraction]:
    """Grid search over the anchor probability; ties go to the smallest d."""
    best = None
    for j in range(resolution + 1):
        d = Fraction(j, resolution)
        try:
            defense = defense_family_at(instance, d)
        except InfeasibleInstanceError:
            continue
        value = defender_payoff(instance, defense, attack)
        if best is None or value > best[1]:
            best = (d, value)
    if best is None:
        raise EmptyIntervalError("no grid point keeps the defense family inside the simplex")
    return best


@dataclass(frozen=True)
class ConstrainedOracleResult:
    min_value: Fraction
    max_value: Fraction
    min_witness: AttackVector
    max_witness: AttackVector
    vertices: tuple[AttackVector, ...]


def brute_force_constrained_attacker(instance: GameInstance) -> ConstrainedOracleResult:
    """Extrema of the bottom-of-family objective over simplex vertices with Delta_2 = 0.

    Delta_2 is linear in A, so each simplex edge crosses zero at most once;
    every vertex of the slice lies on such an edge or is a simplex corner.
    """
    size = len(instance)
    corners = [AttackVector.vertex(size, n) for n in range(1, size + 1)]
    anchor = instance.anchor
    # Delta_2 at each simplex corner, straight from its definition
    delta = [anchor.omega_attacker * a.omega_defender / a.omega_attacker for a in instance.assets[:-1]]
    delta.append(anchor.omega_defender)

    points = [corners[i] for i in range(size) if delta[i] == 0]
    for i in range(size):
        for j in range(i + 1, size):
            if delta[i] * delta[j] < 0:
                t = delta[j] / (delta[j] - delta[i])
                points.append(AttackVector.mix(t, corners[i], corners[j]))
    if not points:
        raise EmptyIntersectionError("Delta_2 keeps one strict sign over the whole attack simplex")

    bottom = defense_family_at(instance, 0)
    anchor_term = defender_payoff(instance, bottom, corners[-1])

    def objective(a: AttackVector) -> Fraction:
        # defender payoff at the bottom of the family with the anchor's term removed
        return defender_payoff(instance, bottom, a) - anchor_term * a[-1]

    values = [objective(p) for p in points]
    lo = min(range(len(values)), key=lambda k: (values[k], k))
    hi = min(range(len(values)), key=lambda k: (-values[k], k))
    return ConstrainedOracleResult(values[lo], values[hi], points[lo], points[hi], tuple(points))
