"""Defender payoff decomposition, regime classification and equilibrium reports.

Along the indifference family the defender's payoff is affine in the anchor
probability d:

    payoff(d) = (delta1 - delta3) + delta2 * d

so the sign of delta2 decides whether the defender pushes d to the top or the
bottom of its feasible interval.
"""

from __future__ import annotations

import enum
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .best_response import defense_family_at, feasible_anchor_interval
from .errors import InvalidVectorError, InvariantViolation
from .model import (
    AttackVector,
    DefenseVector,
    GameInstance,
    as_rational,
    attacker_payoff,
    defender_payoff,
)


@dataclass(frozen=True)
class DeltaTriple:
    delta1: Fraction
    delta2: Fraction
    delta3: Fraction


class Regime(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    ZERO = "Zero"


@dataclass(frozen=True)
class FamilyIndeterminate:
    """Any anchor probability in [lo, hi] gives the defender the same payoff."""

    lo: Fraction
    hi: Fraction


OptimalDefense = Union[DefenseVector, FamilyIndeterminate]


@dataclass(frozen=True)
class SolveReport:
    deltas: DeltaTriple
    regime: Regime
    optimal_defense: OptimalDefense
    # concrete choice; equals lo in the Zero regime
    anchor_probability: Fraction
    defense: DefenseVector
    defender_payoff: Fraction
    attacker_payoff: Fraction


def compute_deltas(instance: GameInstance, attack: AttackVector) -> DeltaTriple:
    if len(attack) != len(instance):
        raise InvalidVectorError(f"attack length {len(attack)} does not match {len(instance)} assets")
    anchor = instance.anchor
    k = anchor.omega_attacker
    d1 = d2 = d3 = Fraction(0)
    for asset, a in zip(instance.assets[:-1], attack):
        d1 += (asset.reward_attacker - anchor.reward_attacker) / asset.omega_attacker * asset.omega_defender * a
        d2 += k * asset.omega_defender / asset.omega_attacker * a
    # the anchor's own Delta_2 term k * (omega_B / k) collapses to omega_B
    d2 += anchor.omega_defender * attack[-1]
    for asset, a in zip(instance.assets, attack):
        d3 += asset.cost_defender * a
    return DeltaTriple(d1, d2, d3)


def classify_regime(deltas: DeltaTriple) -> Regime:
    if deltas.delta2 > 0:
        return Regime.POSITIVE
    if deltas.delta2 < 0:
        return Regime.NEGATIVE
    return Regime.ZERO


def optimal_defense(instance: GameInstance, regime: Regime) -> OptimalDefense:
    lo, hi = feasible_anchor_interval(instance)
    if regime is Regime.POSITIVE:
        return defense_family_at(instance, hi)
    if regime is Regime.NEGATIVE:
        return defense_family_at(instance, lo)
    return FamilyIndeterminate(lo, hi)


def _column(instance: GameInstance, defense: DefenseVector) -> tuple[Fraction, ...]:
    size = len(instance)
    return tuple(defender_payoff(instance, defense, AttackVector.vertex(size, n)) for n in range(1, size + 1))


def defender_payoff_coefficients(instance: GameInstance) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Per-asset payoff multipliers at the top (c1) and bottom (c2) of the family."""
    lo, hi = feasible_anchor_interval(instance)
    return (
        _column(instance, defense_family_at(instance, hi)),
        _column(instance, defense_family_at(instance, lo)),
    )


def attacker_equilibrium_payoff(instance: GameInstance, d) -> Fraction:
    """Attacker payoff on the family at anchor probability d, for any attack."""
    d = as_rational(d)
    if not 0 <= d <= 1:
        raise ValueError(f"anchor probability {d} outside [0, 1]")
    anchor = instance.anchor
    return anchor.reward_attacker - anchor.omega_attacker * d


def solve(instance: GameInstance, attack: AttackVector) -> SolveReport:
    deltas = compute_deltas(instance, attack)
    regime = classify_regime(deltas)
    chosen = optimal_defense(instance, regime)
    if isinstance(chosen, FamilyIndeterminate):
        d_star = chosen.lo
        defense = defense_family_at(instance, d_star)
    else:
        defense = chosen
        d_star = defense[-1]
    pi_b = (deltas.delta1 - deltas.delta3) + deltas.delta2 * d_star
    direct = defender_payoff(instance, defense, attack)
    if pi_b != direct:
        raise InvariantViolation(f"decomposed defender payoff {pi_b} != direct evaluation {direct}")
    pi_r = attacker_payoff(instance, defense, attack)
    return SolveReport(deltas, regime, chosen, d_star, defense, pi_b, pi_r)


def _solve_args(args: tuple[GameInstance, AttackVector]) -> SolveReport:
    return solve(*args)


def solve_many(instance: GameInstance, attacks: Sequence[AttackVector], workers: int = 1) -> list[SolveReport]:
    """Solve each attack vector; results keep input order."""
    jobs = [(instance, a) for a in attacks]
    if workers <= 1 or len(jobs) < 2:
        return [_solve_args(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_solve_args, jobs))
