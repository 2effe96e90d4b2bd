"""Feasibility conditions on the anchor asset's attacker reward and cost.

An instance is feasible when the attacker-indifference defense family stays
inside the probability simplex for every anchor probability in [0, 1].
That takes, for every non-anchor asset n, a pair of interval conditions
(one on the anchor's cost, one on the anchor's reward) and two sum
conditions over the non-anchor assets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import InvalidInstanceError, SingularSystemError
from .model import AssetParams, GameInstance


@dataclass(frozen=True)
class AssetCheck:
    index: int
    omega_sign: int
    passed: bool
    # distance by which each interval condition is missed; zero when it holds
    cost_violation: Fraction
    reward_violation: Fraction


@dataclass(frozen=True)
class FeasibilityReport:
    per_asset_checks: tuple[AssetCheck, ...]
    sum_condition_one: Fraction
    sum_condition_two: Fraction
    feasible: bool

    @property
    def intervals_ok(self) -> bool:
        return all(c.passed for c in self.per_asset_checks)

    @property
    def sum_one_ok(self) -> bool:
        return self.sum_condition_one == 1

    @property
    def sum_two_ok(self) -> bool:
        return self.sum_condition_two == 0

    def failures(self) -> list[str]:
        """Human-readable list of failed condition groups."""
        out = []
        for c in self.per_asset_checks:
            if c.cost_violation:
                out.append(f"asset {c.index}: anchor cost interval missed by {c.cost_violation}")
            if c.reward_violation:
                out.append(f"asset {c.index}: anchor reward interval missed by {c.reward_violation}")
        if not self.sum_one_ok:
            out.append(f"sum condition one = {self.sum_condition_one}, expected 1 "
                       f"(off by {self.sum_condition_one - 1})")
        if not self.sum_two_ok:
            out.append(f"sum condition two = {self.sum_condition_two}, expected 0 "
                       f"(off by {self.sum_condition_two})")
        return out


def _outside(value: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    if value < lo:
        return lo - value
    if value > hi:
        return value - hi
    return Fraction(0)


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


def check_feasibility(instance: GameInstance) -> FeasibilityReport:
    anchor = instance.anchor
    checks = []
    sum_one = Fraction(0)
    sum_two = Fraction(0)
    for n, asset in enumerate(instance.assets[:-1], start=1):
        omega = asset.omega_attacker
        if omega >= 0:
            cost_miss = _outside(anchor.cost_attacker, -asset.reward_attacker, asset.cost_attacker)
            reward_miss = _outside(anchor.reward_attacker, -asset.cost_attacker, asset.reward_attacker)
        else:
            cost_miss = _outside(anchor.cost_attacker, asset.cost_attacker, -asset.reward_attacker)
            reward_miss = _outside(anchor.reward_attacker, asset.reward_attacker, -asset.cost_attacker)
        checks.append(AssetCheck(n, _sign(omega), not cost_miss and not reward_miss, cost_miss, reward_miss))
        sum_one += (asset.reward_attacker - anchor.reward_attacker) / omega
        sum_two += (asset.reward_attacker + anchor.cost_attacker) / omega
    feasible = all(c.passed for c in checks) and sum_one == 1 and sum_two == 0
    return FeasibilityReport(tuple(checks), sum_one, sum_two, feasible)


def solve_anchor(prefix: Sequence[AssetParams]) -> tuple[Fraction, Fraction]:
    """Anchor (reward, cost) for the attacker that meets both sum conditions.

    Interval conditions are not enforced; run :func:`check_feasibility` on
    the completed instance to see whether they hold.
    """
    if not prefix:
        raise InvalidInstanceError("need at least one non-anchor asset")
    inv_sum = Fraction(0)
    weighted = Fraction(0)
    for asset in prefix:
        omega = asset.omega_attacker
        if omega == 0:
            raise InvalidInstanceError(f"asset {asset.name!r}: attacker reward + cost is zero")
        inv_sum += 1 / omega
        weighted += asset.reward_attacker / omega
    if inv_sum == 0:
        raise SingularSystemError("sum of 1/omega over the non-anchor assets is zero")
    return (weighted - 1) / inv_sum, -weighted / inv_sum


def complete_instance(prefix: Sequence[AssetParams], reward_defender, cost_defender,
                      name: str = "anchor") -> GameInstance:
    """Append an anchor asset built by :func:`solve_anchor`."""
    reward, cost = solve_anchor(prefix)
    return GameInstance(tuple(prefix) + (AssetParams(name, reward_defender, cost_defender, reward, cost),))


def anchor_omega_identity(instance: GameInstance) -> Fraction:
    """Anchor omega times the sum of reciprocal omegas; -1 when feasible."""
    return instance.anchor.omega_attacker * sum(
        (1 / a.omega_attacker for a in instance.assets[:-1]), Fraction(0)
    )
