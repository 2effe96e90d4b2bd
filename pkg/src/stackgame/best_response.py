"""Attacker-indifference defense family and the attacker's best response."""

from __future__ import annotations

from fractions import Fraction

from .errors import EmptyIntervalError, InfeasibleInstanceError, InvalidVectorError
from .model import DefenseVector, GameInstance, as_rational, attack_utility


def family_coefficients(instance: GameInstance) -> list[tuple[Fraction, Fraction]]:
    """``(offset, slope)`` with D_n(d) = offset + slope * d, for every asset.

    The anchor itself contributes (0, 1).
    """
    anchor = instance.anchor
    k = anchor.omega_attacker
    coeffs = []
    for asset in instance.assets[:-1]:
        omega = asset.omega_attacker
        coeffs.append(((asset.reward_attacker - anchor.reward_attacker) / omega, k / omega))
    coeffs.append((Fraction(0), Fraction(1)))
    return coeffs


def defense_family_at(instance: GameInstance, d) -> DefenseVector:
    d = as_rational(d)
    if not 0 <= d <= 1:
        raise ValueError(f"anchor probability {d} outside [0, 1]")
    entries = tuple(p + q * d for p, q in family_coefficients(instance))
    try:
        return DefenseVector(entries)
    except InvalidVectorError as exc:
        raise InfeasibleInstanceError(f"defense family at d={d} is not a probability vector: {exc}") from exc


def feasible_anchor_interval(instance: GameInstance) -> tuple[Fraction, Fraction]:
    """Largest [lo, hi] within [0, 1] on which every D_n(d) lies in [0, 1]."""
    lo, hi = Fraction(0), Fraction(1)
    for p, q in family_coefficients(instance)[:-1]:
        if q == 0:
            if not 0 <= p <= 1:
                raise EmptyIntervalError(f"constant family entry {p} outside [0, 1]")
            continue
        # 0 <= p + q d <= 1
        a, b = (-p) / q, (1 - p) / q
        if q < 0:
            a, b = b, a
        lo, hi = max(lo, a), min(hi, b)
    if lo > hi:
        raise EmptyIntervalError("no anchor probability keeps every family entry inside [0, 1]")
    return lo, hi


def attacker_best_response(instance: GameInstance, defense: DefenseVector) -> tuple[tuple[int, ...], Fraction]:
    """All maximizing asset numbers (ascending) and the attacker's best value.

    Any attack vector supported on the returned set is a best response.
    """
    utilities = [attack_utility(instance, defense, n) for n in range(1, len(instance) + 1)]
    best = max(utilities)
    return tuple(n for n, u in enumerate(utilities, start=1) if u == best), best


def indifference_gap(instance: GameInstance, defense: DefenseVector) -> Fraction:
    utilities = [attack_utility(instance, defense, n) for n in range(1, len(instance) + 1)]
    return max(utilities) - min(utilities)
