"""Attacker-side analysis on the Delta_2 = 0 hyperplane.

Eliminating the anchor's attack probability turns Delta_2 = 0 into a single
linear constraint ``alpha . A[:N-1] = rhs`` over the reduced simplex
``{A >= 0, sum(A[:N-1]) <= 1}``. The attacker's objective there is the
defender's bottom-of-family payoff multipliers restricted to the non-anchor
assets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegenerateProblemError, EmptyIntersectionError, InfeasibleInstanceError
from .model import AttackVector, GameInstance, as_rational
from .solver import defender_payoff_coefficients


@dataclass(frozen=True)
class HyperplaneProblem:
    alpha: tuple[Fraction, ...]
    rhs: Fraction
    objective: tuple[Fraction, ...]

    @property
    def size(self) -> int:
        """Number of assets, anchor included."""
        return len(self.alpha) + 1


@dataclass(frozen=True)
class RatioTable:
    # None where alpha_i == 0
    ratios: tuple[Optional[Fraction], ...]
    # 1-based asset numbers i with rhs / alpha_i in [0, 1]
    feasible_indices: tuple[int, ...]


@dataclass(frozen=True)
class ConstrainedExtrema:
    min_value: Fraction
    min_attack: AttackVector
    max_value: Fraction
    max_attack: AttackVector


def build_hyperplane_problem(instance: GameInstance) -> HyperplaneProblem:
    if instance.anchor.omega_attacker == 0:
        raise InfeasibleInstanceError("anchor attacker reward + cost is zero")
    anchor_ratio = instance.anchor.omega_defender / instance.anchor.omega_attacker
    alpha = tuple(a.omega_defender / a.omega_attacker - anchor_ratio for a in instance.assets[:-1])
    _, c2 = defender_payoff_coefficients(instance)
    return HyperplaneProblem(alpha, -anchor_ratio, c2[:-1])


def payoff_ratios(problem: HyperplaneProblem) -> RatioTable:
    if all(a == 0 for a in problem.alpha):
        raise DegenerateProblemError("every hyperplane coefficient is zero")
    if problem.rhs == 0:
        raise DegenerateProblemError("ratios are undefined for a zero right-hand side")
    ratios = []
    feasible = []
    for i, (a, c) in enumerate(zip(problem.alpha, problem.objective), start=1):
        if a == 0:
            ratios.append(None)
            continue
        ratios.append(problem.rhs * c / a)
        if 0 <= problem.rhs / a <= 1:
            feasible.append(i)
    return RatioTable(tuple(ratios), tuple(feasible))


def _objective(problem: HyperplaneProblem, attack: AttackVector) -> Fraction:
    return sum((c * a for c, a in zip(problem.objective, attack)), Fraction(0))


def _single_index_attack(problem: HyperplaneProblem, k: int) -> AttackVector:
    weight = problem.rhs / problem.alpha[k - 1]
    entries = [Fraction(0)] * problem.size
    entries[k - 1] = weight
    entries[-1] = 1 - weight
    return AttackVector(tuple(entries))


def _ratio_path_applies(problem: HyperplaneProblem) -> bool:
    # every single-index weighting is feasible, which makes the weights
    # alpha_i A_i / rhs a probability vector on the whole constraint set
    return problem.rhs != 0 and all(a != 0 and 0 <= problem.rhs / a <= 1 for a in problem.alpha)


def slice_vertices(problem: HyperplaneProblem) -> list[AttackVector]:
    """Exact vertices of the attack simplex cut by the hyperplane.

    In homogeneous form the constraint reads ``sum_n g_n A_n = 0`` with
    ``g_n = alpha_n - rhs`` for non-anchor assets and ``g_N = -rhs``. Vertices
    are simplex corners with g_n = 0 and points on edges whose endpoints have
    opposite signs.
    """
    size = problem.size
    g = [a - problem.rhs for a in problem.alpha] + [-problem.rhs]
    out = []
    for i in range(size):
        if g[i] == 0:
            out.append(AttackVector.vertex(size, i + 1))
    for i in range(size):
        for j in range(i + 1, size):
            if g[i] * g[j] < 0:
                t = g[j] / (g[j] - g[i])
                entries = [Fraction(0)] * size
                entries[i], entries[j] = t, 1 - t
                out.append(AttackVector(tuple(entries)))
    return out


def constrained_extrema(problem: HyperplaneProblem) -> ConstrainedExtrema:
    if _ratio_path_applies(problem):
        ratios = payoff_ratios(problem).ratios
        lo = min(range(len(ratios)), key=lambda i: (ratios[i], i))
        hi = min(range(len(ratios)), key=lambda i: (-ratios[i], i))
        return ConstrainedExtrema(
            ratios[lo], _single_index_attack(problem, lo + 1),
            ratios[hi], _single_index_attack(problem, hi + 1),
        )
    candidates = slice_vertices(problem)
    if not candidates:
        raise EmptyIntersectionError("the Delta_2 = 0 hyperplane does not meet the attack simplex")
    values = [_objective(problem, a) for a in candidates]
    lo = min(range(len(values)), key=lambda i: (values[i], i))
    hi = min(range(len(values)), key=lambda i: (-values[i], i))
    return ConstrainedExtrema(values[lo], candidates[lo], values[hi], candidates[hi])


def exceeds_threshold(problem: HyperplaneProblem, threshold) -> bool:
    return constrained_extrema(problem).max_value > as_rational(threshold)
