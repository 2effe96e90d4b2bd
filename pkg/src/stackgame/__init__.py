"""Exact solver for the analytical Stackelberg attacker-defender allocation game."""

from .model import (
    AssetParams,
    AttackVector,
    DefenseVector,
    GameInstance,
    PayoffPair,
    attack_utility,
    attacker_payoff,
    defender_payoff,
    omega_attacker,
    omega_defender,
)
from .feasibility import anchor_omega_identity, check_feasibility, solve_anchor
from .best_response import (
    attacker_best_response,
    defense_family_at,
    feasible_anchor_interval,
    indifference_gap,
)
from .solver import (
    DeltaTriple,
    FamilyIndeterminate,
    Regime,
    SolveReport,
    attacker_equilibrium_payoff,
    classify_regime,
    compute_deltas,
    defender_payoff_coefficients,
    optimal_defense,
    solve,
)
from .attacker import build_hyperplane_problem, constrained_extrema, exceeds_threshold, payoff_ratios
from .region import PlanarPoint, build_region, convex_hull_2d, pareto_frontier, point_for_attack, vertex_images
from .documents import example_instance, parse_instance

__version__ = "0.1.0"
