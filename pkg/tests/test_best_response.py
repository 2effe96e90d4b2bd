import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from generators import defense_points, feasible_instances, random_instance, random_simplex_point, unit
from stackgame.best_response import (
    attacker_best_response,
    defense_family_at,
    family_coefficients,
    feasible_anchor_interval,
    indifference_gap,
)
from stackgame.documents import example_instance
from stackgame.errors import EmptyIntervalError, InfeasibleInstanceError
from stackgame.model import AttackVector, DefenseVector, GameInstance, attack_utility, attacker_payoff
from stackgame.oracles import brute_force_attacker
from stackgame.selftest import FAMILY_ONE, FAMILY_ZERO


def test_family_endpoints(example):
    assert defense_family_at(example, 0).entries == FAMILY_ZERO
    assert defense_family_at(example, 1).entries == FAMILY_ONE


def test_family_midpoint(example):
    expected = (F(1, 6), F(1, 10), F(1, 12), F(1, 14), F(1, 24), F(1, 40), F(1, 84), F(1, 2))
    assert defense_family_at(example, F(1, 2)).entries == expected


def test_family_rejects_bad_d(example):
    with pytest.raises(ValueError):
        defense_family_at(example, F(3, 2))


def test_family_reports_leaving_simplex():
    g = GameInstance.from_rows([(1, 1, 5, -2), (1, 1, 6, 0)])
    with pytest.raises(InfeasibleInstanceError):
        defense_family_at(g, 0)


def test_interval_full(example, three_asset):
    assert feasible_anchor_interval(example) == (0, 1)
    assert feasible_anchor_interval(three_asset) == (0, 1)


def test_interval_prefix_with_example_anchor():
    # the single family entry is 1/3 - d/3, inside [0, 1] everywhere
    g = GameInstance.from_rows([(1, 1, 5, -2), (1, 1, 4, -5)])
    assert feasible_anchor_interval(g) == (0, 1)


def _scan_interval(g, steps=600):
    """Grid oracle: the valid anchor probabilities among multiples of 1/steps."""
    ok = []
    for i in range(steps + 1):
        d = F(i, steps)
        if all(0 <= p + q * d <= 1 for p, q in family_coefficients(g)[:-1]):
            ok.append(d)
    return ok[0], ok[-1]


def test_interval_binding_strictly_inside():
    # family entry is -1/3 + 2d
    g = GameInstance.from_rows([(1, 1, 5, -2), (1, 1, 6, 0)])
    lo, hi = feasible_anchor_interval(g)
    assert (lo, hi) == (F(1, 6), F(2, 3))
    assert _scan_interval(g) == (lo, hi)


def test_interval_empty():
    g = GameInstance.from_rows([(1, 1, 5, -2), (1, 1, 10, -9), (1, 1, 6, 0)])
    with pytest.raises(EmptyIntervalError):
        feasible_anchor_interval(g)


@pytest.mark.parametrize("d", [F(0), F(1, 2), F(1)])
def test_full_tie_on_family(example, d):
    members, value = attacker_best_response(example, defense_family_at(example, d))
    assert members == tuple(range(1, 9))
    assert value == 4 + d


def test_best_response_vertex_defense(example):
    assert attacker_best_response(example, DefenseVector.vertex(8, 1)) == ((2, 3, 4, 5, 6, 7), 5)


def test_best_response_uniform_defense(example):
    assert attacker_best_response(example, DefenseVector.uniform(8)) == ((1,), F(37, 8))


def test_indifference_gap(example):
    assert indifference_gap(example, defense_family_at(example, F(1, 3))) == 0
    assert indifference_gap(example, DefenseVector.vertex(8, 1)) == 3
    same = GameInstance.from_rows([(1, 2, 3, 4)] * 3, names=["a", "b", "c"])
    assert indifference_gap(same, DefenseVector.uniform(3)) == 0


@settings(max_examples=60)
@given(feasible_instances(), unit)
def test_indifference_identity(g, d):
    defense = defense_family_at(g, d)
    target = g.anchor.reward_attacker - g.anchor.omega_attacker * d
    assert all(attack_utility(g, defense, n) == target for n in range(1, len(g) + 1))
    assert sum(defense) == 1


@settings(max_examples=60)
@given(feasible_instances(), unit, unit, unit)
def test_family_is_linear(g, d1, d2, lam):
    mixed = defense_family_at(g, lam * d1 + (1 - lam) * d2)
    a, b = defense_family_at(g, d1), defense_family_at(g, d2)
    assert mixed.entries == tuple(lam * x + (1 - lam) * y for x, y in zip(a, b))


def test_best_response_matches_oracle_and_dominates_mixtures():
    rng = random.Random(11)
    for _ in range(40):
        g = random_instance(rng)
        defense = random_simplex_point(rng, len(g), DefenseVector)
        members, value = attacker_best_response(g, defense)
        oracle_value, oracle_members = brute_force_attacker(g, defense)
        assert (value, members) == (oracle_value, oracle_members)
        for _ in range(5):
            assert attacker_payoff(g, defense, random_simplex_point(rng, len(g))) <= value


@given(defense_points(8))
def test_best_value_is_vertex_max(d):
    g = example_instance()
    _, value = attacker_best_response(g, d)
    assert value == max(attacker_payoff(g, d, AttackVector.vertex(8, n)) for n in range(1, 9))
