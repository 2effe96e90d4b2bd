from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from generators import defense_points, simplex_points, unit
from stackgame.documents import example_instance
from stackgame.errors import InvalidInstanceError, InvalidVectorError
from stackgame.model import (
    AssetParams,
    AttackVector,
    DefenseVector,
    GameInstance,
    as_rational,
    attack_utility,
    attacker_payoff,
    defender_payoff,
    omega_attacker,
    omega_defender,
    payoffs,
)
from stackgame.selftest import FAMILY_ONE, FAMILY_ZERO

EXAMPLE = example_instance()


def test_omegas_example():
    assert omega_attacker(EXAMPLE, 1) == 3
    assert omega_attacker(EXAMPLE, 8) == -1
    assert omega_defender(EXAMPLE, 1) == 10
    assert omega_defender(EXAMPLE, 7) == 9


def test_omega_cancellation_and_zero():
    assert AssetParams("x", 0, 0, 1, -1).omega_attacker == 0
    assert AssetParams("x", 0, 0, 1, -1).omega_defender == 0


def test_defender_payoff_golden():
    assert defender_payoff(EXAMPLE, DefenseVector(FAMILY_ONE), AttackVector.vertex(8, 8)) == 3
    assert defender_payoff(EXAMPLE, DefenseVector(FAMILY_ZERO), AttackVector.vertex(8, 5)) == F(10, 3)


@pytest.mark.parametrize("n", range(1, 9))
def test_attacker_payoff_golden_any_attack(n):
    a = AttackVector.vertex(8, n)
    assert attacker_payoff(EXAMPLE, DefenseVector(FAMILY_ONE), a) == 5
    assert attacker_payoff(EXAMPLE, DefenseVector(FAMILY_ZERO), a) == 4


def test_zero_payoff_instance():
    # an all-zero instance is unconstructible (omega must be nonzero), so
    # attacker costs stay nonzero and only unprotected assets are attacked
    zero = GameInstance.from_rows([(0, 0, 0, 1)] * 3)
    d, a = DefenseVector.uniform(3), AttackVector((F(1, 2), F(1, 4), F(1, 4)))
    assert defender_payoff(zero, d, a) == 0
    assert attacker_payoff(zero, DefenseVector.vertex(3, 3), AttackVector((F(1, 2), F(1, 2), F(0)))) == 0


def test_attack_utility_examples():
    assert attack_utility(EXAMPLE, DefenseVector(FAMILY_ZERO), 1) == 4
    assert attack_utility(EXAMPLE, DefenseVector.vertex(8, 1), 1) == 2
    # unprotected asset yields its reward
    assert attack_utility(EXAMPLE, DefenseVector.vertex(8, 1), 3) == 5


def test_instance_validation():
    with pytest.raises(InvalidInstanceError, match="at least 2"):
        GameInstance.from_rows([(1, 1, 1, 1)])
    with pytest.raises(InvalidInstanceError, match="asset 1"):
        GameInstance.from_rows([(1, 1, 1, -1), (1, 1, 1, 1)])
    with pytest.raises(InvalidInstanceError, match="duplicate"):
        GameInstance.from_rows([(1, 1, 1, 1), (1, 1, 1, 1)], names=["a", "a"])


def test_anchor_with_zero_omega_is_constructible():
    g = GameInstance.from_rows([(1, 1, 2, -1), (1, 1, 1, -1)])
    assert g.anchor.omega_attacker == 0


def test_vector_validation():
    with pytest.raises(InvalidVectorError, match="sum"):
        AttackVector((F(1, 2), F(1, 3)))
    with pytest.raises(InvalidVectorError, match="outside"):
        DefenseVector((F(3, 2), F(-1, 2)))
    with pytest.raises(InvalidVectorError):
        defender_payoff(EXAMPLE, DefenseVector.uniform(3), AttackVector.uniform(3))


def test_as_rational():
    assert as_rational(0.1) == F(1, 10)
    assert as_rational("-7/2") == F(-7, 2)
    with pytest.raises(TypeError):
        as_rational(True)


def test_with_anchor_rotates():
    g = EXAMPLE.with_anchor("T5")
    assert [a.name for a in g.assets] == ["T6", "T7", "T8", "T1", "T2", "T3", "T4", "T5"]


@given(simplex_points(8), simplex_points(8), defense_points(8), unit)
def test_bilinear_in_attack(a, b, d, lam):
    mixed = AttackVector.mix(lam, a, b)
    for fn in (defender_payoff, attacker_payoff):
        assert fn(EXAMPLE, d, mixed) == lam * fn(EXAMPLE, d, a) + (1 - lam) * fn(EXAMPLE, d, b)


@given(defense_points(8), defense_points(8), simplex_points(8), unit)
def test_bilinear_in_defense(d1, d2, a, lam):
    mixed = DefenseVector.mix(lam, d1, d2)
    for fn in (defender_payoff, attacker_payoff):
        assert fn(EXAMPLE, mixed, a) == lam * fn(EXAMPLE, d1, a) + (1 - lam) * fn(EXAMPLE, d2, a)


@given(simplex_points(8), defense_points(8), st.integers(0, 7))
def test_zeroed_coordinate_contributes_nothing(a, d, k):
    entries = list(a.entries)
    if entries[k] == 1:
        return
    entries[k] = F(0)
    total = sum(entries)
    renorm = AttackVector(tuple(x / total for x in entries))
    # with A_k = 0 the payoff is the A-weighted sum over the other assets only
    for fn in (defender_payoff, attacker_payoff):
        expected = sum(
            renorm[n] * fn(EXAMPLE, d, AttackVector.vertex(8, n + 1)) for n in range(8) if n != k
        )
        assert fn(EXAMPLE, d, renorm) == expected


@given(simplex_points(8), defense_points(8))
def test_attacker_payoff_is_weighted_utility(a, d):
    assert attacker_payoff(EXAMPLE, d, a) == sum(a[n - 1] * attack_utility(EXAMPLE, d, n) for n in range(1, 9))


@given(simplex_points(8), defense_points(8))
def test_repeated_evaluation_identical(a, d):
    assert payoffs(EXAMPLE, d, a) == payoffs(EXAMPLE, d, a)
    assert str(defender_payoff(EXAMPLE, d, a)) == str(defender_payoff(EXAMPLE, d, a))
