"""Core game types and the two teams' expected-payoff functionals.

Asset numbers in the public API are 1-based (asset 1 .. asset N); the last
asset of an instance is the anchor whose protection probability
parameterizes the defense family.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .errors import InvalidInstanceError, InvalidVectorError

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike | float) -> Fraction:
    """Coerce ``value`` to an exact Fraction.

    Floats go through their shortest repr, so ``0.1`` becomes ``1/10`` rather
    than the binary expansion.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class AssetParams:
    name: str
    reward_defender: Fraction
    cost_defender: Fraction
    reward_attacker: Fraction
    cost_attacker: Fraction

    def __post_init__(self) -> None:
        for attr in ("reward_defender", "cost_defender", "reward_attacker", "cost_attacker"):
            object.__setattr__(self, attr, as_rational(getattr(self, attr)))

    @property
    def omega_attacker(self) -> Fraction:
        return self.reward_attacker + self.cost_attacker

    @property
    def omega_defender(self) -> Fraction:
        return self.reward_defender + self.cost_defender


@dataclass(frozen=True)
class GameInstance:
    """Ordered assets; the final one is the anchor."""

    assets: tuple[AssetParams, ...]

    def __post_init__(self) -> None:
        assets = tuple(self.assets)
        object.__setattr__(self, "assets", assets)
        if len(assets) < 2:
            raise InvalidInstanceError(f"an instance needs at least 2 assets, got {len(assets)}")
        names = [a.name for a in assets]
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise InvalidInstanceError(f"duplicate asset names: {', '.join(dupes)}")
        # the anchor's omega only ever multiplies; a zero there is reported
        # as infeasibility rather than rejected here
        for n, asset in enumerate(assets[:-1], start=1):
            if asset.omega_attacker == 0:
                raise InvalidInstanceError(
                    f"asset {n} ({asset.name!r}): attacker reward + cost is zero"
                )

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[RationalLike]], names: Sequence[str] | None = None) -> GameInstance:
        """Build from (reward_B, cost_B, reward_R, cost_R) rows."""
        rows = list(rows)
        if names is None:
            names = [f"T{i}" for i in range(1, len(rows) + 1)]
        return cls(tuple(AssetParams(name, *row) for name, row in zip(names, rows)))

    def __len__(self) -> int:
        return len(self.assets)

    @property
    def size(self) -> int:
        return len(self.assets)

    @property
    def anchor(self) -> AssetParams:
        return self.assets[-1]

    def asset(self, n: int) -> AssetParams:
        """Asset by 1-based number."""
        if not 1 <= n <= len(self.assets):
            raise IndexError(f"asset index {n} outside 1..{len(self.assets)}")
        return self.assets[n - 1]

    def with_anchor(self, name: str) -> GameInstance:
        """Rotate the asset list so that ``name`` ends up last."""
        for k, asset in enumerate(self.assets):
            if asset.name == name:
                return GameInstance(self.assets[k + 1:] + self.assets[: k + 1])
        raise InvalidInstanceError(f"no asset named {name!r}")


class _ProbabilityVector:
    """Shared behaviour of defense and attack vectors."""

    entries: tuple[Fraction, ...]

    def _validate(self) -> None:
        entries = tuple(as_rational(x) for x in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise InvalidVectorError("empty probability vector")
        for n, x in enumerate(entries, start=1):
            if not 0 <= x <= 1:
                raise InvalidVectorError(f"entry {n} = {x} outside [0, 1]")
        total = sum(entries, Fraction(0))
        if total != 1:
            raise InvalidVectorError(f"entries sum to {total}, not 1")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    @classmethod
    def vertex(cls, size: int, n: int):
        """Unit vector putting all mass on 1-based asset ``n``."""
        if not 1 <= n <= size:
            raise IndexError(f"vertex {n} outside 1..{size}")
        return cls(tuple(Fraction(int(i == n)) for i in range(1, size + 1)))

    @classmethod
    def uniform(cls, size: int):
        return cls((Fraction(1, size),) * size)

    @classmethod
    def mix(cls, weight: RationalLike, first, second):
        """``weight * first + (1 - weight) * second``."""
        w = as_rational(weight)
        return cls(tuple(w * a + (1 - w) * b for a, b in zip(first, second)))


@dataclass(frozen=True)
class DefenseVector(_ProbabilityVector):
    entries: tuple[Fraction, ...] = field()

    def __post_init__(self) -> None:
        self._validate()


@dataclass(frozen=True)
class AttackVector(_ProbabilityVector):
    entries: tuple[Fraction, ...] = field()

    def __post_init__(self) -> None:
        self._validate()


@dataclass(frozen=True)
class PayoffPair:
    defender: Fraction
    attacker: Fraction


def _check_length(instance: GameInstance, *vectors: Sequence) -> None:
    for v in vectors:
        if len(v) != len(instance):
            raise InvalidVectorError(f"vector length {len(v)} does not match {len(instance)} assets")


def omega_attacker(instance: GameInstance, n: int) -> Fraction:
    return instance.asset(n).omega_attacker


def omega_defender(instance: GameInstance, n: int) -> Fraction:
    return instance.asset(n).omega_defender


def defender_payoff(instance: GameInstance, defense: DefenseVector, attack: AttackVector) -> Fraction:
    _check_length(instance, defense, attack)
    total = Fraction(0)
    for asset, d, a in zip(instance.assets, defense, attack):
        total += a * (d * asset.reward_defender - (1 - d) * asset.cost_defender)
    return total


def attacker_payoff(instance: GameInstance, defense: DefenseVector, attack: AttackVector) -> Fraction:
    _check_length(instance, defense, attack)
    total = Fraction(0)
    for asset, d, a in zip(instance.assets, defense, attack):
        total += a * ((1 - d) * asset.reward_attacker - d * asset.cost_attacker)
    return total


def attack_utility(instance: GameInstance, defense: DefenseVector, n: int) -> Fraction:
    """Attacker's payoff from hitting asset ``n`` outright."""
    _check_length(instance, defense)
    asset = instance.asset(n)
    d = defense[n - 1]
    return (1 - d) * asset.reward_attacker - d * asset.cost_attacker


def payoffs(instance: GameInstance, defense: DefenseVector, attack: AttackVector) -> PayoffPair:
    return PayoffPair(
        defender_payoff(instance, defense, attack),
        attacker_payoff(instance, defense, attack),
    )
