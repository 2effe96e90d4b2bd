"""Exception types raised by the solver."""

from __future__ import annotations


class GameError(ValueError):
    """Base class for invalid game inputs."""


class InvalidInstanceError(GameError):
    pass


class InvalidVectorError(GameError):
    pass


class InfeasibleInstanceError(GameError):
    """The instance cannot support the attacker-indifference defense family."""


class EmptyIntervalError(InfeasibleInstanceError):
    pass


class SingularSystemError(GameError):
    pass


class DegenerateProblemError(GameError):
    pass


class EmptyIntersectionError(GameError):
    """The Delta_2 = 0 hyperplane misses the attack simplex."""


class GridCapExceededError(GameError):
    pass


class InvariantViolation(AssertionError):
    """An internal consistency cross-check failed."""


class ParseError(GameError):
    """Malformed instance document or attack specification."""
