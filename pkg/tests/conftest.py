"""Shared fixtures."""

from fractions import Fraction as F

import pytest

from stackgame.documents import example_instance
from stackgame.model import GameInstance


@pytest.fixture
def example():
    return example_instance()


@pytest.fixture
def trivial_pair():
    # asset 1 has omega 1; the anchor solves both sum conditions
    return GameInstance.from_rows([(1, 1, 2, -1), (1, 1, 1, -2)])


@pytest.fixture
def three_asset():
    return GameInstance.from_rows([(8, 2, 5, -2), (6, -1, 5, F(-7, 2)), (3, 0, 4, -5)])


# acceptance criteria register their outcome here; printed after the run
ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")
