"""Golden checks against the bundled eight-asset example."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as F
from typing import Any, Callable

from . import attacker, best_response, feasibility, oracles, region, solver
from .documents import example_instance
from .model import AttackVector, attacker_payoff, defender_payoff, omega_attacker, omega_defender


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    expected: Any
    actual: Any


FAMILY_ZERO = (F(1, 3), F(1, 5), F(1, 6), F(1, 7), F(1, 12), F(1, 20), F(1, 42), F(0))
FAMILY_ONE = (F(0),) * 7 + (F(1),)
C1 = tuple(F(x) for x in (-2, 1, -4, -2, 3, -1, -3, 3))
C2 = (F(4, 3), F(2), F(-11, 6), F(-1), F(10, 3), F(-3, 4), F(-39, 14), F(0))
ALPHA = (F(19, 3), F(4), F(31, 6), F(4), F(10, 3), F(13, 4), F(45, 14))
RATIOS = (F(12, 19), F(3, 2), F(-33, 31), F(-3, 4), F(3), F(-9, 13), F(-13, 5))
VERTEX_IMAGES = tuple(zip(C1, C2))


def _checks() -> list[tuple[str, Callable[[], Any], Any]]:
    g = example_instance()
    e = lambda n: AttackVector.vertex(8, n)  # noqa: E731
    fam = lambda d: best_response.defense_family_at(g, d)  # noqa: E731
    problem = lambda: attacker.build_hyperplane_problem(g)  # noqa: E731
    ext = lambda: attacker.constrained_extrema(problem())  # noqa: E731

    def solved(n):
        r = solver.solve(g, e(n))
        return (r.regime.value, r.defense.entries, r.defender_payoff, r.attacker_payoff)

    return [
        ("omega_attacker T1", lambda: omega_attacker(g, 1), F(3)),
        ("omega_attacker T8", lambda: omega_attacker(g, 8), F(-1)),
        ("omega_defender T1", lambda: omega_defender(g, 1), F(10)),
        ("omega_defender T7", lambda: omega_defender(g, 7), F(9)),
        ("defender payoff family(1), e8", lambda: defender_payoff(g, fam(1), e(8)), F(3)),
        ("defender payoff family(0), e5", lambda: defender_payoff(g, fam(0), e(5)), F(10, 3)),
        ("attacker payoff family(1)", lambda: attacker_payoff(g, fam(1), AttackVector.uniform(8)), F(5)),
        ("attacker payoff family(0)", lambda: attacker_payoff(g, fam(0), AttackVector.uniform(8)), F(4)),
        ("feasibility", lambda: (lambda r: (r.feasible, r.sum_condition_one, r.sum_condition_two))(
            feasibility.check_feasibility(g)), (True, F(1), F(0))),
        ("solve_anchor T1..T7", lambda: feasibility.solve_anchor(g.assets[:-1]), (F(4), F(-5))),
        ("family(0)", lambda: fam(0).entries, FAMILY_ZERO),
        ("family(1)", lambda: fam(1).entries, FAMILY_ONE),
        ("deltas e8", lambda: _triple(solver.compute_deltas(g, e(8))), (F(0), F(3), F(0))),
        ("deltas e5", lambda: _triple(solver.compute_deltas(g, e(5))), (F(1, 3), F(-1, 3), F(-3))),
        ("deltas e1", lambda: _triple(solver.compute_deltas(g, e(1))), (F(10, 3), F(-10, 3), F(2))),
        ("optimal defense Positive", lambda: solver.optimal_defense(g, solver.Regime.POSITIVE).entries,
         FAMILY_ONE),
        ("optimal defense Negative", lambda: solver.optimal_defense(g, solver.Regime.NEGATIVE).entries,
         FAMILY_ZERO),
        ("optimal defense Zero", lambda: solver.optimal_defense(g, solver.Regime.ZERO),
         solver.FamilyIndeterminate(F(0), F(1))),
        ("coefficients c1", lambda: solver.defender_payoff_coefficients(g)[0], C1),
        ("coefficients c2", lambda: solver.defender_payoff_coefficients(g)[1], C2),
        ("solve e8", lambda: solved(8), ("Positive", FAMILY_ONE, F(3), F(5))),
        ("solve e5", lambda: solved(5), ("Negative", FAMILY_ZERO, F(10, 3), F(4))),
        ("solve e7", lambda: (lambda r: (r[0], r[2], r[3]))(solved(7)), ("Negative", F(-39, 14), F(4))),
        ("attacker equilibrium payoff d=1", lambda: solver.attacker_equilibrium_payoff(g, 1), F(5)),
        ("attacker equilibrium payoff d=0", lambda: solver.attacker_equilibrium_payoff(g, 0), F(4)),
        ("hyperplane alpha", lambda: problem().alpha, ALPHA),
        ("hyperplane rhs", lambda: problem().rhs, F(3)),
        ("hyperplane objective", lambda: problem().objective, C2[:-1]),
        ("payoff ratios", lambda: attacker.payoff_ratios(problem()).ratios, RATIOS),
        ("ratio feasible indices", lambda: attacker.payoff_ratios(problem()).feasible_indices,
         tuple(range(1, 8))),
        ("constrained min", lambda: (ext().min_value, ext().min_attack[6], ext().min_attack[7]),
         (F(-13, 5), F(14, 15), F(1, 15))),
        ("constrained max", lambda: (ext().max_value, ext().max_attack[4], ext().max_attack[7]),
         (F(3), F(9, 10), F(1, 10))),
        ("cannot exceed 5", lambda: attacker.exceeds_threshold(problem(), 5), False),
        ("vertex images", lambda: tuple(p.coords for p in region.vertex_images(g)), VERTEX_IMAGES),
        ("pareto frontier", lambda: tuple((p.label, p.coords) for p in region.build_region(g).pareto),
         (("p5", (F(3), F(10, 3))),)),
        ("point for e5", lambda: region.point_for_attack(g, e(5)).coords, (F(3), F(10, 3))),
        ("oracle defender e8", lambda: oracles.brute_force_defender_on_family(g, e(8), 10), (F(1), F(3))),
        ("oracle defender e5", lambda: oracles.brute_force_defender_on_family(g, e(5), 10), (F(0), F(10, 3))),
        ("oracle constrained extrema", lambda: (lambda r: (r.min_value, r.max_value, r.max_witness[4]))(
            oracles.brute_force_constrained_attacker(g)), (F(-13, 5), F(3), F(9, 10))),
    ]


def _triple(d: solver.DeltaTriple) -> tuple:
    return (d.delta1, d.delta2, d.delta3)


def run_selftest() -> list[CheckResult]:
    results = []
    for name, compute, expected in _checks():
        try:
            actual = compute()
        except Exception as exc:  # a crash is a failed check, reported in the table
            actual = f"error: {exc}"
        results.append(CheckResult(name, actual == expected, expected, actual))
    return results


def _fmt(value: Any) -> str:
    if isinstance(value, tuple):
        return "(" + ", ".join(_fmt(v) for v in value) + ")"
    return str(value)


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  result  value", "-" * (width + 30)]
    for r in results:
        lines.append(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {_fmt(r.actual)}")
        if not r.passed:
            lines.append(f"{'':<{width}}  expected {_fmt(r.expected)}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"
