"""Command-line interface.

Exit codes: 0 success, 1 infeasible instance, 2 parse or usage error,
3 internal invariant violation.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from . import attacker, best_response, documents, feasibility, region, solver
from .allocation import uniform_allocation, validate_allocation
from .documents import dump, rational, vector
from .errors import (
    DegenerateProblemError,
    EmptyIntersectionError,
    InfeasibleInstanceError,
    InvariantViolation,
    ParseError,
)
from .model import as_rational
from .selftest import format_table, run_selftest

EXIT_INFEASIBLE = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3


def _fail(message: str, code: int) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def guarded(fn):
    """Map library exceptions onto the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as exc:
            _fail(str(exc), EXIT_PARSE)
        except InfeasibleInstanceError as exc:
            _fail(f"infeasible instance: {exc}", EXIT_INFEASIBLE)
        except InvariantViolation as exc:
            _fail(f"invariant violation: {exc}", EXIT_INVARIANT)

    return wrapper


def _document(ctx: click.Context) -> documents.InstanceDocument:
    return documents.load_document(ctx.obj["instance"], ctx.obj["anchor"])


@click.group()
@click.option("--instance", "instance", default="paper_example", show_default=True,
              help="Instance file (YAML/JSON) or the name of a bundled instance.")
@click.option("--anchor", default=None, help="Rotate the named asset into the anchor (last) position.")
@click.pass_context
def main(ctx: click.Context, instance: str, anchor: str | None) -> None:
    """Stackelberg attacker-defender solver with exact rational arithmetic."""
    ctx.ensure_object(dict)
    ctx.obj.update(instance=instance, anchor=anchor)


# ---- report builders -----------------------------------------------------

def feasibility_report(report: feasibility.FeasibilityReport) -> dict:
    return {
        "feasible": report.feasible,
        "per_asset_checks": [
            {"index": c.index, "omega_sign": c.omega_sign, "passed": c.passed,
             "cost_violation": str(c.cost_violation), "reward_violation": str(c.reward_violation)}
            for c in report.per_asset_checks
        ],
        "sum_condition_one": rational(report.sum_condition_one),
        "sum_condition_two": rational(report.sum_condition_two),
        "failures": report.failures(),
    }


def solve_report(report: solver.SolveReport, attack) -> dict:
    d = report.deltas
    chosen = report.optimal_defense
    if isinstance(chosen, solver.FamilyIndeterminate):
        optimal = {"indeterminate": True, "interval": [str(chosen.lo), str(chosen.hi)]}
    else:
        optimal = {"indeterminate": False}
    return {
        "attack": vector(attack.entries),
        "deltas": {"delta1": rational(d.delta1), "delta2": rational(d.delta2), "delta3": rational(d.delta3)},
        "regime": report.regime.value,
        "optimal_defense": optimal,
        "anchor_probability": rational(report.anchor_probability),
        "defense": vector(report.defense.entries),
        "defender_payoff": rational(report.defender_payoff),
        "attacker_payoff": rational(report.attacker_payoff),
    }


# ---- commands ------------------------------------------------------------

@main.command()
@click.pass_context
@guarded
def validate(ctx: click.Context) -> None:
    """Check the feasibility conditions on the anchor asset."""
    instance = _document(ctx).instance
    report = feasibility.check_feasibility(instance)
    doc = feasibility_report(report)
    doc["anchor_omega_identity"] = rational(feasibility.anchor_omega_identity(instance))
    click.echo(dump(doc), nl=False)
    if not report.feasible:
        sys.exit(EXIT_INFEASIBLE)


@main.command("solve")
@click.option("--attack", "attack_spec", default=None,
              help="e<k>, 'uniform', comma-separated rationals, or a path to a file of attacks.")
@click.option("--attack-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="File with one attack per line (or a YAML list).")
@click.option("--workers", default=1, show_default=True, type=click.IntRange(1),
              help="Worker processes for batch solving.")
@click.pass_context
@guarded
def solve_cmd(ctx: click.Context, attack_spec: str | None, attack_file: str | None, workers: int) -> None:
    """Solve for the defender's optimal family member against an attack vector."""
    doc = _document(ctx)
    size = len(doc.instance)
    if attack_spec is not None and attack_file is None and Path(attack_spec).is_file():
        attack_file, attack_spec = attack_spec, None
    if attack_file is not None:
        attacks = documents.parse_attack_file(Path(attack_file).read_text(encoding="utf-8"), size)
        reports = solver.solve_many(doc.instance, attacks, workers)
        click.echo(dump([solve_report(r, a) for r, a in zip(reports, attacks)]), nl=False)
        return
    if attack_spec is not None:
        attack = documents.parse_attack(attack_spec, size)
    elif doc.attack is not None:
        attack = doc.attack
    else:
        raise ParseError("no attack given: use --attack, --attack-file, or an 'attack' entry in the instance")
    click.echo(dump(solve_report(solver.solve(doc.instance, attack), attack)), nl=False)


@main.command("attacker-bounds")
@click.option("--threshold", default=None,
              help="Payoff to compare against (default: attacker payoff at the top of the family).")
@click.pass_context
@guarded
def attacker_bounds(ctx: click.Context, threshold: str | None) -> None:
    """Bound the attacker's objective on the Delta_2 = 0 hyperplane."""
    instance = _document(ctx).instance
    problem = attacker.build_hyperplane_problem(instance)
    doc: dict = {
        "hyperplane": {"alpha": vector(problem.alpha), "rhs": rational(problem.rhs),
                       "objective": vector(problem.objective)},
    }
    try:
        table = attacker.payoff_ratios(problem)
        doc["ratios"] = {
            "values": [None if r is None else str(r) for r in table.ratios],
            "decimal": [None if r is None else documents.decimal(r) for r in table.ratios],
            "feasible_indices": list(table.feasible_indices),
        }
    except DegenerateProblemError as exc:
        doc["ratios"] = {"undefined": str(exc)}
    try:
        ext = attacker.constrained_extrema(problem)
    except EmptyIntersectionError as exc:
        doc["extrema"] = {"empty": str(exc)}
        click.echo(dump(doc), nl=False)
        return
    doc["extrema"] = {
        "min": {"value": rational(ext.min_value), "attack": vector(ext.min_attack.entries)},
        "max": {"value": rational(ext.max_value), "attack": vector(ext.max_attack.entries)},
    }
    _, hi = best_response.feasible_anchor_interval(instance)
    limit = solver.attacker_equilibrium_payoff(instance, hi) if threshold is None else _rational_arg(threshold)
    doc["threshold"] = rational(limit)
    doc["exceeds_threshold"] = ext.max_value > limit
    click.echo(dump(doc), nl=False)


def _rational_arg(text: str):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"malformed rational {text!r}") from exc


@main.command("region")
@click.option("--plot", type=click.Path(dir_okay=False), default=None, help="Write an SVG figure here.")
@click.option("--table", type=click.Path(dir_okay=False), default=None, help="Write a CSV table here.")
@click.pass_context
@guarded
def region_cmd(ctx: click.Context, plot: str | None, table: str | None) -> None:
    """Feasible payoff region, its convex hull and Pareto frontier."""
    reg = region.build_region(_document(ctx).instance)
    try:
        region.render_region(reg, plot, table)
    except OSError as exc:
        raise ParseError(f"cannot write output: {exc}") from exc
    doc = {
        "vertices": [{"label": p.label, "pi_b1": rational(p.x), "pi_b2": rational(p.y)} for p in reg.vertices],
        "hull": [p.label for p in reg.hull],
        "pareto": [p.label for p in reg.pareto],
    }
    click.echo(dump(doc), nl=False)


@main.command()
@click.option("--resources", "resources", required=True, type=click.IntRange(1), help="Number of resources M.")
@click.option("--anchor-prob", required=True, help="Anchor protection probability d, e.g. 1/2.")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the matrix as CSV.")
@click.pass_context
@guarded
def allocate(ctx: click.Context, resources: int, anchor_prob: str, output: str | None) -> None:
    """Realize family(d) as a resource-assignment matrix."""
    instance = _document(ctx).instance
    d = _rational_arg(anchor_prob)
    if not 0 <= d <= 1:
        raise ParseError(f"--anchor-prob {d} outside [0, 1]")
    defense = best_response.defense_family_at(instance, d)
    matrix = uniform_allocation(defense, resources)
    verdict = validate_allocation(matrix, defense)
    if not verdict.valid:
        raise InvariantViolation("; ".join(v.detail for v in verdict.violations))
    if output is not None:
        Path(output).write_text(matrix.to_csv(), encoding="utf-8")
    doc = {
        "defense": vector(defense.entries),
        "resources": resources,
        "matrix": [[str(x) for x in row] for row in matrix.entries],
        "row_sums": [str(x) for x in matrix.row_sums()],
        "valid": verdict.valid,
    }
    click.echo(dump(doc), nl=False)


@main.command("echo")
@click.pass_context
@guarded
def echo_cmd(ctx: click.Context) -> None:
    """Print the parsed instance in canonical form."""
    doc = _document(ctx)
    click.echo(dump(documents.instance_document(doc.instance, doc.name, doc.attack)), nl=False)


@main.command()
def selftest() -> None:
    """Reproduce every golden value of the bundled example."""
    results = run_selftest()
    click.echo(format_table(results), nl=False)
    if not all(r.passed for r in results):
        sys.exit(EXIT_INVARIANT)


if __name__ == "__main__":
    main()
