"""Joint resource-assignment matrices realizing a defense marginal vector.

Entry (n, m) is the probability that resource m protects asset n. Each column
is a distribution over assets, and the marginal D_n is the row average.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .model import DefenseVector, as_rational


@dataclass(frozen=True)
class AllocationMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    resource_count: int = field(init=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("allocation matrix needs at least one row and one column")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged allocation matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "resource_count", width)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), self.resource_count

    def row_sums(self) -> tuple[Fraction, ...]:
        """Sum over resources per asset; equals M * D_n and may exceed 1."""
        return tuple(sum(r, Fraction(0)) for r in self.entries)

    def to_csv(self) -> str:
        header = ",".join(["asset"] + [f"S{m}" for m in range(1, self.resource_count + 1)])
        body = [",".join([f"T{n}"] + [str(x) for x in row]) for n, row in enumerate(self.entries, start=1)]
        return "\n".join([header] + body) + "\n"


@dataclass(frozen=True)
class Violation:
    kind: str  # "entry", "column", or "row"
    index: tuple[int, ...]
    detail: str


@dataclass(frozen=True)
class AllocationVerdict:
    valid: bool
    violations: tuple[Violation, ...]


def uniform_allocation(defense: DefenseVector, resources: int) -> AllocationMatrix:
    """Every resource follows the marginal vector itself."""
    if resources < 1:
        raise ValueError("need at least one resource")
    return AllocationMatrix(tuple((d,) * resources for d in defense))


def validate_allocation(matrix: AllocationMatrix, defense: DefenseVector) -> AllocationVerdict:
    n_rows, n_cols = matrix.shape
    if n_rows != len(defense):
        raise ValueError(f"matrix has {n_rows} rows but the defense vector has {len(defense)} entries")
    found = []
    for n, row in enumerate(matrix.entries, start=1):
        for m, x in enumerate(row, start=1):
            if not 0 <= x <= 1:
                found.append(Violation("entry", (n, m), f"Pr(T{n}, S{m}) = {x} outside [0, 1]"))
    for m in range(n_cols):
        total = sum((row[m] for row in matrix.entries), Fraction(0))
        if total != 1:
            found.append(Violation("column", (m + 1,), f"column S{m + 1} sums to {total}, not 1"))
    for n, (row, d) in enumerate(zip(matrix.entries, defense), start=1):
        mean = sum(row, Fraction(0)) / n_cols
        if mean != d:
            found.append(Violation("row", (n,), f"row T{n} averages {mean}, expected {d}"))
    return AllocationVerdict(not found, tuple(found))
