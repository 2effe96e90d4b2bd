"""Feasible payoff region in the (top-of-family, bottom-of-family) payoff plane.

Every attack vector maps linearly to the point ``(c1 . A, c2 . A)``, so the
region is the convex hull of the N vertex images.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .model import AttackVector, GameInstance
from .solver import defender_payoff_coefficients


@dataclass(frozen=True)
class PlanarPoint:
    x: Fraction
    y: Fraction
    label: str = "mixture"

    @property
    def coords(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


@dataclass(frozen=True)
class PayoffRegion:
    vertices: tuple[PlanarPoint, ...]
    hull: tuple[PlanarPoint, ...]
    pareto: tuple[PlanarPoint, ...]


def _cross(o: PlanarPoint, a: PlanarPoint, b: PlanarPoint) -> Fraction:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def vertex_images(instance: GameInstance) -> list[PlanarPoint]:
    c1, c2 = defender_payoff_coefficients(instance)
    return [PlanarPoint(x, y, f"p{i}") for i, (x, y) in enumerate(zip(c1, c2), start=1)]


def point_for_attack(instance: GameInstance, attack: AttackVector) -> PlanarPoint:
    c1, c2 = defender_payoff_coefficients(instance)
    if len(attack) != len(c1):
        raise ValueError(f"attack length {len(attack)} does not match {len(c1)} assets")
    x = sum((c * a for c, a in zip(c1, attack)), Fraction(0))
    y = sum((c * a for c, a in zip(c2, attack)), Fraction(0))
    return PlanarPoint(x, y)


def convex_hull_2d(points: Sequence[PlanarPoint]) -> list[PlanarPoint]:
    """Counterclockwise hull (monotone chain), strict turns only.

    Starts at the lexicographically smallest point. Duplicates collapse to
    their first occurrence; a single point or a segment comes back as one or
    two points.
    """
    if not points:
        raise ValueError("convex hull of no points")
    seen = set()
    pts = []
    for p in sorted(points, key=lambda p: p.coords):
        if p.coords not in seen:
            seen.add(p.coords)
            pts.append(p)
    if len(pts) <= 2:
        return pts

    def chain(seq):
        out: list[PlanarPoint] = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(reversed(pts))
    return lower[:-1] + upper[:-1]


def point_in_hull(point: PlanarPoint, hull: Sequence[PlanarPoint]) -> bool:
    """Exact inside-or-on test against a hull from :func:`convex_hull_2d`."""
    if len(hull) == 1:
        return point.coords == hull[0].coords
    if len(hull) == 2:
        a, b = hull
        return (_cross(a, b, point) == 0
                and min(a.x, b.x) <= point.x <= max(a.x, b.x)
                and min(a.y, b.y) <= point.y <= max(a.y, b.y))
    return all(_cross(hull[i], hull[(i + 1) % len(hull)], point) >= 0 for i in range(len(hull)))


def _dominates(q: PlanarPoint, p: PlanarPoint) -> bool:
    return q.x >= p.x and q.y >= p.y and (q.x > p.x or q.y > p.y)


def pareto_frontier(points: Sequence[PlanarPoint]) -> list[PlanarPoint]:
    """Points no other point weakly beats with one strict gain; exact ties all kept."""
    return [p for p in points if not any(_dominates(q, p) for q in points)]


def build_region(instance: GameInstance) -> PayoffRegion:
    vertices = vertex_images(instance)
    return PayoffRegion(tuple(vertices), tuple(convex_hull_2d(vertices)), tuple(pareto_frontier(vertices)))


def render_table(region: PayoffRegion) -> str:
    hull_coords = {p.coords for p in region.hull}
    pareto_labels = {p.label for p in region.pareto}
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "label", "pi_b1", "pi_b2", "on_hull", "pareto"])
    for i, p in enumerate(region.vertices, start=1):
        writer.writerow([i, p.label, str(p.x), str(p.y),
                         str(p.coords in hull_coords).lower(), str(p.label in pareto_labels).lower()])
    return buf.getvalue()


def _g(v: float) -> str:
    return f"{v:.6g}"


def render_svg(region: PayoffRegion, width: int = 520, height: int = 520) -> str:
    margin = 60
    xs = [float(p.x) for p in region.vertices]
    ys = [float(p.y) for p in region.vertices]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    # pad degenerate extents so a single point still gets a frame
    if x1 - x0 == 0:
        x0, x1 = x0 - 1, x1 + 1
    if y1 - y0 == 0:
        y0, y1 = y0 - 1, y1 + 1
    padx, pady = 0.08 * (x1 - x0), 0.08 * (y1 - y0)
    x0, x1, y0, y1 = x0 - padx, x1 + padx, y0 - pady, y1 + pady

    def sx(v: float) -> float:
        return margin + (v - x0) / (x1 - x0) * (width - 2 * margin)

    def sy(v: float) -> float:
        return height - margin - (v - y0) / (y1 - y0) * (height - 2 * margin)

    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="12">',
        "<title>Feasible payoff region</title>",
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
    ]
    if x0 <= 0 <= x1:
        lines.append(f'<line x1="{_g(sx(0))}" y1="{_g(sy(y0))}" x2="{_g(sx(0))}" y2="{_g(sy(y1))}" '
                     'stroke="#bbbbbb" stroke-dasharray="4 3"/>')
    if y0 <= 0 <= y1:
        lines.append(f'<line x1="{_g(sx(x0))}" y1="{_g(sy(0))}" x2="{_g(sx(x1))}" y2="{_g(sy(0))}" '
                     'stroke="#bbbbbb" stroke-dasharray="4 3"/>')
    lines.append(f'<rect x="{margin}" y="{margin}" width="{width - 2 * margin}" '
                 f'height="{height - 2 * margin}" fill="none" stroke="black"/>')

    hull_pts = " ".join(f"{_g(sx(float(p.x)))},{_g(sy(float(p.y)))}" for p in region.hull)
    if len(region.hull) >= 3:
        lines.append(f'<polygon class="hull" points="{hull_pts}" fill="#cfe3f7" '
                     'fill-opacity="0.7" stroke="#1f4e79" stroke-width="1.5"/>')
    elif len(region.hull) == 2:
        lines.append(f'<polyline class="hull" points="{hull_pts}" fill="none" '
                     'stroke="#1f4e79" stroke-width="1.5"/>')

    pareto_labels = {p.label for p in region.pareto}
    for p in region.vertices:
        cx, cy = _g(sx(float(p.x))), _g(sy(float(p.y)))
        if p.label in pareto_labels:
            lines.append(f'<circle class="pareto" cx="{cx}" cy="{cy}" r="6" fill="#c0392b"/>')
        else:
            lines.append(f'<circle class="vertex" cx="{cx}" cy="{cy}" r="4" fill="#1f4e79"/>')
        lines.append(f'<text x="{_g(sx(float(p.x)) + 7)}" y="{_g(sy(float(p.y)) - 7)}">'
                     f'{p.label} ({p.x}, {p.y})</text>')

    lines.append(f'<text x="{width / 2:g}" y="{height - 20}" text-anchor="middle">'
                 "Π<tspan baseline-shift=\"sub\">B</tspan>"
                 "<tspan baseline-shift=\"super\">(1)</tspan></text>")
    lines.append(f'<text x="20" y="{height / 2:g}" text-anchor="middle" '
                 f'transform="rotate(-90 20 {height / 2:g})">'
                 "Π<tspan baseline-shift=\"sub\">B</tspan>"
                 "<tspan baseline-shift=\"super\">(2)</tspan></text>")
    for v, anchor_x in ((x0, margin), (x1, width - margin)):
        lines.append(f'<text x="{anchor_x}" y="{height - margin + 16}" text-anchor="middle">{_g(v)}</text>')
    for v, anchor_y in ((y0, height - margin), (y1, margin)):
        lines.append(f'<text x="{margin - 6}" y="{anchor_y}" text-anchor="end">{_g(v)}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_region(region: PayoffRegion, plot: str | Path | None = None,
                  table: str | Path | None = None) -> tuple[str, str]:
    """Render the SVG figure and CSV table, writing whichever paths are given."""
    svg, text = render_svg(region), render_table(region)
    if plot is not None:
        Path(plot).write_text(svg, encoding="utf-8")
    if table is not None:
        Path(table).write_text(text, encoding="utf-8")
    return svg, text
