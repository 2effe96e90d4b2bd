"""Instance documents, attack specifications and report serialization.

Instance files are YAML (JSON also parses) with an ``assets`` list of
records ``{name, reward_defender, cost_defender, reward_attacker,
cost_attacker}`` and an optional ``attack`` list. Numbers may be integers,
decimal strings ("0.5") or rational strings ("-39/14").
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any, Sequence

import yaml

from .errors import GameError, ParseError
from .model import AssetParams, AttackVector, DefenseVector, GameInstance, as_rational

FIELDS = ("reward_defender", "cost_defender", "reward_attacker", "cost_attacker")
BUNDLED = ("paper_example",)


@dataclass(frozen=True)
class InstanceDocument:
    instance: GameInstance
    attack: AttackVector | None = None
    name: str | None = None


def _number(value: Any, where: str) -> Fraction:
    if isinstance(value, bool) or value is None:
        raise ParseError(f"{where}: expected a number, got {value!r}")
    try:
        return as_rational(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: malformed number {value!r}") from exc


def parse_document(text: str, anchor: str | None = None) -> InstanceDocument:
    try:
        data = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ParseError(f"not a valid YAML/JSON document: {exc}") from exc
    if not isinstance(data, dict) or not isinstance(data.get("assets"), list):
        raise ParseError("document must be a mapping with an 'assets' list")
    assets = []
    for i, rec in enumerate(data["assets"], start=1):
        if not isinstance(rec, dict):
            raise ParseError(f"assets[{i}]: expected a mapping")
        missing = [f for f in FIELDS if f not in rec]
        if missing:
            raise ParseError(f"assets[{i}]: missing field(s) {', '.join(missing)}")
        name = str(rec.get("name", f"T{i}"))
        values = [_number(rec[f], f"assets[{i}].{f}") for f in FIELDS]
        assets.append(AssetParams(name, *values))
    if len(assets) < 2:
        raise ParseError(f"an instance needs at least 2 assets, got {len(assets)}")
    try:
        instance = GameInstance(tuple(assets))
    except GameError as exc:
        raise ParseError(str(exc)) from exc

    attack = None
    if data.get("attack") is not None:
        raw = data["attack"]
        if not isinstance(raw, list):
            raise ParseError("attack must be a list of numbers")
        entries = [_number(x, f"attack[{i}]") for i, x in enumerate(raw, start=1)]
        if len(entries) != len(instance):
            raise ParseError(f"attack has {len(entries)} entries for {len(instance)} assets")
        try:
            attack = AttackVector(tuple(entries))
        except GameError as exc:
            raise ParseError(f"attack: {exc}") from exc

    if anchor is not None:
        k = next((i for i, a in enumerate(instance.assets) if a.name == anchor), None)
        if k is None:
            raise ParseError(f"--anchor: no asset named {anchor!r}")
        instance = instance.with_anchor(anchor)
        if attack is not None:
            attack = AttackVector(attack.entries[k + 1:] + attack.entries[: k + 1])
    name = data.get("name")
    return InstanceDocument(instance, attack, None if name is None else str(name))


def parse_instance(text: str, anchor: str | None = None) -> GameInstance:
    return parse_document(text, anchor).instance


def bundled_text(name: str = "paper_example") -> str:
    return resources.files("stackgame").joinpath("data", f"{name}.yaml").read_text(encoding="utf-8")


def load_document(source: str | Path, anchor: str | None = None) -> InstanceDocument:
    """Read a bundled instance by name, or a file by path."""
    if str(source) in BUNDLED:
        return parse_document(bundled_text(str(source)), anchor)
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read instance file {source}: {exc}") from exc
    return parse_document(text, anchor)


def example_instance() -> GameInstance:
    return parse_instance(bundled_text())


_VERTEX = re.compile(r"^e(\d+)$")


def parse_attack(spec: str, size: int) -> AttackVector:
    """``e<k>`` (1-based vertex), ``uniform``, or comma-separated rationals."""
    spec = spec.strip()
    m = _VERTEX.match(spec)
    try:
        if m:
            return AttackVector.vertex(size, int(m.group(1)))
        if spec == "uniform":
            return AttackVector.uniform(size)
        entries = [_number(x, f"attack[{i}]") for i, x in enumerate(spec.split(","), start=1)]
        if len(entries) != size:
            raise ParseError(f"attack has {len(entries)} entries for {size} assets")
        return AttackVector(tuple(entries))
    except (GameError, IndexError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"attack {spec!r}: {exc}") from exc


def parse_attack_file(text: str, size: int) -> list[AttackVector]:
    """One attack per non-blank line, or a YAML list of specs / number lists."""
    stripped = text.strip()
    if stripped.startswith("["):
        try:
            rows = yaml.safe_load(stripped)
        except yaml.YAMLError as exc:
            raise ParseError(f"attack file: {exc}") from exc
        out = []
        for row in rows:
            if isinstance(row, list):
                out.append(parse_attack(",".join(str(x) for x in row), size))
            else:
                out.append(parse_attack(str(row), size))
        return out
    return [parse_attack(line, size) for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")]


# ---- serialization -------------------------------------------------------

def q(x: Fraction) -> str:
    return str(x)


def decimal(x: Fraction) -> str:
    return f"{float(x):.6g}"


def rational(x: Fraction) -> dict:
    return {"exact": q(x), "decimal": decimal(x)}


def vector(xs: Sequence[Fraction]) -> dict:
    return {"exact": [q(x) for x in xs], "decimal": [decimal(x) for x in xs]}


def instance_document(instance: GameInstance, name: str | None = None,
                      attack: AttackVector | None = None) -> dict:
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["assets"] = [
        {"name": a.name, **{f: q(getattr(a, f)) for f in FIELDS}} for a in instance.assets
    ]
    if attack is not None:
        doc["attack"] = [q(x) for x in attack]
    return doc


def dump(doc: Any) -> str:
    return yaml.safe_dump(doc, sort_keys=False, allow_unicode=True, default_flow_style=None, width=100)


def defense_repr(defense: DefenseVector) -> dict:
    return vector(defense.entries)
