"""JSON documents for datasets and agents.

Both formats carry ``"version": "1"``.  Menus are arrays of alternative
names in universe order, observations and operator rows follow the
canonical menu order, and :func:`dumps` sorts keys, so that serializing a
parsed canonical document reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from .core import (
    AgentSpec,
    ChoiceAuditError,
    ChoiceDataset,
    InterpretationOperator,
    Menu,
    ModelClass,
    StrictPreference,
    Universe,
    all_menus,
)

VERSION = "1"


class DocumentError(ChoiceAuditError):
    """A document is malformed; ``field`` names the offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _read(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise DocumentError(str(path), f"cannot read file ({exc.strerror})") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(str(path), f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def write(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")


# ---------------------------------------------------------------------------
# Field validation
# ---------------------------------------------------------------------------


def _require(obj: Any, key: str, where: str = "") -> Any:
    if not isinstance(obj, dict):
        raise DocumentError(where or "document", "expected a JSON object")
    if key not in obj:
        raise DocumentError(f"{where}.{key}" if where else key, "missing")
    return obj[key]


def _version(obj: Any) -> None:
    v = _require(obj, "version")
    if v != VERSION:
        raise DocumentError("version", f"unsupported format version {v!r}; expected {VERSION!r}")


def _universe(obj: Any) -> Universe:
    labels = _require(obj, "alternatives")
    if not isinstance(labels, list):
        raise DocumentError("alternatives", "expected an array of names")
    try:
        return Universe(tuple(labels))
    except ChoiceAuditError as exc:
        raise DocumentError("alternatives", str(exc)) from exc


def _name(u: Universe, value: Any, where: str) -> int:
    if not isinstance(value, str):
        raise DocumentError(where, f"expected an alternative name, got {value!r}")
    if value not in u.labels:
        raise DocumentError(where, f"{value!r} is not one of the alternatives")
    return u.index(value)


def _menu(u: Universe, value: Any, where: str) -> Menu:
    if not isinstance(value, list) or not value:
        raise DocumentError(where, "expected a nonempty array of names")
    m = 0
    for i, name in enumerate(value):
        bit = 1 << _name(u, name, f"{where}[{i}]")
        if m & bit:
            raise DocumentError(f"{where}[{i}]", f"{name!r} listed twice")
        m |= bit
    return m


def _menu_json(u: Universe, m: Menu) -> list[str]:
    return list(u.names(m))


# ---------------------------------------------------------------------------
# Datasets
# ---------------------------------------------------------------------------


def dataset_to_doc(d: ChoiceDataset) -> dict[str, Any]:
    u = d.universe
    return {
        "version": VERSION,
        "alternatives": list(u.labels),
        "observations": [{"menu": _menu_json(u, m), "choice": u.labels[x]} for m, x in d.items()],
    }


def dataset_from_doc(obj: Any) -> ChoiceDataset:
    _version(obj)
    u = _universe(obj)
    rows = _require(obj, "observations")
    if not isinstance(rows, list):
        raise DocumentError("observations", "expected an array")
    data: dict[Menu, int] = {}
    for i, row in enumerate(rows):
        where = f"observations[{i}]"
        m = _menu(u, _require(row, "menu", where), f"{where}.menu")
        x = _name(u, _require(row, "choice", where), f"{where}.choice")
        if m in data:
            raise DocumentError(f"{where}.menu", f"duplicate observation for {u.fmt(m)}")
        data[m] = x
    return ChoiceDataset(u, data)


def load_dataset(path: str | Path) -> ChoiceDataset:
    return dataset_from_doc(_read(path))


def save_dataset(d: ChoiceDataset, path: str | Path) -> None:
    write(path, dataset_to_doc(d))


# ---------------------------------------------------------------------------
# Agents
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AgentDocument:
    """A parsed agent: its universe, the agent itself, and an optional scope note."""

    universe: Universe
    agent: AgentSpec
    scope: str | None = None


def agent_to_doc(agent: AgentSpec, universe: Universe, scope: str | None = None) -> dict[str, Any]:
    if universe.size != agent.size:
        raise ChoiceAuditError("agent and universe sizes differ")
    doc: dict[str, Any] = {
        "version": VERSION,
        "alternatives": list(universe.labels),
        "preference": [universe.labels[i] for i in agent.preference.ranking],
        "operator": [
            {"menu": _menu_json(universe, m), "image": _menu_json(universe, img)}
            for m, img in agent.operator.items()
        ],
        "class": agent.tag.value,
    }
    if scope is not None:
        doc["scope"] = scope
    return doc


def agent_from_doc(obj: Any) -> AgentDocument:
    _version(obj)
    u = _universe(obj)
    ranking = _require(obj, "preference")
    if not isinstance(ranking, list):
        raise DocumentError("preference", "expected an array of names, best first")
    order = [_name(u, v, f"preference[{i}]") for i, v in enumerate(ranking)]
    if sorted(order) != list(range(u.size)):
        raise DocumentError("preference", "must list every alternative exactly once")
    rows = _require(obj, "operator")
    if not isinstance(rows, list):
        raise DocumentError("operator", "expected an array of {menu, image} rows")
    table: dict[Menu, Menu] = {}
    for i, row in enumerate(rows):
        where = f"operator[{i}]"
        m = _menu(u, _require(row, "menu", where), f"{where}.menu")
        if m in table:
            raise DocumentError(f"{where}.menu", f"duplicate row for {u.fmt(m)}")
        table[m] = _menu(u, _require(row, "image", where), f"{where}.image")
    missing = [m for m in all_menus(u) if m not in table]
    if missing:
        raise DocumentError("operator", f"no row for {u.fmt(missing[0])}; the table must cover every menu")
    tag = obj.get("class", ModelClass.UNCLASSIFIED.value)
    try:
        tag = ModelClass(tag)
    except ValueError:
        raise DocumentError("class", f"unknown model class {tag!r}") from None
    scope = obj.get("scope")
    if scope is not None and not isinstance(scope, str):
        raise DocumentError("scope", "expected a string")
    try:
        agent = AgentSpec(
            StrictPreference.from_ranking(order),
            InterpretationOperator(u.size, tuple(table[m] for m in all_menus(u))),
            tag,
        )
    except ChoiceAuditError as exc:
        raise DocumentError("class", str(exc)) from exc
    return AgentDocument(u, agent, scope)


def load_agent(path: str | Path) -> AgentDocument:
    return agent_from_doc(_read(path))


def save_agent(agent: AgentSpec, universe: Universe, path: str | Path, scope: str | None = None) -> None:
    write(path, agent_to_doc(agent, universe, scope))
