"""Alternatives, menus, choice data, preferences and interpretation operators.

Menus are plain ``int`` bit masks over the universe indices: bit ``i`` set
means alternative ``i`` is on the menu.  Ascending mask order is the
canonical menu order everywhere in the package; since a subset always has a
smaller mask than its strict supersets, it is also a linear extension of
set inclusion.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple, Sequence

Menu = int

MAX_UNIVERSE = 24
_ENV_CAP = "CHOICE_AUDIT_MAX_N"


class ChoiceAuditError(ValueError):
    """Base class for invalid input to the toolkit."""


class SizeCapError(ChoiceAuditError):
    """Raised when a universe is larger than an enumeration allows."""


def size_cap(default: int) -> int:
    """Return ``default`` lowered by ``CHOICE_AUDIT_MAX_N`` when that is set.

    The environment variable can only tighten a cap, never raise it.
    """
    raw = os.environ.get(_ENV_CAP)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ChoiceAuditError(f"{_ENV_CAP} must be an integer, got {raw!r}") from exc
    return min(default, value)


def check_size(n: int, cap: int, what: str) -> None:
    cap = size_cap(cap)
    if n > cap:
        raise SizeCapError(f"{what} supports at most {cap} alternatives, got {n}")


# ---------------------------------------------------------------------------
# Bit-mask helpers
# ---------------------------------------------------------------------------


def members(m: Menu) -> tuple[int, ...]:
    """Indices contained in ``m``, ascending."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return tuple(out)


def is_subset(a: Menu, b: Menu) -> bool:
    return a & ~b == 0


def is_proper_subset(a: Menu, b: Menu) -> bool:
    return a != b and a & ~b == 0


def singleton(i: int) -> Menu:
    return 1 << i


def proper_subsets(m: Menu) -> list[Menu]:
    """All nonempty strict subsets of ``m`` in canonical order."""
    out = []
    sub = (m - 1) & m
    while sub:
        out.append(sub)
        sub = (sub - 1) & m
    out.reverse()
    return out


def subsets(m: Menu) -> list[Menu]:
    """All nonempty subsets of ``m`` (including ``m``) in canonical order."""
    return proper_subsets(m) + [m] if m else []


# ---------------------------------------------------------------------------
# Universe
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Universe:
    """A finite, ordered set of named alternatives.

    The position of a label is its index; index order doubles as the
    canonical tie-break order.
    """

    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ChoiceAuditError("a universe needs at least one alternative")
        if len(labels) > MAX_UNIVERSE:
            raise SizeCapError(
                f"universe supports at most {MAX_UNIVERSE} alternatives, got {len(labels)}"
            )
        for label in labels:
            if not isinstance(label, str) or not label:
                raise ChoiceAuditError(f"alternative labels must be nonempty strings, got {label!r}")
        if len(set(labels)) != len(labels):
            dupes = sorted({lab for lab in labels if labels.count(lab) > 1})
            raise ChoiceAuditError(f"duplicate alternative labels: {dupes}")

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> Menu:
        return (1 << len(self.labels)) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ChoiceAuditError(f"unknown alternative {label!r}") from None

    def menu(self, names: Iterable[str]) -> Menu:
        """Mask of the named alternatives; raises on an empty selection."""
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        if not m:
            raise ChoiceAuditError("a menu must be nonempty")
        return m

    def names(self, m: Menu) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in members(m))

    def fmt(self, m: Menu) -> str:
        return "{" + ",".join(self.names(m)) + "}"


def make_universe(labels: Sequence[str]) -> Universe:
    return Universe(tuple(labels))


def default_universe(n: int) -> Universe:
    """Universe with the labels x, y, z, w for n <= 4, else a0, a1, ..."""
    if n <= 4:
        return Universe(tuple("xyzw"[:n]))
    return Universe(tuple(f"a{i}" for i in range(n)))


def all_menus(u: Universe | int) -> range:
    """Every nonempty menu in canonical ascending-mask order."""
    n = u if isinstance(u, int) else u.size
    return range(1, 1 << n)


# ---------------------------------------------------------------------------
# Choice data
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ChoiceDataset:
    """Observed recommendations: a partial map from menus to alternatives.

    A recommendation need not belong to its menu.
    """

    universe: Universe
    observations: Mapping[Menu, int]

    def __post_init__(self) -> None:
        full = self.universe.full
        n = self.universe.size
        obs = {}
        for m, x in sorted(dict(self.observations).items()):
            if not isinstance(m, int) or m <= 0 or m & ~full:
                raise ChoiceAuditError(f"menu mask {m!r} is not a nonempty menu of the universe")
            if not isinstance(x, int) or not 0 <= x < n:
                raise ChoiceAuditError(f"choice {x!r} at menu {m} is not an alternative")
            obs[m] = x
        object.__setattr__(self, "observations", MappingProxyType(obs))

    @classmethod
    def from_names(cls, universe: Universe, data: Mapping[Iterable[str] | str, str]) -> ChoiceDataset:
        """Build from ``{("x", "y"): "x", ...}``; a bare string key is one alternative per character."""
        obs: dict[Menu, int] = {}
        for menu_names, choice in data.items():
            m = universe.menu(menu_names)
            if m in obs:
                raise ChoiceAuditError(f"menu {universe.fmt(m)} observed twice")
            obs[m] = universe.index(choice)
        return cls(universe, obs)

    @classmethod
    def from_table(cls, universe: Universe, choices: Sequence[int]) -> ChoiceDataset:
        """Total dataset from ``choices[m - 1]`` for every menu ``m``."""
        if len(choices) != universe.full:
            raise ChoiceAuditError("a total table needs one choice per nonempty menu")
        return cls(universe, {m: c for m, c in enumerate(choices, start=1)})

    def __getitem__(self, m: Menu) -> int:
        return self.observations[m]

    def __contains__(self, m: object) -> bool:
        return m in self.observations

    def __len__(self) -> int:
        return len(self.observations)

    def __iter__(self) -> Iterator[Menu]:
        return iter(self.observations)

    def get(self, m: Menu, default: int | None = None) -> int | None:
        return self.observations.get(m, default)

    def items(self):
        return self.observations.items()

    @property
    def menus(self) -> tuple[Menu, ...]:
        return tuple(self.observations)

    @property
    def is_total(self) -> bool:
        return len(self.observations) == self.universe.full

    def table(self) -> tuple[int, ...]:
        """Choices in canonical menu order; only defined for total data."""
        if not self.is_total:
            raise ChoiceAuditError("dataset is partial")
        return tuple(self.observations.values())

    def restrict(self, menus: Iterable[Menu]) -> ChoiceDataset:
        keep = set(menus)
        return ChoiceDataset(self.universe, {m: x for m, x in self.items() if m in keep})

    def _key(self):
        return (self.universe, tuple(self.observations.items()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChoiceDataset):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        body = ", ".join(
            f"{self.universe.fmt(m)}: {self.universe.labels[x]}" for m, x in self.items()
        )
        return f"ChoiceDataset({body})"


# ---------------------------------------------------------------------------
# Preferences
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StrictPreference:
    """A strict binary relation on alternative indices.

    ``(a, b)`` in ``pairs`` reads "a is preferred to b".  Reflexive pairs are
    rejected; all other properties are computed from the pairs on demand.
    """

    size: int
    pairs: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        pairs = frozenset((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        for a, b in pairs:
            if a == b:
                raise ChoiceAuditError(f"strict preference cannot relate {a} to itself")
            if not (0 <= a < self.size and 0 <= b < self.size):
                raise ChoiceAuditError(f"pair {(a, b)} outside a universe of size {self.size}")

    @classmethod
    def from_ranking(cls, ranking: Sequence[int]) -> StrictPreference:
        """Linear order from a best-to-worst sequence of indices."""
        ranking = tuple(ranking)
        n = len(ranking)
        if sorted(ranking) != list(range(n)):
            raise ChoiceAuditError(f"ranking {ranking} is not a permutation of 0..{n - 1}")
        pairs = frozenset(
            (ranking[i], ranking[j]) for i in range(n) for j in range(i + 1, n)
        )
        return cls(n, pairs)

    def prefers(self, a: int, b: int) -> bool:
        return (a, b) in self.pairs

    def __contains__(self, pair: object) -> bool:
        return pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    @cached_property
    def successors(self) -> tuple[frozenset[int], ...]:
        out: list[set[int]] = [set() for _ in range(self.size)]
        for a, b in self.pairs:
            out[a].add(b)
        return tuple(frozenset(s) for s in out)

    @cached_property
    def asymmetric(self) -> bool:
        return all((b, a) not in self.pairs for a, b in self.pairs)

    @cached_property
    def transitive(self) -> bool:
        succ = self.successors
        return all(c != a and c in succ[a] for a, b in self.pairs for c in succ[b])

    @cached_property
    def complete(self) -> bool:
        n = self.size
        return all(
            (a, b) in self.pairs or (b, a) in self.pairs
            for a in range(n)
            for b in range(a + 1, n)
        )

    @cached_property
    def acyclic(self) -> bool:
        return find_cycle(self) is None

    @property
    def is_linear(self) -> bool:
        return self.asymmetric and self.transitive and self.complete

    @cached_property
    def ranking(self) -> tuple[int, ...]:
        """Best-to-worst order; only for linear orders."""
        if not self.is_linear:
            raise ChoiceAuditError("relation is not a strict linear order")
        return tuple(sorted(range(self.size), key=lambda a: -len(self.successors[a])))

    @cached_property
    def rank(self) -> tuple[int, ...]:
        """``rank[a]`` is the position of ``a`` in ``ranking`` (0 = best)."""
        out = [0] * self.size
        for pos, a in enumerate(self.ranking):
            out[a] = pos
        return tuple(out)

    def best(self, m: Menu) -> int:
        """The maximum of a nonempty menu under a linear order."""
        rank = self.rank
        return min(members(m), key=rank.__getitem__)

    def sorted_pairs(self) -> list[tuple[int, int]]:
        return sorted(self.pairs)

    def fmt(self, universe: Universe) -> str:
        labels = universe.labels
        return ", ".join(f"{labels[a]}>{labels[b]}" for a, b in self.sorted_pairs())


def find_cycle(rel: StrictPreference) -> tuple[int, ...] | None:
    """A shortest directed cycle through the smallest possible start vertex.

    Returns ``(a0, a1, ..., ak)`` with ``a0 > a1 > ... > ak > a0`` in the
    relation, or None when the relation is acyclic.
    """
    succ = rel.successors
    for start in range(rel.size):
        parent = {start: None}
        frontier = [start]
        while frontier:
            nxt = []
            for a in frontier:
                for b in sorted(succ[a]):
                    if b == start:
                        path = [a]
                        while parent[path[-1]] is not None:
                            path.append(parent[path[-1]])
                        return tuple(reversed(path))
                    if b not in parent and b > start:
                        parent[b] = a
                        nxt.append(b)
            frontier = nxt
    return None


# ---------------------------------------------------------------------------
# Interpretation operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterpretationOperator:
    """A total map from nonempty menus to nonempty menus.

    ``table[m - 1]`` is the image of menu ``m``.  Calling the operator on the
    empty mask returns the empty mask, which is the convention used by the
    complement-based predicates.
    """

    size: int
    table: tuple[int, ...]

    def __post_init__(self) -> None:
        table = tuple(int(v) for v in self.table)
        object.__setattr__(self, "table", table)
        full = (1 << self.size) - 1
        if len(table) != full:
            raise ChoiceAuditError(
                f"operator table needs {full} entries for {self.size} alternatives, got {len(table)}"
            )
        for m, img in enumerate(table, start=1):
            if img <= 0 or img & ~full:
                raise ChoiceAuditError(f"image of menu {m} must be a nonempty menu, got {img}")

    def __call__(self, m: Menu) -> Menu:
        return self.table[m - 1] if m else 0

    @property
    def full(self) -> Menu:
        return (1 << self.size) - 1

    @classmethod
    def identity(cls, n: int) -> InterpretationOperator:
        return cls(n, tuple(range(1, 1 << n)))

    @classmethod
    def constant(cls, n: int, image: Menu) -> InterpretationOperator:
        return cls(n, (image,) * ((1 << n) - 1))

    @classmethod
    def from_singletons(cls, n: int, images: Sequence[Menu]) -> InterpretationOperator:
        """Union extension: I(S) is the union of the images of S's members."""
        table = []
        for m in range(1, 1 << n):
            img = 0
            for i in members(m):
                img |= images[i]
            table.append(img)
        return cls(n, tuple(table))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> InterpretationOperator:
        """Relabelling operator induced elementwise by ``perm``."""
        return cls.from_singletons(len(perm), [1 << p for p in perm])

    @classmethod
    def from_mapping(cls, n: int, mapping: Mapping[Menu, Menu]) -> InterpretationOperator:
        missing = [m for m in range(1, 1 << n) if m not in mapping]
        if missing:
            raise ChoiceAuditError(f"operator table is missing {len(missing)} menus, first {missing[0]}")
        return cls(n, tuple(mapping[m] for m in range(1, 1 << n)))

    def items(self) -> Iterator[tuple[Menu, Menu]]:
        return iter(enumerate(self.table, start=1))

    def fmt(self, universe: Universe) -> str:
        return ", ".join(f"I{universe.fmt(m)}={universe.fmt(img)}" for m, img in self.items())


class ModelClass(str, enum.Enum):
    AIC = "AIC"
    RAIC = "RAIC"
    GRAIC = "GRAIC"
    GAIC = "GAIC"
    GMAIC = "GMAIC"
    UNCLASSIFIED = "UNCLASSIFIED"


@dataclass(frozen=True)
class AgentSpec:
    """A linear preference plus an interpretation operator that together generate choices."""

    preference: StrictPreference
    operator: InterpretationOperator
    tag: ModelClass = ModelClass.UNCLASSIFIED

    def __post_init__(self) -> None:
        object.__setattr__(self, "tag", ModelClass(self.tag))
        if self.preference.size != self.operator.size:
            raise ChoiceAuditError("preference and operator live on different universes")
        if not self.preference.is_linear:
            raise ChoiceAuditError("an agent's preference must be a strict linear order")
        if self.tag is not ModelClass.UNCLASSIFIED:
            from .operators import operator_in_class

            if not operator_in_class(self.operator, self.tag):
                raise ChoiceAuditError(f"operator does not have the properties required by {self.tag.value}")

    @property
    def size(self) -> int:
        return self.operator.size


# ---------------------------------------------------------------------------
# Worked examples
# ---------------------------------------------------------------------------


class Fixture(NamedTuple):
    dataset: ChoiceDataset
    agent: AgentSpec | None


def fixture(name: str) -> Fixture:
    """The two worked examples on {x, y, z}.

    EXAMPLE1 is partial (only the three pairs and the full menu are
    observed).  EXAMPLE2 is total and comes with the relabelling agent
    x > y > z, I({x})={y}, I({y})={z}, I({z})={x} that generates it.
    """
    u = make_universe(["x", "y", "z"])
    key = name.upper()
    if key == "EXAMPLE1":
        d = ChoiceDataset.from_names(u, {"xy": "x", "yz": "y", "xz": "x", "xyz": "x"})
        return Fixture(d, None)
    if key == "EXAMPLE2":
        d = ChoiceDataset.from_names(
            u,
            {"x": "y", "y": "z", "z": "x", "xy": "y", "yz": "x", "xz": "x", "xyz": "x"},
        )
        agent = AgentSpec(
            StrictPreference.from_ranking((0, 1, 2)),
            InterpretationOperator.from_permutation((1, 2, 0)),
            ModelClass.RAIC,
        )
        return Fixture(d, agent)
    raise ChoiceAuditError(f"unknown fixture {name!r}; expected EXAMPLE1 or EXAMPLE2")
