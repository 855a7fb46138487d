"""Revealed preference, revealed consideration, identification and alignment."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .core import (
    ChoiceAuditError,
    ChoiceDataset,
    InterpretationOperator,
    Menu,
    ModelClass,
    StrictPreference,
    Universe,
    all_menus,
    members,
)


@dataclass(frozen=True)
class RevealedRelation:
    one_step: StrictPreference
    closure: StrictPreference
    provenance: Mapping[tuple[int, int], list[tuple[Menu, Menu]]]


def revealed_one_step(d: ChoiceDataset) -> RevealedRelation:
    """``a > b`` whenever c(T) = a and c(S) = b != a for observed S strictly inside T.

    Each edge keeps the (S, T) pairs that generate it, sorted canonically.
    """
    prov: dict[tuple[int, int], list[tuple[Menu, Menu]]] = {}
    items = list(d.items())
    for s, b in items:
        for t, a in items:
            if a != b and s != t and s & ~t == 0:
                prov.setdefault((a, b), []).append((s, t))
    prov = {edge: sorted(v) for edge, v in sorted(prov.items())}
    one_step = StrictPreference(d.universe.size, frozenset(prov))
    return RevealedRelation(one_step, transitive_closure(one_step), prov)


def transitive_closure(r: StrictPreference) -> StrictPreference:
    """Smallest transitive superset of ``r`` with reflexive pairs dropped.

    A cycle in ``r`` would put (a, a) in the closure; such pairs are left
    out and the cycle shows up as ``acyclic == False`` on the result.
    """
    n = r.size
    reach = [0] * n
    for a, b in r.pairs:
        reach[a] |= 1 << b
    # Warshall over bit rows
    for k in range(n):
        bit = 1 << k
        row_k = reach[k]
        for i in range(n):
            if reach[i] & bit:
                reach[i] |= row_k
    pairs = frozenset((a, b) for a in range(n) for b in members(reach[a]) if a != b)
    return StrictPreference(n, pairs)


@dataclass(frozen=True)
class RevealedConsideration:
    """Per menu, the alternatives every representation must consider (possibly none)."""

    universe: Universe
    table: Mapping[Menu, Menu]

    def __getitem__(self, m: Menu) -> Menu:
        return self.table[m]

    def names(self, m: Menu) -> tuple[str, ...]:
        return self.universe.names(self.table[m])


def revealed_consideration(d: ChoiceDataset) -> RevealedConsideration:
    """x is considered at T when c(S) = x for some observed S inside T (S = T allowed)."""
    table = {}
    items = list(d.items())
    for t in all_menus(d.universe):
        img = 0
        for s, x in items:
            if s & ~t == 0:
                img |= 1 << x
        table[t] = img
    return RevealedConsideration(d.universe, table)


# ---------------------------------------------------------------------------
# Identification
# ---------------------------------------------------------------------------


class MissingObservations(ChoiceAuditError):
    """A class-specific identification needs menus that were not observed."""

    def __init__(self, message: str, menus: list[Menu]):
        super().__init__(message)
        self.menus = menus


@dataclass(frozen=True)
class Identification:
    """What the data pins down for one model class.

    ``operator`` maps each menu to its identified image, or None where the
    menu is UNOBSERVED.  For classes that only bound the interpretation,
    ``lower``/``upper`` hold the bounds and ``operator`` is empty.
    ``preference`` is None when it is UNIDENTIFIED.
    """

    model_class: ModelClass
    universe: Universe
    preference: StrictPreference | None
    operator: dict[Menu, Menu | None] = field(default_factory=dict)
    lower: dict[Menu, Menu] = field(default_factory=dict)
    upper: dict[Menu, Menu] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)

    @property
    def preference_identified(self) -> bool:
        return self.preference is not None

    def as_operator(self) -> InterpretationOperator | None:
        if not self.operator or any(v is None for v in self.operator.values()):
            return None
        return InterpretationOperator.from_mapping(self.universe.size, self.operator)


def _singletons_missing(d: ChoiceDataset) -> list[Menu]:
    return [1 << i for i in range(d.universe.size) if (1 << i) not in d]


def _class_warning(d: ChoiceDataset, cls: ModelClass) -> list[str]:
    from .axioms import audit

    report = audit(d)
    if not report.memberships[cls].member:
        return [f"audit does not establish {cls.value} for this dataset"]
    return []


def identify(d: ChoiceDataset, model_class: ModelClass | str) -> Identification:
    """Class-specific identification of the interpretation and the preference.

    AIC: the preference is the transitive closure of the one-step relation
    and the operator is the revealed consideration map (both are partial
    identifications).  RAIC: I(T) is the image of T under w -> c({w}) and
    the preference is the one-step relation.  GRAIC/GMAIC: the identity
    operator with x > y whenever c(T) = x and y is also on T.  GAIC: only
    bounds {c(T)} <= I(T) <= T; the preference is unidentified.
    """
    cls = ModelClass(model_class)
    if cls is ModelClass.UNCLASSIFIED:
        raise ChoiceAuditError("identification needs a model class")
    u = d.universe
    n = u.size
    warnings = _class_warning(d, cls)
    if cls is ModelClass.AIC:
        rel = revealed_one_step(d)
        cons = revealed_consideration(d)
        op = {m: (img or None) for m, img in cons.table.items()}
        return Identification(cls, u, rel.closure, op, warnings=warnings)
    if cls is ModelClass.RAIC:
        missing = _singletons_missing(d)
        if missing:
            names = ", ".join(u.fmt(m) for m in missing)
            raise MissingObservations(f"RAIC identification needs every singleton menu; missing {names}", missing)
        image = [1 << d[1 << i] for i in range(n)]
        op = {}
        for m in all_menus(u):
            img = 0
            for i in members(m):
                img |= image[i]
            op[m] = img
        return Identification(cls, u, revealed_one_step(d).one_step, op, warnings=warnings)
    if cls in (ModelClass.GRAIC, ModelClass.GMAIC):
        pairs = set()
        for t, x in d.items():
            for y in members(t):
                if y != x:
                    pairs.add((x, y))
        op = {m: m for m in all_menus(u)}
        return Identification(cls, u, StrictPreference(n, frozenset(pairs)), op, warnings=warnings)
    if cls is ModelClass.GAIC:
        lower = {m: (1 << d[m]) if m in d else 0 for m in all_menus(u)}
        upper = {m: m for m in all_menus(u)}
        return Identification(cls, u, None, {}, lower, upper, warnings)
    raise ChoiceAuditError(f"cannot identify class {cls.value}")


# ---------------------------------------------------------------------------
# Alignment
# ---------------------------------------------------------------------------


class Alignment(str, enum.Enum):
    ALIGNED = "ALIGNED"
    MISALIGNED = "MISALIGNED"
    UNDETERMINED = "UNDETERMINED"


@dataclass(frozen=True)
class AlignmentReport:
    """Per pair of alternatives, how the revealed preference relates to the DM's.

    Pairs are keyed in the revealed orientation ``(a, b)`` with a revealed
    above b; undetermined pairs are keyed in index order.
    """

    universe: Universe
    pairs: dict[tuple[int, int], Alignment]

    @property
    def counts(self) -> dict[Alignment, int]:
        out = {a: 0 for a in Alignment}
        for v in self.pairs.values():
            out[v] += 1
        return out

    def of(self, a: int, b: int) -> Alignment:
        return self.pairs[(a, b)] if (a, b) in self.pairs else self.pairs[(b, a)]


def alignment_report(d: ChoiceDataset, dm: StrictPreference) -> AlignmentReport:
    if not dm.is_linear or dm.size != d.universe.size:
        raise ChoiceAuditError("the decision maker's preference must be a strict linear order on the universe")
    closure = revealed_one_step(d).closure
    out = {}
    n = d.universe.size
    for a in range(n):
        for b in range(a + 1, n):
            ab, ba = closure.prefers(a, b), closure.prefers(b, a)
            if ab and ba:
                out[(a, b)] = Alignment.MISALIGNED
            elif ab or ba:
                hi, lo = (a, b) if ab else (b, a)
                out[(hi, lo)] = Alignment.ALIGNED if dm.prefers(hi, lo) else Alignment.MISALIGNED
            else:
                out[(a, b)] = Alignment.UNDETERMINED
    return AlignmentReport(d.universe, out)
