"""Forward model and constructive rationalizations.

Each ``construct_*`` returns a verified :class:`Representation`, or None
when the data violates the axioms of that class.  :func:`rationalize` wraps
them and also reports why a construction was refused.
"""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass, field

from .axioms import RAIC_DISCREPANCY, WARP_DISCREPANCY, audit, describe_witness, check_groundedness, check_nsc, check_warp
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
    default_universe,
    members,
)
from .revealed import MissingObservations, revealed_one_step


class ConstructionError(RuntimeError):
    """A constructed agent failed its own verification."""


class Scope(str, enum.Enum):
    TOTAL = "TOTAL"
    OBSERVED_ONLY = "OBSERVED-ONLY"


@dataclass(frozen=True)
class Representation:
    agent: AgentSpec
    scope: Scope
    verification: dict[Menu, bool]

    @property
    def passed(self) -> bool:
        return all(self.verification.values())

    @property
    def failures(self) -> list[Menu]:
        return [m for m, ok in self.verification.items() if not ok]


def evaluate_agent(a: AgentSpec, m: Menu) -> int:
    """The preference-maximal alternative of the interpreted menu."""
    return a.preference.best(a.operator(m))


def derive_choice_function(a: AgentSpec, universe: Universe | None = None) -> ChoiceDataset:
    u = universe if universe is not None else default_universe(a.size)
    return ChoiceDataset(u, {m: evaluate_agent(a, m) for m in all_menus(u)})


def verify_representation(a: AgentSpec, d: ChoiceDataset) -> Representation:
    if a.size != d.universe.size:
        raise ChoiceAuditError("agent and dataset live on different universes")
    checks = {m: evaluate_agent(a, m) == x for m, x in d.items()}
    return Representation(a, Scope.TOTAL if d.is_total else Scope.OBSERVED_ONLY, checks)


def linear_extension(rel: StrictPreference) -> StrictPreference:
    """Topological order of an acyclic relation, smallest index first among ties."""
    n = rel.size
    indeg = [0] * n
    for _, b in rel.pairs:
        indeg[b] += 1
    heap = [a for a in range(n) if indeg[a] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        a = heapq.heappop(heap)
        order.append(a)
        for b in rel.successors[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                heapq.heappush(heap, b)
    if len(order) != n:
        raise ChoiceAuditError("relation has a cycle; no linear extension exists")
    return StrictPreference.from_ranking(order)


def _verified(agent: AgentSpec, d: ChoiceDataset) -> Representation:
    rep = verify_representation(agent, d)
    if not rep.passed:
        bad = ", ".join(d.universe.fmt(m) for m in rep.failures)
        raise ConstructionError(f"constructed {agent.tag.value} agent fails on {bad}")
    return rep


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------


def aic_operator(d: ChoiceDataset, pref: StrictPreference) -> InterpretationOperator:
    """Consideration built from observed sub-menus, completed to a total monotone map.

    Base image: I(T) = {c(S) : S observed, S inside T}.  Every alternative s
    whose singleton is unobserved contributes h(s) to each menu containing
    it, where h(s) is the worst choice (under ``pref``) made at an observed
    menu containing s, or s itself when there is none.  Adding h(s) never
    changes a maximum on an observed menu, keeps the map monotone, and makes
    every image nonempty.  On total data the completion is empty.
    """
    n = d.universe.size
    rank = pref.rank
    fill = [0] * n
    for s in range(n):
        if (1 << s) in d:
            continue
        worst = None
        for m, x in d.items():
            if (m >> s) & 1 and (worst is None or rank[x] > rank[worst]):
                worst = x
        fill[s] = 1 << (s if worst is None else worst)
    table = []
    items = list(d.items())
    for t in all_menus(n):
        img = 0
        for m, x in items:
            if m & ~t == 0:
                img |= 1 << x
        for s in members(t):
            img |= fill[s]
        table.append(img)
    return InterpretationOperator(n, tuple(table))


def construct_aic(d: ChoiceDataset) -> Representation | None:
    if not check_nsc(d).holds:
        return None
    pref = linear_extension(revealed_one_step(d).one_step)
    agent = AgentSpec(pref, aic_operator(d, pref), ModelClass.AIC)
    return _verified(agent, d)


def _require(d: ChoiceDataset, menus: list[Menu], what: str) -> None:
    missing = [m for m in menus if m not in d]
    if missing:
        names = ", ".join(d.universe.fmt(m) for m in missing)
        raise MissingObservations(f"{what} needs observations at {names}", missing)


def construct_raic(d: ChoiceDataset) -> Representation | None:
    """Relabelling from singleton choices; order from the binary choices between pre-images.

    Refuses (None) unless the audit establishes RAIC, which includes the
    singleton-image condition on top of NBC, CCI and ND.
    """
    n = d.universe.size
    singles = [1 << i for i in range(n)]
    pairs = [(1 << i) | (1 << j) for i in range(n) for j in range(i + 1, n)]
    _require(d, singles + pairs, "RAIC construction")
    report = audit(d)
    if not report.memberships[ModelClass.RAIC].member:
        return None
    perm = [d[1 << w] for w in range(n)]
    pre = {x: w for w, x in enumerate(perm)}
    prefs = set()
    for a in range(n):
        for b in range(a + 1, n):
            c = d[(1 << pre[a]) | (1 << pre[b])]
            if c == a:
                prefs.add((a, b))
            elif c == b:
                prefs.add((b, a))
    rel = StrictPreference(n, frozenset(prefs))
    if not rel.is_linear:
        return None
    agent = AgentSpec(rel, InterpretationOperator.from_permutation(perm), ModelClass.RAIC)
    return _verified(agent, d)


def _rational_gate(d: ChoiceDataset, what: str) -> bool:
    if not d.is_total:
        missing = [m for m in all_menus(d.universe) if m not in d]
        raise MissingObservations(f"{what} needs a total dataset", missing)
    return check_warp(d).holds and check_groundedness(d).holds


def construct_graic(d: ChoiceDataset) -> Representation | None:
    """Identity interpretation; x above y exactly when x is chosen from {x, y}."""
    if not _rational_gate(d, "GRAIC construction"):
        return None
    n = d.universe.size
    pairs = set()
    for a in range(n):
        for b in range(a + 1, n):
            c = d[(1 << a) | (1 << b)]
            pairs.add((a, b) if c == a else (b, a))
    agent = AgentSpec(
        StrictPreference(n, frozenset(pairs)), InterpretationOperator.identity(n), ModelClass.GRAIC
    )
    return _verified(agent, d)


def construct_gaic(d: ChoiceDataset) -> Representation | None:
    """I(T) = {c(T)} on observed menus and T elsewhere, with the index order as preference."""
    if not check_groundedness(d).holds:
        return None
    n = d.universe.size
    table = tuple((1 << d[m]) if m in d else m for m in all_menus(n))
    agent = AgentSpec(
        StrictPreference.from_ranking(range(n)), InterpretationOperator(n, table), ModelClass.GAIC
    )
    return _verified(agent, d)


def construct_gmaic(d: ChoiceDataset) -> Representation | None:
    """Identity interpretation with the revealed order, extended by index."""
    if not _rational_gate(d, "GMAIC construction"):
        return None
    n = d.universe.size
    pref = linear_extension(revealed_one_step(d).one_step)
    agent = AgentSpec(pref, InterpretationOperator.identity(n), ModelClass.GMAIC)
    return _verified(agent, d)


CONSTRUCTORS = {
    ModelClass.AIC: construct_aic,
    ModelClass.RAIC: construct_raic,
    ModelClass.GRAIC: construct_graic,
    ModelClass.GAIC: construct_gaic,
    ModelClass.GMAIC: construct_gmaic,
}


@dataclass(frozen=True)
class Rationalization:
    model_class: ModelClass
    representation: Representation | None
    reasons: list[str] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.representation is not None


def rationalize(d: ChoiceDataset, model_class: ModelClass | str) -> Rationalization:
    """Run the class constructor; on failure, explain which axioms block it."""
    cls = ModelClass(model_class)
    if cls not in CONSTRUCTORS:
        raise ChoiceAuditError(f"no constructor for class {cls.value}")
    rep = CONSTRUCTORS[cls](d)
    report = audit(d)
    reasons = []
    if cls in (ModelClass.GRAIC, ModelClass.GMAIC) and WARP_DISCREPANCY in report.notes:
        reasons.append(WARP_DISCREPANCY)
    if cls is ModelClass.RAIC and RAIC_DISCREPANCY in report.notes:
        reasons.append(RAIC_DISCREPANCY)
    if rep is None:
        for ax, v in {**report.verdicts, **report.supplementary}.items():
            if not v.holds and _relevant(cls, ax.value):
                reasons.append(f"{ax.value} fails: {describe_witness(d.universe, v.witness)}")
        if not reasons:
            reasons.append("construction did not produce a linear order")
    elif rep.scope is Scope.OBSERVED_ONLY:
        reasons.append("partial dataset: representation verified on observed menus only")
    return Rationalization(cls, rep, reasons)


_RELEVANT = {
    ModelClass.AIC: {"NSC"},
    ModelClass.RAIC: {"NBC", "CCI", "ND", "SINGLETON_IMAGE"},
    ModelClass.GRAIC: {"WARP", "GROUNDEDNESS"},
    ModelClass.GAIC: {"GROUNDEDNESS"},
    ModelClass.GMAIC: {"WARP", "GROUNDEDNESS"},
}


def _relevant(cls: ModelClass, axiom: str) -> bool:
    return axiom in _RELEVANT[cls]
