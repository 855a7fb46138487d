"""Property predicates for interpretation operators.

Every predicate returns a :class:`PropertyResult` whose witness is the
lexicographically smallest violating instance in canonical menu order.

Complement convention: the operator is extended by I(empty) = empty.  For
the predicates that quantify over complements (consistency,
negation-elimination, grounded consistency) this means instances whose
complement is empty are skipped; for intersection closure it means pairs
with an empty intersection hold trivially; for double intersection closure
it means disjoint menus must have disjoint images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .core import (
    ChoiceAuditError,
    InterpretationOperator,
    Menu,
    ModelClass,
)


class PropertyResult(NamedTuple):
    holds: bool
    witness: tuple[Menu, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


_OK = PropertyResult(True, None)


def _pairs(I: InterpretationOperator, bad: Callable[[Menu, Menu], bool]) -> PropertyResult:
    menus = range(1, I.full + 1)
    for s in menus:
        for t in menus:
            if bad(s, t):
                return PropertyResult(False, (s, t))
    return _OK


def _singles(I: InterpretationOperator, bad: Callable[[Menu], bool]) -> PropertyResult:
    for s in range(1, I.full + 1):
        if bad(s):
            return PropertyResult(False, (s,))
    return _OK


def check_monotone(I: InterpretationOperator) -> PropertyResult:
    """S subset of T implies I(S) subset of I(T)."""
    t_ = I.table

    def bad(s, t):
        return s & ~t == 0 and t_[s - 1] & ~t_[t - 1] != 0

    return _pairs(I, bad)


def check_union_closed(I: InterpretationOperator) -> PropertyResult:
    t_ = I.table
    return _pairs(I, lambda s, t: (t_[s - 1] | t_[t - 1]) & ~t_[(s | t) - 1] != 0)


def check_intersection_closed(I: InterpretationOperator) -> PropertyResult:
    t_ = I.table
    return _pairs(
        I, lambda s, t: (s & t) != 0 and t_[(s & t) - 1] & ~(t_[s - 1] & t_[t - 1]) != 0
    )


class ClosureProperties(NamedTuple):
    union_closed: PropertyResult
    intersection_closed: PropertyResult


def check_closure_properties(I: InterpretationOperator) -> ClosureProperties:
    return ClosureProperties(check_union_closed(I), check_intersection_closed(I))


def check_double_monotonicity(I: InterpretationOperator) -> PropertyResult:
    """I(S) subset of I(T) exactly when S subset of T."""
    t_ = I.table

    def bad(s, t):
        return (s & ~t == 0) != (t_[s - 1] & ~t_[t - 1] == 0)

    return _pairs(I, bad)


def check_consistent(I: InterpretationOperator) -> PropertyResult:
    full = I.full
    t_ = I.table
    return _singles(I, lambda s: s != full and t_[s - 1] & t_[(full ^ s) - 1] != 0)


def check_double_intersection_closed(I: InterpretationOperator) -> PropertyResult:
    return _pairs(I, lambda s, t: I(s & t) != I(s) & I(t))


def check_double_union_closed(I: InterpretationOperator) -> PropertyResult:
    t_ = I.table
    return _pairs(I, lambda s, t: t_[(s | t) - 1] != t_[s - 1] | t_[t - 1])


def check_negation_eliminating(I: InterpretationOperator) -> PropertyResult:
    full = I.full
    t_ = I.table
    return _singles(I, lambda s: s != full and t_[(full ^ s) - 1] != full & ~t_[s - 1])


def check_injective(I: InterpretationOperator) -> PropertyResult:
    seen: dict[Menu, Menu] = {}
    for s, img in I.items():
        if img in seen:
            return PropertyResult(False, (seen[img], s))
        seen[img] = s
    return _OK


def check_surjective(I: InterpretationOperator) -> PropertyResult:
    images = set(I.table)
    for t in range(1, I.full + 1):
        if t not in images:
            return PropertyResult(False, (t,))
    return _OK


def singleton_permutation(I: InterpretationOperator) -> tuple[int, ...] | None:
    """The bijection x -> y with I({x}) = {y}, if the singleton images define one."""
    perm = []
    for i in range(I.size):
        img = I(1 << i)
        if img & (img - 1):
            return None
        perm.append(img.bit_length() - 1)
    if len(set(perm)) != len(perm):
        return None
    return tuple(perm)


def check_relabelling(I: InterpretationOperator) -> PropertyResult:
    """Singleton images form a permutation and I distributes over unions."""
    singles = [I(1 << i) for i in range(I.size)]
    for i, img in enumerate(singles):
        if img & (img - 1):
            return PropertyResult(False, (1 << i,))
    for i in range(I.size):
        for j in range(i + 1, I.size):
            if singles[i] == singles[j]:
                return PropertyResult(False, (1 << i, 1 << j))
    return check_double_union_closed(I)


def check_idempotence(I: InterpretationOperator) -> PropertyResult:
    t_ = I.table
    return _singles(I, lambda s: t_[t_[s - 1] - 1] != t_[s - 1])


def check_singleton_idempotent(I: InterpretationOperator) -> PropertyResult:
    t_ = I.table
    for i in range(I.size):
        s = 1 << i
        if t_[t_[s - 1] - 1] != t_[s - 1]:
            return PropertyResult(False, (s,))
    return _OK


def check_grounded_consistent(I: InterpretationOperator) -> PropertyResult:
    """For S subset of T with a nonempty complement of T, I(S) and I(T^c) are disjoint."""
    full = I.full
    t_ = I.table

    def bad(s, t):
        return s & ~t == 0 and t != full and t_[s - 1] & t_[(full ^ t) - 1] != 0

    return _pairs(I, bad)


class GroundedProperties(NamedTuple):
    grounded_consistent: PropertyResult
    singleton_idempotent: PropertyResult

    @property
    def holds(self) -> bool:
        return self.grounded_consistent.holds and self.singleton_idempotent.holds


def check_grounded(I: InterpretationOperator) -> GroundedProperties:
    return GroundedProperties(check_grounded_consistent(I), check_singleton_idempotent(I))


def check_identity(I: InterpretationOperator) -> PropertyResult:
    return _singles(I, lambda s: I(s) != s)


BATTERY = (
    "consistent",
    "double_intersection_closed",
    "doubly_monotone",
    "negation_eliminating",
    "injective",
    "surjective",
    "relabelling",
)

_CHECKS: dict[str, Callable[[InterpretationOperator], PropertyResult]] = {
    "monotone": check_monotone,
    "union_closed": check_union_closed,
    "intersection_closed": check_intersection_closed,
    "doubly_monotone": check_double_monotonicity,
    "double_intersection_closed": check_double_intersection_closed,
    "double_union_closed": check_double_union_closed,
    "consistent": check_consistent,
    "negation_eliminating": check_negation_eliminating,
    "injective": check_injective,
    "surjective": check_surjective,
    "relabelling": check_relabelling,
    "idempotent": check_idempotence,
    "singleton_idempotent": check_singleton_idempotent,
    "grounded_consistent": check_grounded_consistent,
    "identity": check_identity,
}

FLAGS = tuple(_CHECKS)


@dataclass(frozen=True)
class OperatorPropertyReport:
    """Flags, witnesses for the failed flags, and the relabelling permutation."""

    flags: dict[str, bool]
    witnesses: dict[str, tuple[Menu, ...]] = field(default_factory=dict)
    permutation: tuple[int, ...] | None = None

    def __getitem__(self, name: str) -> bool:
        return self.flags[name]

    @property
    def battery_agrees(self) -> bool:
        values = {self.flags[name] for name in BATTERY if name in self.flags}
        return len(values) == 1


def _report(I: InterpretationOperator, names) -> OperatorPropertyReport:
    flags = {}
    witnesses = {}
    for name in names:
        res = _CHECKS[name](I)
        flags[name] = res.holds
        if not res.holds:
            witnesses[name] = res.witness
    perm = singleton_permutation(I) if flags.get("relabelling") else None
    return OperatorPropertyReport(flags, witnesses, perm)


def consistency_battery(I: InterpretationOperator) -> OperatorPropertyReport:
    """The seven logical-consistency properties, each evaluated independently.

    Raises ChoiceAuditError when ``I`` is not monotone, since the seven are
    only claimed equivalent for monotone operators.
    """
    mono = check_monotone(I)
    if not mono:
        raise ChoiceAuditError(f"consistency battery needs a monotone operator; violated at {mono.witness}")
    return _report(I, BATTERY)


def classify_operator(I: InterpretationOperator) -> OperatorPropertyReport:
    return _report(I, FLAGS)


def operator_in_class(I: InterpretationOperator, cls: ModelClass | str) -> bool:
    """Whether ``I`` may serve as the interpretation of the given model class."""
    cls = ModelClass(cls)
    if cls is ModelClass.AIC:
        return check_monotone(I).holds
    if cls is ModelClass.RAIC:
        return check_double_monotonicity(I).holds
    if cls is ModelClass.GRAIC:
        return check_double_monotonicity(I).holds and check_idempotence(I).holds
    if cls is ModelClass.GAIC:
        return check_grounded(I).holds
    if cls is ModelClass.GMAIC:
        return check_grounded(I).holds and check_monotone(I).holds
    return True

