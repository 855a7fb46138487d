"""Exhaustive desk-scale enumeration and brute-force theorem checks.

The representation side of every check is computed by enumerating all
(linear order, class operator) agents once and indexing the total choice
functions they generate, so "is there a representation of c" becomes a
dictionary lookup and the intersections over all representations of c are
accumulated on the way.  Only strict linear orders are searched.

Reports are plain data with a canonical JSON form (sorted keys, canonical
menu order, no timings) so that runs are byte-comparable.
"""

from __future__ import annotations

import enum
import json
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import islice, permutations, product
from math import factorial
from typing import Any, Iterator

from . import axioms
from .core import (
    AgentSpec,
    ChoiceAuditError,
    ChoiceDataset,
    InterpretationOperator,
    Menu,
    ModelClass,
    StrictPreference,
    Universe,
    check_size,
    default_universe,
    members,
)
from .operators import (
    BATTERY,
    check_double_monotonicity,
    check_grounded,
    check_idempotence,
    check_intersection_closed,
    check_monotone,
    check_union_closed,
    consistency_battery,
)
from .revealed import revealed_consideration, revealed_one_step

log = logging.getLogger(__name__)


class OperatorClass(str, enum.Enum):
    ALL = "ALL"
    MONOTONE = "MONOTONE"
    DOUBLY_MONOTONE = "DOUBLY_MONOTONE"
    MONOTONE_IDEMPOTENT = "MONOTONE_IDEMPOTENT"
    DOUBLY_MONOTONE_IDEMPOTENT = "DOUBLY_MONOTONE_IDEMPOTENT"
    GROUNDED = "GROUNDED"
    GROUNDED_MONOTONE = "GROUNDED_MONOTONE"


OPERATOR_CAPS = {
    OperatorClass.ALL: 3,
    OperatorClass.MONOTONE: 4,
    OperatorClass.DOUBLY_MONOTONE: 4,
    OperatorClass.MONOTONE_IDEMPOTENT: 3,
    OperatorClass.DOUBLY_MONOTONE_IDEMPOTENT: 4,
    OperatorClass.GROUNDED: 3,
    OperatorClass.GROUNDED_MONOTONE: 3,
}

CLASS_OPERATORS = {
    ModelClass.AIC: OperatorClass.MONOTONE,
    ModelClass.RAIC: OperatorClass.DOUBLY_MONOTONE,
    ModelClass.GRAIC: OperatorClass.DOUBLY_MONOTONE_IDEMPOTENT,
    ModelClass.GAIC: OperatorClass.GROUNDED,
    ModelClass.GMAIC: OperatorClass.GROUNDED_MONOTONE,
}

ORDER_CAP = 8
CHOICE_CAP = 3
REPRESENTATION_CAP = 3
SIMULATE_CAP = 4


# ---------------------------------------------------------------------------
# Enumerations
# ---------------------------------------------------------------------------


def enumerate_linear_orders(n: int) -> list[StrictPreference]:
    """All n! strict linear orders, rankings in lexicographic permutation order."""
    check_size(n, ORDER_CAP, "linear order enumeration")
    return [StrictPreference.from_ranking(p) for p in permutations(range(n))]


def _monotone_tables(n: int) -> Iterator[tuple[int, ...]]:
    """Depth-first over menus in ascending mask order.

    A menu's image must contain the images of the menus it covers (the menu
    minus one element), which are all assigned earlier; covering relations
    generate inclusion, so every emitted table is monotone and every
    monotone table is emitted, in lexicographic order.
    """
    full = (1 << n) - 1
    table = [0] * (full + 1)

    def rec(m):
        if m > full:
            yield tuple(table[1:])
            return
        need = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            need |= table[m ^ low]
        for img in range(1, full + 1):
            if img & need == need:
                table[m] = img
                yield from rec(m + 1)

    yield from rec(1)


def _grounded_candidates(n: int) -> Iterator[tuple[int, ...]]:
    # every image inside its own menu; grounded interpretations are among these
    full = (1 << n) - 1
    options = []
    for m in range(1, full + 1):
        options.append([s for s in range(1, m + 1) if s & ~m == 0])
    return product(*options)


def _relabelling_tables(n: int) -> list[tuple[int, ...]]:
    tables = []
    for perm in permutations(range(n)):
        op = InterpretationOperator.from_permutation(perm)
        if not check_double_monotonicity(op):
            raise AssertionError(f"relabelling {perm} is not doubly monotone")
        tables.append(op.table)
    return sorted(tables)


def _operator_tables(n: int, cls: OperatorClass) -> Iterator[tuple[int, ...]]:
    full = (1 << n) - 1
    if cls is OperatorClass.ALL:
        return product(range(1, full + 1), repeat=full)
    if cls is OperatorClass.MONOTONE:
        return _monotone_tables(n)
    if cls is OperatorClass.DOUBLY_MONOTONE:
        return iter(_relabelling_tables(n))
    if cls is OperatorClass.MONOTONE_IDEMPOTENT:
        return (t for t in _monotone_tables(n) if check_idempotence(InterpretationOperator(n, t)))
    if cls is OperatorClass.DOUBLY_MONOTONE_IDEMPOTENT:
        return (t for t in _relabelling_tables(n) if check_idempotence(InterpretationOperator(n, t)))
    if cls is OperatorClass.GROUNDED:
        return (t for t in _grounded_candidates(n) if check_grounded(InterpretationOperator(n, t)).holds)
    if cls is OperatorClass.GROUNDED_MONOTONE:
        return (
            t
            for t in _grounded_candidates(n)
            if check_grounded(InterpretationOperator(n, t)).holds
            and check_monotone(InterpretationOperator(n, t))
        )
    raise ChoiceAuditError(f"unknown operator class {cls}")


def enumerate_operators(n: int, cls: OperatorClass | str) -> Iterator[InterpretationOperator]:
    """Stream every operator table of the class, in lexicographic table order."""
    cls = OperatorClass(cls)
    check_size(n, OPERATOR_CAPS[cls], f"{cls.value} operator enumeration")
    return (InterpretationOperator(n, t) for t in _operator_tables(n, cls))


@lru_cache(maxsize=None)
def operator_tables(n: int, cls: OperatorClass) -> tuple[tuple[int, ...], ...]:
    """Materialised, cached tables for the small classes used by the checks."""
    check_size(n, min(OPERATOR_CAPS[cls], REPRESENTATION_CAP), f"{cls.value} operator table cache")
    return tuple(_operator_tables(n, cls))


def enumerate_choice_functions(n: int) -> Iterator[ChoiceDataset]:
    """All n ** (2**n - 1) total choice functions in canonical order."""
    check_size(n, CHOICE_CAP, "choice function enumeration")
    u = default_universe(n)
    return (ChoiceDataset.from_table(u, t) for t in _choice_tables(n))


def _choice_tables(n: int, start: int = 0, stop: int | None = None) -> Iterator[tuple[int, ...]]:
    return islice(product(range(n), repeat=(1 << n) - 1), start, stop)


# ---------------------------------------------------------------------------
# Representation index
# ---------------------------------------------------------------------------


@dataclass
class _Reps:
    count: int
    pref: frozenset[tuple[int, int]]
    images: list[int]


def _best_tables(n: int) -> list[tuple[tuple[int, ...], list[int]]]:
    out = []
    for ranking in permutations(range(n)):
        rank = [0] * n
        for pos, a in enumerate(ranking):
            rank[a] = pos
        best = [-1] + [min(members(m), key=rank.__getitem__) for m in range(1, 1 << n)]
        out.append((ranking, best))
    return out


@lru_cache(maxsize=None)
def representation_index(n: int, model_class: ModelClass) -> dict[tuple[int, ...], _Reps]:
    """Every choice table generated by some agent of the class, with intersections.

    For each generated table: the number of (order, operator) agents that
    produce it, the pairs common to all their orders, and per menu the
    alternatives common to all their interpretations.
    """
    check_size(n, REPRESENTATION_CAP, "representation search")
    ops = operator_tables(n, CLASS_OPERATORS[ModelClass(model_class)])
    index: dict[tuple[int, ...], _Reps] = {}
    for ranking, best in _best_tables(n):
        pairs = frozenset((ranking[i], ranking[j]) for i in range(n) for j in range(i + 1, n))
        for table in ops:
            key = tuple(best[img] for img in table)
            rec = index.get(key)
            if rec is None:
                index[key] = _Reps(1, pairs, list(table))
            else:
                rec.count += 1
                rec.pref = rec.pref & pairs
                rec.images = [a & b for a, b in zip(rec.images, table)]
    return index


@dataclass(frozen=True)
class OracleIdentification:
    preference_intersection: StrictPreference
    consideration_intersection: dict[Menu, Menu]
    representation_count: int


def identification_oracle(d: ChoiceDataset, model_class: ModelClass | str) -> OracleIdentification:
    """Exact intersections over all representations of a total dataset in the class."""
    n = d.universe.size
    check_size(n, REPRESENTATION_CAP, "identification oracle")
    if not d.is_total:
        raise ChoiceAuditError("identification oracle needs a total dataset")
    rec = representation_index(n, ModelClass(model_class)).get(d.table())
    if rec is None:
        return OracleIdentification(StrictPreference(n), {m: 0 for m in range(1, 1 << n)}, 0)
    images = {m: img for m, img in enumerate(rec.images, start=1)}
    return OracleIdentification(StrictPreference(n, rec.pref), images, rec.count)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


class Theorem(str, enum.Enum):
    THM1 = "THM1"
    THM2 = "THM2"
    THM3 = "THM3"
    THM4 = "THM4"
    THM5 = "THM5"
    PROP1 = "PROP1"
    PROP2 = "PROP2"
    PROP4 = "PROP4"
    LOGICAL_CONSISTENCY = "LOGICAL_CONSISTENCY"


STATEMENTS = {
    Theorem.THM1: "AIC <=> NSC",
    Theorem.THM2: "RAIC <=> NBC and CCI and ND",
    Theorem.THM3: "GRAIC <=> WARP",
    Theorem.THM4: "GAIC <=> Groundedness",
    Theorem.THM5: "GMAIC <=> WARP",
    Theorem.PROP1: "for AIC data, the preference pairs shared by all AIC representations = transitive closure of the revealed relation",
    Theorem.PROP2: "for AIC data, the interpreted alternatives shared by all AIC representations at T = revealed consideration at T",
    Theorem.PROP4: "monotone <=> union closed <=> intersection closed",
    Theorem.LOGICAL_CONSISTENCY: "for monotone operators: consistent <=> double intersection closed <=> doubly monotone <=> negation eliminating <=> injective <=> surjective <=> relabelling",
}

REPAIRED = {
    Theorem.THM2: "RAIC <=> NBC and CCI and ND and every c(T) is c({w}) for some w in T",
    Theorem.THM3: "GRAIC <=> WARP and Groundedness",
    Theorem.THM5: "GMAIC <=> WARP and Groundedness",
}

THEOREM_CLASS = {
    Theorem.THM1: ModelClass.AIC,
    Theorem.THM2: ModelClass.RAIC,
    Theorem.THM3: ModelClass.GRAIC,
    Theorem.THM4: ModelClass.GAIC,
    Theorem.THM5: ModelClass.GMAIC,
    Theorem.PROP1: ModelClass.AIC,
    Theorem.PROP2: ModelClass.AIC,
}

THEOREM_CAPS = {
    Theorem.PROP4: 3,
    Theorem.LOGICAL_CONSISTENCY: 3,
}

CONVENTION = (
    "operators are extended by I(empty) = empty: complement-based instances with an "
    "empty complement are skipped, disjoint menus need disjoint images under double "
    "intersection closure; WARP ranges over distinct alternatives"
)


@dataclass
class CharacterizationReport:
    theorem: str
    n: int
    statement: str
    counts: dict[str, int]
    equivalence_holds: bool
    counterexamples: list[dict[str, Any]]
    assumptions: list[str] = field(default_factory=list)
    repaired: dict[str, Any] | None = None
    datasets: list[dict[str, Any]] | None = None
    extra: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _dataset_json(u: Universe, table) -> dict[str, str]:
    return {u.fmt(m): u.labels[x] for m, x in enumerate(table, start=1)}


def _pairs_json(u: Universe, pairs) -> list[str]:
    return [f"{u.labels[a]}>{u.labels[b]}" for a, b in sorted(pairs)]


def _operator_json(u: Universe, table) -> dict[str, str]:
    return {u.fmt(m): u.fmt(img) for m, img in enumerate(table, start=1)}


def _chunks(total: int, workers: int) -> list[tuple[int, int]]:
    pieces = max(1, workers * 4)
    size = max(1, -(-total // pieces))
    return [(lo, min(total, lo + size)) for lo in range(0, total, size)]


def _run(fn, args: list[tuple], workers: int) -> list:
    if workers <= 1 or len(args) <= 1:
        return [fn(*a) for a in args]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, *zip(*args)))


# workers ---------------------------------------------------------------------

ROW_AXIOMS = (*axioms.CHECKS, axioms.Axiom.SINGLETON_IMAGE)
_ROW_CHECKS = (*axioms.CHECKS.values(), axioms.check_singleton_image)


def _axiom_rows(n: int, start: int, stop: int) -> list[tuple[bool, ...]]:
    """One flag per entry of ROW_AXIOMS for each dataset in the index range."""
    u = default_universe(n)
    rows = []
    for table in _choice_tables(n, start, stop):
        d = ChoiceDataset.from_table(u, table)
        rows.append(tuple(check(d).holds for check in _ROW_CHECKS))
    return rows


def _prop4_chunk(n: int, start: int, stop: int) -> tuple[int, int, list]:
    full = (1 << n) - 1
    monotone = 0
    checked = 0
    bad = []
    for i, table in enumerate(islice(product(range(1, full + 1), repeat=full), start, stop), start):
        op = InterpretationOperator(n, table)
        flags = (
            check_monotone(op).holds,
            check_union_closed(op).holds,
            check_intersection_closed(op).holds,
        )
        checked += 1
        monotone += flags[0]
        if len(set(flags)) != 1:
            bad.append((i, table, flags))
    return checked, monotone, bad


# checks ----------------------------------------------------------------------


_AXIOM_POS = {ax: i for i, ax in enumerate(ROW_AXIOMS)}

_A = axioms.Axiom
LITERAL_AXIOMS = {
    Theorem.THM1: (_A.NSC,),
    Theorem.THM2: (_A.NBC, _A.CCI, _A.ND),
    Theorem.THM3: (_A.WARP,),
    Theorem.THM4: (_A.GROUNDEDNESS,),
    Theorem.THM5: (_A.WARP,),
}
REPAIRED_AXIOMS = {
    Theorem.THM2: (_A.NBC, _A.CCI, _A.ND, _A.SINGLETON_IMAGE),
    Theorem.THM3: (_A.WARP, _A.GROUNDEDNESS),
    Theorem.THM5: (_A.WARP, _A.GROUNDEDNESS),
}


def _holds(row: tuple[bool, ...], names) -> bool:
    return all(row[_AXIOM_POS[a]] for a in names)


def _characterization(theorem: Theorem, n: int, workers: int) -> CharacterizationReport:
    u = default_universe(n)
    total = n ** ((1 << n) - 1)
    rows = [r for chunk in _run(_axiom_rows, [(n, a, b) for a, b in _chunks(total, workers)], workers) for r in chunk]
    index = representation_index(n, THEOREM_CLASS[theorem])
    ops = operator_tables(n, CLASS_OPERATORS[THEOREM_CLASS[theorem]])
    literal = LITERAL_AXIOMS[theorem]
    repaired = REPAIRED_AXIOMS.get(theorem)
    shown = tuple(dict.fromkeys(literal + (repaired or ())))

    counterexamples = []
    repaired_cx = []
    per_dataset = []
    axiom_pos = rep_pos = repaired_pos = 0
    for i, (table, row) in enumerate(zip(_choice_tables(n), rows)):
        ax = _holds(row, literal)
        rep = table in index
        axiom_pos += ax
        rep_pos += rep
        if ax != rep:
            counterexamples.append(
                {"index": i, "dataset": _dataset_json(u, table), "axiom_side": ax, "representation_side": rep}
            )
        if repaired:
            fixed = _holds(row, repaired)
            repaired_pos += fixed
            if fixed != rep:
                repaired_cx.append(
                    {"index": i, "dataset": _dataset_json(u, table), "axiom_side": fixed, "representation_side": rep}
                )
            per_dataset.append(
                {
                    "index": i,
                    "axioms": {a.value: row[_AXIOM_POS[a]] for a in shown},
                    "representation": rep,
                    "literal_agrees": ax == rep,
                    "repaired_agrees": fixed == rep,
                }
            )
    counts = {
        "datasets": total,
        "axiom_side_positive": axiom_pos,
        "representation_side_positive": rep_pos,
        "orders": factorial(n),
        "class_operators": len(ops),
    }
    report = CharacterizationReport(
        theorem=theorem.value,
        n=n,
        statement=STATEMENTS[theorem],
        counts=counts,
        equivalence_holds=not counterexamples,
        counterexamples=counterexamples,
        assumptions=[
            "representation search over strict linear orders x "
            f"{CLASS_OPERATORS[THEOREM_CLASS[theorem]].value} operators",
            CONVENTION,
        ],
    )
    if repaired:
        report.repaired = {
            "statement": REPAIRED[theorem],
            "counts": {**counts, "axiom_side_positive": repaired_pos},
            "equivalence_holds": not repaired_cx,
            "counterexamples": repaired_cx,
        }
        report.datasets = per_dataset
    return report


def _revealed_props(theorem: Theorem, n: int, workers: int) -> CharacterizationReport:
    u = default_universe(n)
    total = n ** ((1 << n) - 1)
    rows = [r for chunk in _run(_axiom_rows, [(n, a, b) for a, b in _chunks(total, workers)], workers) for r in chunk]
    index = representation_index(n, ModelClass.AIC)
    nsc_pos = _AXIOM_POS[_A.NSC]
    checked = 0
    counterexamples = []
    for i, (table, row) in enumerate(zip(_choice_tables(n), rows)):
        if not row[nsc_pos]:
            continue
        checked += 1
        d = ChoiceDataset.from_table(u, table)
        rec = index.get(table)
        entry = {"index": i, "dataset": _dataset_json(u, table)}
        if rec is None:
            counterexamples.append({**entry, "problem": "no AIC representation"})
            continue
        if theorem is Theorem.PROP1:
            revealed = revealed_one_step(d).closure.pairs
            if revealed != rec.pref:
                counterexamples.append(
                    {**entry, "revealed": _pairs_json(u, revealed), "intersection": _pairs_json(u, rec.pref)}
                )
        else:
            cons = revealed_consideration(d)
            diff = {
                u.fmt(m): {"revealed": u.fmt(cons[m]), "intersection": u.fmt(img)}
                for m, img in enumerate(rec.images, start=1)
                if cons[m] != img
            }
            if diff:
                counterexamples.append({**entry, "menus": diff})
    return CharacterizationReport(
        theorem=theorem.value,
        n=n,
        statement=STATEMENTS[theorem],
        counts={"datasets": total, "nsc_datasets": checked, "representable_datasets": len(index)},
        equivalence_holds=not counterexamples,
        counterexamples=counterexamples,
        assumptions=["representations range over strict linear orders x monotone operators", CONVENTION],
    )


def _prop4(n: int, workers: int) -> CharacterizationReport:
    u = default_universe(n)
    full = (1 << n) - 1
    total = full ** full
    results = _run(_prop4_chunk, [(n, a, b) for a, b in _chunks(total, workers)], workers)
    checked = sum(r[0] for r in results)
    monotone = sum(r[1] for r in results)
    bad = [b for r in results for b in r[2]]
    counterexamples = [
        {
            "index": i,
            "operator": _operator_json(u, table),
            "monotone": f[0],
            "union_closed": f[1],
            "intersection_closed": f[2],
        }
        for i, table, f in bad
    ]
    return CharacterizationReport(
        theorem=Theorem.PROP4.value,
        n=n,
        statement=STATEMENTS[Theorem.PROP4],
        counts={"operators": checked, "monotone": monotone},
        equivalence_holds=not counterexamples,
        counterexamples=counterexamples,
        assumptions=["intersection closure skips pairs with an empty intersection (I(empty) = empty)"],
    )


def _double_intersection_skip_disjoint(op: InterpretationOperator) -> bool:
    full = op.full
    return all(
        op(s & t) == op(s) & op(t) for s in range(1, full + 1) for t in range(1, full + 1) if s & t
    )


def _logical_consistency(n: int) -> CharacterizationReport:
    u = default_universe(n)
    ops = operator_tables(n, OperatorClass.MONOTONE)
    disagreements = []
    all_true = 0
    relabellings = 0
    alt_disagreements = 0
    for i, table in enumerate(ops):
        op = InterpretationOperator(n, table)
        rep = consistency_battery(op)
        flags = [rep.flags[name] for name in BATTERY]
        all_true += all(flags)
        relabellings += rep.flags["relabelling"]
        if not rep.battery_agrees:
            disagreements.append({"index": i, "operator": _operator_json(u, table), "flags": dict(rep.flags)})
        alt = flags.copy()
        alt[BATTERY.index("double_intersection_closed")] = _double_intersection_skip_disjoint(op)
        alt_disagreements += len(set(alt)) != 1
    report = CharacterizationReport(
        theorem=Theorem.LOGICAL_CONSISTENCY.value,
        n=n,
        statement=STATEMENTS[Theorem.LOGICAL_CONSISTENCY],
        counts={
            "monotone_operators": len(ops),
            "all_seven_true": all_true,
            "relabellings": relabellings,
            "expected_relabellings": factorial(n),
        },
        equivalence_holds=not disagreements and relabellings == factorial(n),
        counterexamples=disagreements,
        assumptions=[CONVENTION],
    )
    report.extra["alternative_conventions"] = {
        "double_intersection_skips_disjoint_pairs": {"disagreeing_operators": alt_disagreements}
    }
    return report


def verify_characterization(theorem: Theorem | str, n: int, workers: int = 1) -> CharacterizationReport:
    """Brute-force check of one characterization or identification result at size n.

    ``workers`` > 1 fans the enumeration out over processes in index chunks;
    results are merged in index order, so the report does not depend on it.
    """
    theorem = Theorem(theorem.upper() if isinstance(theorem, str) else theorem)
    if n < 1:
        raise ChoiceAuditError("n must be positive")
    check_size(n, THEOREM_CAPS.get(theorem, REPRESENTATION_CAP), f"{theorem.value} verification")
    log.info("verifying %s at n=%d with %d worker(s)", theorem.value, n, workers)
    if theorem in (Theorem.THM1, Theorem.THM2, Theorem.THM3, Theorem.THM4, Theorem.THM5):
        return _characterization(theorem, n, workers)
    if theorem in (Theorem.PROP1, Theorem.PROP2):
        return _revealed_props(theorem, n, workers)
    if theorem is Theorem.PROP4:
        return _prop4(n, workers)
    return _logical_consistency(n)


# ---------------------------------------------------------------------------
# Simulation
# ---------------------------------------------------------------------------


def _random_monotone(n: int, rng: random.Random) -> tuple[int, ...]:
    full = (1 << n) - 1
    table = [0] * (full + 1)
    for m in range(1, full + 1):
        need = 0
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            need |= table[m ^ low]
        img = need | (rng.getrandbits(n) & full)
        table[m] = img or (1 << rng.randrange(n))
    return tuple(table[1:])


def _random_grounded(n: int, rng: random.Random) -> tuple[int, ...]:
    table = []
    for m in range(1, 1 << n):
        opts = [s for s in range(1, m + 1) if s & ~m == 0]
        table.append(rng.choice(opts))
    return tuple(table)


def simulate(seed: int, model_class: ModelClass | str, n: int) -> tuple[AgentSpec, ChoiceDataset]:
    """Deterministically sample an agent of the class and the total data it generates.

    Up to n = 3 the operator is drawn uniformly from the class enumeration;
    at n = 4 monotone and grounded operators are drawn by a randomized
    construction instead (not uniform).
    """
    cls = ModelClass(model_class)
    if cls not in CLASS_OPERATORS:
        raise ChoiceAuditError(f"cannot simulate class {cls.value}")
    check_size(n, SIMULATE_CAP, "simulation")
    if n < 1:
        raise ChoiceAuditError("n must be positive")
    rng = random.Random(seed)
    ranking = list(range(n))
    rng.shuffle(ranking)
    opclass = CLASS_OPERATORS[cls]
    if n <= REPRESENTATION_CAP:
        table = rng.choice(operator_tables(n, opclass))
    elif opclass is OperatorClass.MONOTONE:
        table = _random_monotone(n, rng)
    elif opclass is OperatorClass.DOUBLY_MONOTONE:
        perm = list(range(n))
        rng.shuffle(perm)
        table = InterpretationOperator.from_permutation(perm).table
    elif opclass is OperatorClass.GROUNDED:
        table = _random_grounded(n, rng)
    else:
        table = InterpretationOperator.identity(n).table
    agent = AgentSpec(StrictPreference.from_ranking(ranking), InterpretationOperator(n, table), cls)
    from .rationalize import derive_choice_function

    return agent, derive_choice_function(agent)
