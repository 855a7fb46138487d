"""Behavioral axioms over (possibly partial) choice data.

Every axiom quantifies over observed menus only.  A failing verdict carries
a witness: a dict naming the menus (bit masks) and alternatives (indices)
that instantiate the violated premise.  :func:`replay_witness` re-derives
the violation from the witness alone.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import permutations
from typing import Any

from .core import ChoiceDataset, Menu, ModelClass, Universe, find_cycle, members


class Axiom(str, enum.Enum):
    NSC = "NSC"
    NBC = "NBC"
    CCI = "CCI"
    ND = "ND"
    WARP = "WARP"
    GROUNDEDNESS = "GROUNDEDNESS"
    # supplementary: not one of the six named axioms, see check_singleton_image
    SINGLETON_IMAGE = "SINGLETON_IMAGE"


@dataclass(frozen=True)
class AxiomVerdict:
    axiom: Axiom
    holds: bool
    vacuous: bool = False
    witness: dict[str, Any] | None = None
    instances: int = 0

    def __bool__(self) -> bool:
        return self.holds


def _verdict(axiom, witness, instances):
    return AxiomVerdict(axiom, witness is None, instances == 0, witness, instances)


# ---------------------------------------------------------------------------
# NSC
# ---------------------------------------------------------------------------


def check_nsc(d: ChoiceDataset) -> AxiomVerdict:
    """Acyclicity of the one-step revealed relation.

    The witness lists the cycle ``a0 > a1 > ... > ak > a0`` together with,
    for each edge, the first observation pair (S, T), S a strict subset of T,
    with c(T) the better and c(S) the worse alternative.
    """
    from .revealed import revealed_one_step

    rel = revealed_one_step(d)
    instances = sum(len(v) for v in rel.provenance.values())
    cycle = find_cycle(rel.one_step)
    if cycle is None:
        return AxiomVerdict(Axiom.NSC, True, instances == 0, None, instances)
    edges = []
    for i, a in enumerate(cycle):
        b = cycle[(i + 1) % len(cycle)]
        s, t = rel.provenance[(a, b)][0]
        edges.append({"better": a, "worse": b, "S": s, "T": t})
    return AxiomVerdict(Axiom.NSC, False, False, {"cycle": list(cycle), "edges": edges}, instances)


def nsc_literal_violation(d: ChoiceDataset, depth: int) -> dict[str, Any] | None:
    """Search the chain form of NSC with ``depth + 1`` subset-linked pairs.

    Consecutive alternatives in the chain are required to differ; with equal
    neighbours the premise is met by any dataset choosing the same item from
    a menu and a superset, which would make the axiom unsatisfiable.
    Returns the first violating chain or None.  Exponential; meant for
    cross-validation at small depth.
    """
    obs = list(d.items())
    # links[x] lists pairs (S, T), S strict subset of T, with c(S) = x
    links: dict[int, list[tuple[Menu, Menu, int]]] = {}
    for s, xs in obs:
        for t, xt in obs:
            if s != t and s & ~t == 0:
                links.setdefault(xs, []).append((s, t, xt))

    def extend(chain, x_first):
        x_last = chain[-1][2] if chain else None
        if len(chain) == depth + 1:
            return chain if x_last == x_first else None
        start = x_first if not chain else x_last
        for s, t, xt in links.get(start, []):
            if xt == start:
                continue
            if len(chain) == depth and xt != x_first:
                continue
            found = extend(chain + [(s, t, xt)], x_first)
            if found:
                return found
        return None

    for x in sorted(links):
        chain = extend([], x)
        if chain:
            return {"chain": [{"S": s, "T": t, "c(T)": xt} for s, t, xt in chain]}
    return None


# ---------------------------------------------------------------------------
# NBC, CCI, ND
# ---------------------------------------------------------------------------


def check_nbc(d: ChoiceDataset) -> AxiomVerdict:
    """No binary cycles over ordered triples whose three pair menus are observed."""
    n = d.universe.size
    witness = None
    instances = 0
    for x, y, z in permutations(range(n), 3):
        xy, yz, xz = (1 << x) | (1 << y), (1 << y) | (1 << z), (1 << x) | (1 << z)
        if xy not in d or yz not in d or xz not in d:
            continue
        instances += 1
        if d[xy] != d[yz] and d[xz] != d[yz] and d[xy] != d[xz] and witness is None:
            witness = {"x": x, "y": y, "z": z}
    return _verdict(Axiom.NBC, witness, instances)


def check_cci(d: ChoiceDataset) -> AxiomVerdict:
    """Observed chains R < S < T with c(R) = c(T) must have c(S) = c(R)."""
    menus = d.menus
    witness = None
    instances = 0
    for r in menus:
        for s in menus:
            if s == r or r & ~s:
                continue
            for t in menus:
                if t == s or s & ~t:
                    continue
                instances += 1
                if witness is None and d[r] == d[t] and d[s] != d[r]:
                    witness = {"R": r, "S": s, "T": t}
    return _verdict(Axiom.CCI, witness, instances)


def check_nd(d: ChoiceDataset) -> AxiomVerdict:
    """Observed singleton choices are pairwise distinct."""
    n = d.universe.size
    observed = [i for i in range(n) if (1 << i) in d]
    witness = None
    for a_pos, a in enumerate(observed):
        for b in observed[a_pos + 1:]:
            if d[1 << a] == d[1 << b]:
                witness = {"x": a, "y": b}
                break
        if witness:
            break
    instances = len(observed) * (len(observed) - 1) // 2
    return _verdict(Axiom.ND, witness, instances)


# ---------------------------------------------------------------------------
# WARP and groundedness
# ---------------------------------------------------------------------------


def warp_violations(d: ChoiceDataset) -> list[dict[str, int]]:
    """Every (S, T, x, y) with c(S) = x, y != x in S, x in T and c(T) = y."""
    out = []
    for s, x in d.items():
        for t, ct in d.items():
            if ct != x and (s >> ct) & 1 and (t >> x) & 1:
                out.append({"S": s, "T": t, "x": x, "y": ct})
    return out


def check_warp(d: ChoiceDataset) -> AxiomVerdict:
    """WARP over distinct pairs x != y.

    Among all violations the witness prefers one in which both observed
    choices lie in their own menus (so it cannot be blamed on a failure of
    groundedness); ties go to the smallest (T, S) in canonical order.  Such
    violations come in mirrored pairs, and this picks the one whose reversal
    menu T is smaller.
    """
    violations = warp_violations(d)
    instances = sum(
        bin(s & ~(1 << x)).count("1") for s, x in d.items() for t in d if (t >> x) & 1
    )
    if not violations:
        return AxiomVerdict(Axiom.WARP, True, instances == 0, None, instances)

    def grounded(v):
        return (v["S"] >> v["x"]) & 1 and (v["T"] >> v["y"]) & 1

    best = min(violations, key=lambda v: (not grounded(v), v["T"], v["S"]))
    return AxiomVerdict(Axiom.WARP, False, False, best, instances)


def check_groundedness(d: ChoiceDataset) -> AxiomVerdict:
    """Every observed choice lies in its menu; the witness lists all offending menus."""
    bad = [m for m, x in d.items() if not (m >> x) & 1]
    witness = {"menus": bad} if bad else None
    return _verdict(Axiom.GROUNDEDNESS, witness, len(d))


def check_singleton_image(d: ChoiceDataset) -> AxiomVerdict:
    """Each choice c(T) is the singleton choice c({w}) of some w in T.

    Every relabelling representation chooses from the image of T under
    w -> c({w}), so this is necessary for RAIC; NBC, CCI and ND do not imply
    it (c({y,z}) = x with identity singleton choices satisfies all three).
    On partial data an instance is checkable when c(T) is the singleton
    choice of some observed w outside T, or when every singleton of T is
    observed.  The witness names T and the offending choice.
    """
    n = d.universe.size
    singles = {w: d[1 << w] for w in range(n) if (1 << w) in d}
    witness = None
    instances = 0
    for t, x in d.items():
        inside = [w for w in members(t) if w in singles]
        outside = [w for w, c in singles.items() if c == x and not (t >> w) & 1]
        full = len(inside) == bin(t).count("1")
        if not outside and not full:
            continue
        instances += 1
        if witness is None and not any(singles[w] == x for w in inside):
            witness = {"T": t, "choice": x}
    return _verdict(Axiom.SINGLETON_IMAGE, witness, instances)


CHECKS = {
    Axiom.NSC: check_nsc,
    Axiom.NBC: check_nbc,
    Axiom.CCI: check_cci,
    Axiom.ND: check_nd,
    Axiom.WARP: check_warp,
    Axiom.GROUNDEDNESS: check_groundedness,
}


def replay_witness(verdict: AxiomVerdict, d: ChoiceDataset) -> bool:
    """True when the verdict's witness still exhibits a violation in ``d``."""
    w = verdict.witness
    if w is None:
        return False
    ax = verdict.axiom
    if ax is Axiom.NSC:
        cycle = w["cycle"]
        for i, e in enumerate(w["edges"]):
            s, t = e["S"], e["T"]
            if e["better"] != cycle[i] or e["worse"] != cycle[(i + 1) % len(cycle)]:
                return False
            if s == t or s & ~t or d.get(t) != e["better"] or d.get(s) != e["worse"]:
                return False
            if e["better"] == e["worse"]:
                return False
        return len(cycle) >= 2
    if ax is Axiom.NBC:
        x, y, z = w["x"], w["y"], w["z"]
        cxy = d.get((1 << x) | (1 << y))
        cyz = d.get((1 << y) | (1 << z))
        cxz = d.get((1 << x) | (1 << z))
        if None in (cxy, cyz, cxz):
            return False
        return cxy != cyz and cxz != cyz and cxy != cxz
    if ax is Axiom.CCI:
        r, s, t = w["R"], w["S"], w["T"]
        if not (r != s and s != t and r & ~s == 0 and s & ~t == 0):
            return False
        cr, cs, ct = d.get(r), d.get(s), d.get(t)
        return None not in (cr, cs, ct) and cr == ct and cs != cr
    if ax is Axiom.ND:
        x, y = w["x"], w["y"]
        cx, cy = d.get(1 << x), d.get(1 << y)
        return x != y and cx is not None and cx == cy
    if ax is Axiom.WARP:
        s, t, x, y = w["S"], w["T"], w["x"], w["y"]
        return x != y and d.get(s) == x and (s >> y) & 1 and (t >> x) & 1 and d.get(t) == y
    if ax is Axiom.SINGLETON_IMAGE:
        t, x = w["T"], w["choice"]
        if d.get(t) != x:
            return False
        n = d.universe.size
        if any(d.get(1 << v) == x for v in range(n) if (t >> v) & 1):
            return False
        outside = any(d.get(1 << v) == x for v in range(n) if not (t >> v) & 1)
        return outside or all((1 << v) in d for v in range(n) if (t >> v) & 1)
    if ax is Axiom.GROUNDEDNESS:
        menus = w["menus"]
        return bool(menus) and all(m in d and not (m >> d[m]) & 1 for m in menus)
    raise ValueError(f"unknown axiom {ax}")


_MENU_KEYS = {"S", "T", "R"}
_ALT_KEYS = {"x", "y", "z", "better", "worse", "choice"}


def render_witness(u: Universe, w: Any, key: str | None = None) -> Any:
    """The witness with masks replaced by name lists and indices by names."""
    if isinstance(w, dict):
        return {k: render_witness(u, v, k) for k, v in w.items()}
    if key == "menus":
        return [list(u.names(m)) for m in w]
    if key == "cycle":
        return [u.labels[i] for i in w]
    if isinstance(w, list):
        return [render_witness(u, v) for v in w]
    if key in _MENU_KEYS:
        return list(u.names(w))
    if key in _ALT_KEYS:
        return u.labels[w]
    return w


def describe_witness(u: Universe, w: dict[str, Any]) -> str:
    """One-line rendering, e.g. ``S={x,y,z}, T={x,y}, x=x, y=y``."""

    def fmt(v):
        if isinstance(v, list):
            if v and all(isinstance(x, str) for x in v):
                return "{" + ",".join(v) + "}"
            return "[" + ", ".join(fmt(x) for x in v) + "]"
        if isinstance(v, dict):
            return "(" + ", ".join(f"{k}={fmt(x)}" for k, x in v.items()) + ")"
        return str(v)

    return ", ".join(f"{k}={fmt(v)}" for k, v in render_witness(u, w).items())


# ---------------------------------------------------------------------------
# Audit
# ---------------------------------------------------------------------------


CHARACTERIZATION = "characterization"
NECESSARY_ONLY = "necessary-conditions-only"

WARP_DISCREPANCY = (
    "WARP holds but groundedness fails: WARP over distinct alternatives does not "
    "force c(S) in S, while every identity-operator representation does; "
    "membership requires WARP and groundedness"
)

RAIC_DISCREPANCY = (
    "NBC, CCI and ND hold but some choice is not the singleton choice of a member "
    "of its menu, which no relabelling representation can produce; membership "
    "requires the singleton-image condition as well"
)


@dataclass(frozen=True)
class Membership:
    member: bool
    basis: str
    note: str | None = None


@dataclass(frozen=True)
class AuditReport:
    dataset: ChoiceDataset
    verdicts: dict[Axiom, AxiomVerdict]
    memberships: dict[ModelClass, Membership]
    notes: list[str] = field(default_factory=list)
    supplementary: dict[Axiom, AxiomVerdict] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts.values())


def audit(d: ChoiceDataset) -> AuditReport:
    """Run all six axioms and map the verdicts to model classes.

    The supplementary singleton-image check only enters the RAIC verdict.

    On total data the memberships follow from the characterizations; on
    partial data a positive membership only means no necessary condition is
    violated on the observed menus, while a negative one is definitive.
    """
    verdicts = {ax: check(d) for ax, check in CHECKS.items()}
    ok = {ax: v.holds for ax, v in verdicts.items()}
    basis = CHARACTERIZATION if d.is_total else NECESSARY_ONLY
    notes = []

    def member(flag, note=None):
        return Membership(flag, basis if flag else CHARACTERIZATION, note)

    rational_note = None
    if ok[Axiom.WARP] and not ok[Axiom.GROUNDEDNESS]:
        rational_note = WARP_DISCREPANCY
        notes.append(WARP_DISCREPANCY)
    rational = ok[Axiom.WARP] and ok[Axiom.GROUNDEDNESS]
    image = check_singleton_image(d)
    relabel = ok[Axiom.NBC] and ok[Axiom.CCI] and ok[Axiom.ND]
    relabel_note = None
    if relabel and not image.holds:
        relabel_note = RAIC_DISCREPANCY
        notes.append(RAIC_DISCREPANCY)
    memberships = {
        ModelClass.AIC: member(ok[Axiom.NSC]),
        ModelClass.RAIC: member(relabel and image.holds, relabel_note),
        ModelClass.GRAIC: member(rational, rational_note),
        ModelClass.GAIC: member(ok[Axiom.GROUNDEDNESS]),
        ModelClass.GMAIC: member(rational, rational_note),
    }
    if not d.is_total:
        notes.append("partial dataset: positive memberships are necessary-conditions-only")
    return AuditReport(d, verdicts, memberships, notes, {Axiom.SINGLETON_IMAGE: image})
