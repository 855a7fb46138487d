#!/usr/bin/env python3
"""Walk through the two built-in example datasets.

The first is a partial dataset: four menus, one revealed preference.  The
second is generated by an agent whose interpretation relabels every
alternative, so it violates WARP while remaining perfectly rationalizable.

Run with ``python3 demos/walkthrough.py``.
"""

from __future__ import annotations

from choice_audit import (
    alignment_report,
    audit,
    construct_aic,
    construct_raic,
    derive_choice_function,
    fixture,
    identify,
)
from choice_audit.axioms import describe_witness
from choice_audit.core import StrictPreference


def show_dataset(d) -> None:
    u = d.universe
    for m, x in d.items():
        print(f"  c({u.fmt(m)}) = {u.labels[x]}")


def show_audit(d) -> None:
    u = d.universe
    rep = audit(d)
    for ax, v in rep.verdicts.items():
        status = "holds" if v.holds else "fails at " + describe_witness(u, v.witness)
        print(f"  {ax.value:<13}{status}{' (vacuous)' if v.vacuous else ''}")
    for cls, m in rep.memberships.items():
        print(f"  {cls.value:<6} {'yes' if m.member else 'no'} [{m.basis}]")
    for note in rep.notes:
        print(f"  note: {note}")


def main() -> None:
    d1 = fixture("EXAMPLE1").dataset
    u = d1.universe
    print("Example 1: four observed menus")
    show_dataset(d1)
    print("\nAxioms")
    show_audit(d1)

    ident = identify(d1, "AIC")
    print("\nWhat every AIC representation must agree on")
    print(f"  preference: {ident.preference.fmt(u)}")
    for m, img in ident.operator.items():
        if img is not None:
            print(f"  I*({u.fmt(m)}) = {u.fmt(img)}")

    rep = construct_aic(d1)
    print("\nOne representation, valid on the observed menus")
    print(f"  ranking: {' > '.join(u.labels[i] for i in rep.agent.preference.ranking)}")
    print(f"  operator: {rep.agent.operator.fmt(u)}")

    for dm in ((0, 1, 2), (1, 0, 2)):
        pref = StrictPreference.from_ranking(dm)
        verdicts = alignment_report(d1, pref).pairs
        shown = ", ".join(f"{u.labels[a]}{u.labels[b]}:{v.value}" for (a, b), v in sorted(verdicts.items()))
        print(f"  aligned with {'>'.join(u.labels[i] for i in dm)}? {shown}")

    d2, agent = fixture("EXAMPLE2")
    print("\nExample 2: the agent reads x as y, y as z and z as x, and ranks x > y > z")
    assert derive_choice_function(agent) == d2
    show_dataset(d2)
    print("\nAxioms")
    show_audit(d2)

    raic = construct_raic(d2)
    print("\nRecovered from the data alone")
    print(f"  ranking: {' > '.join(u.labels[i] for i in raic.agent.preference.ranking)}")
    print(f"  operator: {raic.agent.operator.fmt(u)}")
    print(f"  same agent as the generator: {raic.agent == agent}")


if __name__ == "__main__":
    main()
