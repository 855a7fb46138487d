#!/usr/bin/env python3
"""Settle every characterization by exhaustion at two and three alternatives.

For each result the script prints the literal statement, how many datasets
or operators were checked, and the counterexamples if any.  Where the
literal statement fails, the repaired statement is checked on the same
enumeration.  Takes about half a minute.

Run with ``python3 demos/adjudicate.py [--workers N]``.
"""

from __future__ import annotations

import argparse

from choice_audit.oracle import Theorem, verify_characterization


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--workers", type=int, default=1)
    args = parser.parse_args()

    for theorem in Theorem:
        for n in (2, 3):
            rep = verify_characterization(theorem, n, workers=args.workers)
            verdict = "holds" if rep.equivalence_holds else f"FAILS, {len(rep.counterexamples)} counterexamples"
            print(f"{theorem.value} n={n}: {rep.statement}")
            print(f"  {verdict}; counts {rep.counts}")
            if rep.counterexamples:
                first = rep.counterexamples[0]
                print(f"  first counterexample: {first.get('dataset') or first.get('operator')}")
            if rep.repaired:
                fixed = rep.repaired
                status = "holds" if fixed["equivalence_holds"] else f"fails ({len(fixed['counterexamples'])})"
                print(f"  repaired: {fixed['statement']}: {status}")
            for key, value in rep.extra.items():
                print(f"  {key}: {value}")


if __name__ == "__main__":
    main()
