"""Acceptance gate: one test per criterion, each reporting a PASS/FAIL line.

Criterion 4 asserts the literal RAIC characterization (NBC, CCI and ND
together) and fails at three alternatives; it is marked as an expected
failure rather than weakened.  See the README for the counterexample.
"""

from __future__ import annotations

import subprocess
import sys
import time
from pathlib import Path

import pytest

from conftest import ACCEPTANCE

from choice_audit.axioms import audit, check_groundedness, check_warp
from choice_audit.core import InterpretationOperator, StrictPreference, fixture
from choice_audit.oracle import Theorem, verify_characterization
from choice_audit.rationalize import construct_raic, derive_choice_function
from choice_audit.revealed import identify, revealed_consideration

FIXTURES = Path(__file__).parent / "fixtures"
X, Y, Z = 0b001, 0b010, 0b100


def report(k: int, ok: bool, text: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {k}: {text}"
    ACCEPTANCE[k] = line
    print(line)


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def test_criterion_1_example1_golden():
    def go():
        d = fixture("EXAMPLE1").dataset
        return audit(d), identify(d, "AIC"), revealed_consideration(d)

    (rep, ident, cons), secs = timed(go)
    expected = {X | Y: X, Y | Z: Y, X | Z: X, X | Y | Z: X | Y}
    ok = (
        rep.verdicts["NSC"].holds
        and ident.preference.pairs == {(0, 1)}
        and all(cons[m] == img for m, img in expected.items())
        and all(ident.operator[m] == img for m, img in expected.items())
        and secs < 1.0
    )
    report(1, ok, f"NSC holds, revealed preference x>y, consideration table exact ({secs:.3f}s)")
    assert ok


def test_criterion_2_example2_golden():
    def go():
        d, agent = fixture("EXAMPLE2")
        return d, agent, derive_choice_function(agent), check_groundedness(d), construct_raic(d), check_warp(d)

    (d, agent, derived, ground, raic, warp), secs = timed(go)
    relabel = InterpretationOperator.from_permutation((1, 2, 0))
    ok = (
        derived == d
        and len(derived) == 7
        and ground.witness == {"menus": [X, Y, Z, Y | Z]}
        and raic is not None
        and raic.agent.operator == relabel
        and raic.agent.preference == StrictPreference.from_ranking((0, 1, 2))
        and warp.witness == {"S": X | Y | Z, "T": X | Y, "x": 0, "y": 1}
        and secs < 1.0
    )
    report(2, ok, f"7 rows reproduced, groundedness and WARP witnesses exact, relabelling recovered ({secs:.3f}s)")
    assert ok


def _equivalence(theorem, sizes, limit):
    out = {}
    for n in sizes:
        rep, secs = timed(lambda: verify_characterization(theorem, n))
        out[n] = (rep, secs)
    ok = all(rep.equivalence_holds and secs < limit for rep, secs in out.values())
    detail = ", ".join(
        f"n={n}: {rep.counts['datasets']} datasets, {len(rep.counterexamples)} counterexamples ({secs:.2f}s)"
        for n, (rep, secs) in out.items()
    )
    return ok, out, detail


def test_criterion_3_theorem1():
    ok, out, detail = _equivalence(Theorem.THM1, (2, 3), 600)
    ok = ok and out[2][0].counts["datasets"] == 8 and out[3][0].counts["datasets"] == 2187
    ok = ok and out[2][0].counts["class_operators"] == 11 and out[3][0].counts["class_operators"] == 1891
    report(3, ok, f"NSC <=> AIC over linear orders x monotone operators; {detail}")
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="NBC, CCI and ND together admit 18 datasets at n=3 with no relabelling representation, "
    "for example identity singleton choices with c({y,z}) = x",
)
def test_criterion_4_theorem2():
    ok, out, detail = _equivalence(Theorem.THM2, (2, 3), 60)
    ok = ok and all(rep.counts["class_operators"] == {2: 2, 3: 6}[n] for n, (rep, _) in out.items())
    repaired = all(rep.repaired["equivalence_holds"] for rep, _ in out.values())
    note = "; repaired form with every c(T) = c({w}), w in T: " + ("holds" if repaired else "fails")
    report(4, ok, f"NBC and CCI and ND <=> RAIC; {detail}{note}")
    assert ok


def test_criterion_5_theorem4():
    ok, _, detail = _equivalence(Theorem.THM4, (2, 3), 60)
    report(5, ok, f"Groundedness <=> GAIC; {detail}")
    assert ok


def test_criterion_6_theorems_3_and_5():
    ok = True
    parts = []
    predicted = {"{x}": "y", "{y}": "y", "{x,y}": "y"}
    for theorem in (Theorem.THM3, Theorem.THM5):
        for n in (2, 3):
            rep = verify_characterization(theorem, n)
            rows = rep.datasets or []
            ok &= len(rows) == rep.counts["datasets"]
            ok &= all("literal_agrees" in r and "repaired_agrees" in r for r in rows)
            ok &= rep.repaired["equivalence_holds"] and not rep.repaired["counterexamples"]
            if n == 2:
                ok &= predicted in [cx["dataset"] for cx in rep.counterexamples]
            parts.append(
                f"{theorem.value} n={n}: literal {len(rep.counterexamples)} counterexamples, "
                f"repaired {len(rep.repaired['counterexamples'])}"
            )
    report(6, ok, "per-dataset literal and repaired outcomes recorded; predicted dataset confirmed; " + ", ".join(parts))
    assert ok


@pytest.mark.parametrize("k,theorem", [(7, Theorem.PROP1), (8, Theorem.PROP2)])
def test_criteria_7_8_identification(k, theorem):
    rep = verify_characterization(theorem, 3)
    ok = rep.equivalence_holds and rep.counts["nsc_datasets"] > 0
    what = "preference intersection equals closure" if k == 7 else "image intersection equals revealed consideration"
    report(k, ok, f"{what} on {rep.counts['nsc_datasets']} NSC datasets at n=3, {len(rep.counterexamples)} mismatches")
    assert ok


def test_criterion_9_proposition4():
    reps = {n: timed(lambda: verify_characterization(Theorem.PROP4, n)) for n in (2, 3)}
    ok = (
        reps[2][0].counts["operators"] == 27
        and reps[3][0].counts["operators"] == 823543
        and all(rep.equivalence_holds and secs < 600 for rep, secs in reps.values())
    )
    report(
        9,
        ok,
        "monotone, union closed and intersection closed flags identical over 27 and 823543 tables "
        f"({reps[3][1]:.1f}s at n=3)",
    )
    assert ok


def test_criterion_10_logical_consistency():
    reps = {n: verify_characterization(Theorem.LOGICAL_CONSISTENCY, n) for n in (2, 3)}
    ok = (
        reps[2].counts["monotone_operators"] == 11
        and all(r.equivalence_holds and r.counts["relabellings"] == r.counts["expected_relabellings"] for r in reps.values())
    )
    report(
        10,
        ok,
        f"battery agrees on {reps[2].counts['monotone_operators']} and {reps[3].counts['monotone_operators']} "
        f"monotone operators, relabellings {reps[2].counts['relabellings']} and {reps[3].counts['relabellings']}",
    )
    assert ok


def _cli(*argv):
    proc = subprocess.run([sys.executable, "-m", "choice_audit", *argv], capture_output=True, check=False)
    return proc.returncode, proc.stdout


def test_criterion_11_determinism(tmp_path):
    ex1, ex2 = str(FIXTURES / "example1.json"), str(FIXTURES / "example2.json")
    commands = [
        ["audit", ex2, "--format", "json"],
        ["audit", ex1],
        ["identify", ex1, "--class", "aic", "--format", "json"],
        ["identify", ex2, "--class", "raic"],
        ["rationalize", ex1, "--class", "gaic", "--format", "json"],
        ["rationalize", ex2, "--class", "raic"],
        ["align", ex1, "--dm", "y>x>z", "--format", "json"],
        ["simulate", "--seed", "42", "--class", "aic", "--n", "4"],
        ["oracle", "--theorem", "thm2", "--n", "3"],
    ]
    ok = all(_cli(*argv) == _cli(*argv) for argv in commands)
    for theorem in Theorem:
        one = verify_characterization(theorem, 3).to_json()
        many = verify_characterization(theorem, 3, workers=4).to_json()
        ok &= one == many
    report(11, ok, f"{len(commands)} commands byte-identical across runs; all {len(Theorem)} reports identical at 1 and 4 workers")
    assert ok
