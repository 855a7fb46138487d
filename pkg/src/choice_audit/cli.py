"""Command-line interface: audit, identify, rationalize, oracle, simulate, align.

Exit codes are uniform: 0 when the request succeeds and everything checked
holds, 1 for a semantic negative (an axiom fails, no rationalization, a
theorem check finds counterexamples, a misaligned pair), 2 for input or
usage errors.  JSON output is canonical (sorted keys, canonical menu order).
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Any, Sequence

from . import axioms, documents, oracle, revealed
from .rationalize import rationalize as run_rationalize
from .core import ChoiceAuditError, ChoiceDataset, Menu, StrictPreference, Universe

log = logging.getLogger("choice_audit")

CLASSES = ["aic", "raic", "graic", "gaic", "gmaic"]
THEOREMS = [t.value.lower() for t in oracle.Theorem]
AXIOM_NAMES = [a.value for a in axioms.CHECKS]


class UsageError(ChoiceAuditError):
    pass


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------


def _menu(u: Universe, m: Menu) -> list[str]:
    return list(u.names(m))


def _pairs(u: Universe, rel: StrictPreference) -> list[str]:
    return [f"{u.labels[a]}>{u.labels[b]}" for a, b in rel.sorted_pairs()]


def _verdict_doc(u: Universe, v: axioms.AxiomVerdict) -> dict[str, Any]:
    return {
        "holds": v.holds,
        "vacuous": v.vacuous,
        "instances": v.instances,
        "witness": None if v.witness is None else axioms.render_witness(u, v.witness),
    }


def audit_doc(report: axioms.AuditReport, selected: Sequence[axioms.Axiom]) -> dict[str, Any]:
    d = report.dataset
    u = d.universe
    return {
        "alternatives": list(u.labels),
        "observed_menus": len(d),
        "total": d.is_total,
        "verdicts": {a.value: _verdict_doc(u, report.verdicts[a]) for a in selected},
        "supplementary": {a.value: _verdict_doc(u, v) for a, v in report.supplementary.items()},
        "memberships": {
            c.value: {"member": m.member, "basis": m.basis, "note": m.note}
            for c, m in report.memberships.items()
        },
        "notes": list(report.notes),
    }


def _consideration(u: Universe, table) -> dict[str, list[str]]:
    return {u.fmt(m): _menu(u, img) for m, img in table.items()}


def identify_doc(d: ChoiceDataset, ident: revealed.Identification) -> dict[str, Any]:
    u = d.universe
    rel = revealed.revealed_one_step(d)
    out: dict[str, Any] = {
        "class": ident.model_class.value,
        "revealed_preference": _pairs(u, rel.one_step),
        "revealed_closure": _pairs(u, rel.closure),
        "revealed_consideration": _consideration(u, revealed.revealed_consideration(d).table),
        "preference": "UNIDENTIFIED" if ident.preference is None else _pairs(u, ident.preference),
        "warnings": list(ident.warnings),
    }
    if ident.operator:
        out["operator"] = {
            u.fmt(m): "UNOBSERVED" if img is None else _menu(u, img) for m, img in ident.operator.items()
        }
    if ident.lower:
        out["bounds"] = {
            u.fmt(m): {"lower": _menu(u, ident.lower[m]), "upper": _menu(u, ident.upper[m])}
            for m in ident.lower
        }
    return out


def _text(doc: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k in sorted(doc):
            v = doc[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(doc))
    return lines


def _flat(v: Any) -> bool:
    # name lists print inline as {a,b}; sentences get one line each
    return isinstance(v, list) and all(isinstance(x, str) and " " not in x for x in v)


def _scalar(v: Any) -> str:
    if v == []:
        return "none"
    if isinstance(v, list):
        return "{" + ",".join(v) + "}" if _flat(v) else str(v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, dict) and not v:
        return "{}"
    return str(v)


def emit(doc: Any, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(documents.dumps(doc))
    else:
        sys.stdout.write("\n".join(_text(doc)) + "\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _parse_axioms(spec: str | None) -> list[axioms.Axiom]:
    if not spec:
        return list(axioms.CHECKS)
    out = []
    for name in spec.split(","):
        key = name.strip().upper()
        if key not in AXIOM_NAMES:
            raise UsageError(f"--axioms: unknown axiom {name.strip()!r}; choose from {', '.join(AXIOM_NAMES)}")
        out.append(axioms.Axiom(key))
    return out


def cmd_audit(args: argparse.Namespace) -> int:
    selected = _parse_axioms(args.axioms)
    d = documents.load_dataset(args.input)
    report = axioms.audit(d)
    emit(audit_doc(report, selected), args.format)
    return 0 if all(report.verdicts[a].holds for a in selected) else 1


def cmd_identify(args: argparse.Namespace) -> int:
    d = documents.load_dataset(args.input)
    ident = revealed.identify(d, args.model_class.upper())
    emit(identify_doc(d, ident), args.format)
    return 1 if ident.warnings else 0


def cmd_rationalize(args: argparse.Namespace) -> int:
    d = documents.load_dataset(args.input)
    result = run_rationalize(d, args.model_class.upper())
    doc: dict[str, Any] = {"class": result.model_class.value, "found": result.found, "reasons": result.reasons}
    if result.found:
        rep = result.representation
        agent_doc = documents.agent_to_doc(rep.agent, d.universe, rep.scope.value)
        doc["scope"] = rep.scope.value
        if args.out:
            documents.write(args.out, agent_doc)
            doc["agent_path"] = str(args.out)
        else:
            doc["agent"] = agent_doc
    else:
        doc["representation"] = "NONE"
    emit(doc, args.format)
    return 0 if result.found else 1


def cmd_oracle(args: argparse.Namespace) -> int:
    report = oracle.verify_characterization(args.theorem.upper(), args.n, workers=args.workers)
    text = report.to_json()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    summary = f"{report.theorem} n={report.n}: {report.statement}: " + (
        "holds" if report.equivalence_holds else f"FAILS ({len(report.counterexamples)} counterexamples)"
    )
    if report.repaired is not None:
        fixed = report.repaired
        summary += f"; repaired {fixed['statement']}: " + (
            "holds" if fixed["equivalence_holds"] else f"FAILS ({len(fixed['counterexamples'])} counterexamples)"
        )
    print(summary, file=sys.stderr)
    return 0 if report.equivalence_holds else 1


def cmd_simulate(args: argparse.Namespace) -> int:
    agent, d = oracle.simulate(args.seed, args.model_class.upper(), args.n)
    dataset_doc = documents.dataset_to_doc(d)
    agent_doc = documents.agent_to_doc(agent, d.universe)
    if args.out:
        out = Path(args.out)
        agent_out = Path(args.agent_out) if args.agent_out else out.with_name(out.stem + ".agent.json")
        documents.write(out, dataset_doc)
        documents.write(agent_out, agent_doc)
        print(f"wrote {out} and {agent_out}", file=sys.stderr)
    else:
        sys.stdout.write(documents.dumps({"dataset": dataset_doc, "agent": agent_doc}))
    return 0


def parse_dm(u: Universe, text: str) -> StrictPreference:
    names = [p.strip() for p in text.split(">")]
    if any(not p for p in names):
        raise UsageError(f"--dm: cannot parse {text!r}; expected names separated by '>'")
    for name in names:
        if name not in u.labels:
            raise UsageError(f"--dm: {name!r} is not one of the alternatives")
    order = [u.index(p) for p in names]
    if sorted(order) != list(range(u.size)):
        raise UsageError("--dm: must rank every alternative exactly once")
    return StrictPreference.from_ranking(order)


def cmd_align(args: argparse.Namespace) -> int:
    d = documents.load_dataset(args.input)
    u = d.universe
    report = revealed.alignment_report(d, parse_dm(u, args.dm))
    doc = {
        "pairs": [
            {"pair": [u.labels[a], u.labels[b]], "verdict": v.value} for (a, b), v in sorted(report.pairs.items())
        ],
        "counts": {k.value: v for k, v in report.counts.items()},
    }
    emit(doc, args.format)
    return 1 if report.counts[revealed.Alignment.MISALIGNED] else 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit code 2 with our prefix
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="choice-audit", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="count", default=0, help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp):
        sp.add_argument("--format", choices=["json", "text"], default="text")

    sp = sub.add_parser("audit", help="check the axioms on a dataset")
    sp.add_argument("input")
    sp.add_argument("--axioms", help=f"comma-separated subset of {','.join(AXIOM_NAMES)} (default: all)")
    fmt(sp)
    sp.set_defaults(func=cmd_audit)

    sp = sub.add_parser("identify", help="revealed preference, consideration and class identification")
    sp.add_argument("input")
    sp.add_argument("--class", dest="model_class", choices=CLASSES, required=True)
    fmt(sp)
    sp.set_defaults(func=cmd_identify)

    sp = sub.add_parser("rationalize", help="construct a representation of the dataset")
    sp.add_argument("input")
    sp.add_argument("--class", dest="model_class", choices=CLASSES, required=True)
    sp.add_argument("--out", help="where to write the agent document (default: include it in the output)")
    fmt(sp)
    sp.set_defaults(func=cmd_rationalize)

    sp = sub.add_parser("oracle", help="exhaustively check a characterization at size n")
    sp.add_argument("--theorem", choices=THEOREMS, type=str.lower, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out", help="report path (default: stdout)")
    sp.add_argument("--workers", type=int, default=1, help="worker processes (the report does not depend on it)")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("simulate", help="sample an agent of a class and the data it generates")
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--class", dest="model_class", choices=CLASSES, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out", help="dataset path (default: print both documents)")
    sp.add_argument("--agent-out", help="agent path (default: <out stem>.agent.json)")
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("align", help="compare the revealed preference with a stated ranking")
    sp.add_argument("input")
    sp.add_argument("--dm", required=True, help='ranking best first, e.g. "x>y>z"')
    fmt(sp)
    sp.set_defaults(func=cmd_align)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        return args.func(args)
    except ChoiceAuditError as exc:
        # includes MissingObservations, whose message lists the menus
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
