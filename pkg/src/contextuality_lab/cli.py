"""``ctxlab`` command line front end.

Every subcommand takes a logic (a ``.ctx``/``.json`` path or a catalog name
such as ``pentagon`` or ``cycle(5,3)``), prints a human summary on stdout,
and with ``--json`` prints a machine-readable report instead.  Diagnostics
go to stderr.  Exit status: 0 success, 1 internal error, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
import warnings
from fractions import Fraction
from pathlib import Path

from .catalog import catalog as catalog_logic
from .core import Logic, intertwine_list
from .errors import (
    DimensionMismatch,
    EmptyStateSet,
    EmptyTargets,
    InvalidWeights,
    LengthMismatch,
    LogicError,
    NotUnitVector,
    ParseError,
)
from .forep import (
    DEFAULT_TOL,
    OrthoRep,
    born_probabilities,
    cycle_umbrella_rep,
    max_quantum_value,
    two_context_rep,
    validate_faithfulness,
    validate_orthogonality,
)
from .io import LogicDocument, export_dot, load, parse_probabilities, serialize_dsl, serialize_json
from .probability import (
    classical_mixture,
    context_sums,
    in_classical_hull,
    possibilistic_support,
    validate_generalized_state,
)
from .states import check_implication, classify, enumerate_states, gadget_relation, partition_logic

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Bad command-line input: missing file, missing section, malformed flag."""


_INPUT_ERRORS = (
    InputError,
    ParseError,
    LogicError,
    DimensionMismatch,
    NotUnitVector,
    EmptyTargets,
    LengthMismatch,
    InvalidWeights,
    OSError,
)


def _num(v):
    """JSON-friendly number: exact rationals become strings."""
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else v.numerator
    return v


def _csv(text: str) -> list[str]:
    items = [t.strip() for t in text.split(",")]
    if not all(items):
        raise InputError(f"empty item in list {text!r}")
    return items


def _parse_real(text: str) -> float:
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        pass
    try:
        return float(text)
    except ValueError:
        raise InputError(f"not a number: {text!r}") from None


def _load_input(source: str) -> LogicDocument:
    path = Path(source)
    if path.exists():
        return load(path)
    try:
        return LogicDocument(catalog_logic(source))
    except LogicError:
        raise InputError(f"{source}: no such file or catalog name") from None


def _summary(logic: Logic) -> dict:
    return {
        "atoms": logic.n_atoms,
        "contexts": logic.n_contexts,
        "intertwine_atoms": intertwine_list(logic),
    }


def _rep(args, doc: LogicDocument) -> OrthoRep:
    if args.phi is not None:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            rep = two_context_rep(args.phi)
        for w in caught:
            args._warnings.append(str(w.message))
        return rep
    if args.umbrella:
        return cycle_umbrella_rep(doc.logic)
    sec = doc.vector_section(args.section)
    if sec is None:
        raise InputError("no vectors: add vec lines to the input, or pass --phi or --umbrella")
    return OrthoRep.from_vectors(sec)


def _probs(args, doc: LogicDocument, required: bool) -> dict[str, Fraction] | None:
    if args.prob:
        text = Path(args.prob).read_text(encoding="utf-8")
        return parse_probabilities(text, doc.logic, args.section)
    sec = doc.probability_section(args.section)
    if sec is None and required:
        raise InputError("no probabilities: add prob lines to the input or pass --prob")
    return sec


# -- subcommands: each returns (human text, result payload) -------------------


def cmd_states(args, doc):
    S = enumerate_states(doc.logic)
    text = f"{len(S)} states"
    if len(S):
        text += "\n" + S.table()
    return text, {"count": len(S), "atoms": list(doc.logic.atoms), "states": [list(r) for r in S.rows]}


def cmd_classify(args, doc):
    c = classify(doc.logic)
    lines = [str(c.level), f"states: {c.n_states}"]
    if c.nonunital_atoms:
        lines.append("non-unital atoms: " + ", ".join(c.nonunital_atoms))
    if c.inseparable_pairs:
        lines.append("inseparable pairs: " + ", ".join(f"({a},{b})" for a, b in c.inseparable_pairs))
    return "\n".join(lines), c.to_dict()


def cmd_partition(args, doc):
    P = partition_logic(doc.logic)
    lines = [P.format()]
    for a, b in P.atom_blocks.items():
        lines.append(f"{a}: {{{','.join(map(str, sorted(b)))}}}")
    return "\n".join(lines), P.to_dict()


def _prob_lines(p) -> list[str]:
    return [f"p({a}) = {v}" for a, v in p.items()]


def cmd_probs(args, doc):
    logic = doc.logic
    given = None if args.weights else _probs(args, doc, required=False)
    if given is not None:
        valid = validate_generalized_state(logic, given, args.tol)
        sums = context_sums(logic, given)
        support = possibilistic_support(given)
        lines = _prob_lines(given)
        lines.append("context sums: " + ", ".join(str(s) for s in sums))
        lines.append("generalized state: " + ("valid" if valid else "invalid"))
        lines.append("support: " + " ".join(f"{a}={v}" for a, v in support.items()))
        payload = {
            "mode": "given",
            "probabilities": {a: _num(v) for a, v in given.items()},
            "context_sums": [_num(s) for s in sums],
            "generalized_state": valid,
            "support": support,
        }
        return "\n".join(lines), payload
    S = enumerate_states(logic)
    if len(S) == 0:
        raise EmptyStateSet("no two-valued states: classical mixtures do not exist")
    if args.weights:
        lam = [Fraction(w) for w in _csv(args.weights)]
    else:
        lam = [Fraction(1, len(S))] * len(S)
    p = classical_mixture(S, lam)
    lines = _prob_lines(p)
    lines.append("context sums: " + ", ".join(str(s) for s in context_sums(logic, p)))
    payload = {
        "mode": "mixture",
        "weights": [_num(w) for w in lam],
        "probabilities": {a: _num(v) for a, v in p.items()},
    }
    return "\n".join(lines), payload


def cmd_hull(args, doc):
    p = _probs(args, doc, required=True)
    S = enumerate_states(doc.logic)
    member, lam = in_classical_hull(S, p)
    if member:
        text = "inside classical hull\nweights: " + ", ".join(str(w) for w in lam)
    else:
        text = "outside classical hull"
    return text, {"member": member, "weights": None if lam is None else [_num(w) for w in lam]}


def cmd_gadget(args, doc):
    premises = _csv(args.premises)
    S = enumerate_states(doc.logic)
    imp = check_implication(S, premises, args.conclusion)
    text = "implication holds" if imp.holds else "implication fails"
    if imp.vacuous:
        text += " (vacuously: no state satisfies the premises)"
    text += f"\nstates satisfying premises: {imp.support}"
    if imp.counterexamples:
        text += "\ncounterexample states: " + ", ".join(map(str, imp.counterexamples))
    payload = {
        "premises": premises,
        "conclusion": args.conclusion,
        "holds": imp.holds,
        "vacuous": imp.vacuous,
        "support": imp.support,
        "counterexamples": list(imp.counterexamples),
    }
    if len(premises) == 1:
        g = gadget_relation(S, premises[0], args.conclusion)
        text += f"\ngadget kind: {g.kind}"
        payload["kind"] = g.kind.value
    return text, payload


def cmd_forep(args, doc):
    rep = _rep(args, doc)
    orth = validate_orthogonality(doc.logic, rep, args.tol)
    faith = validate_faithfulness(doc.logic, rep, args.tol)
    lines = [f"orthogonality: {'valid' if orth.valid else 'invalid'}"]
    for a, b, ip in orth.non_orthogonal:
        lines.append(f"  {a}.{b} = {ip:.12g}")
    for a, n in orth.non_unit:
        lines.append(f"  |{a}| = {n:.12g}")
    lines.append(f"faithfulness: {'faithful' if faith.faithful else 'unfaithful'}")
    for a, b in faith.orthogonal_unrelated:
        lines.append(f"  {a} orthogonal to {b} without a common context")
    for a, b in faith.collinear:
        lines.append(f"  {a} collinear with {b}")
    payload = {"dim": rep.dim, "orthogonality": orth.to_dict(), "faithfulness": faith.to_dict()}
    return "\n".join(lines), payload


def cmd_born(args, doc):
    rep = _rep(args, doc)
    psi = [_parse_real(t) for t in _csv(args.psi)]
    q = born_probabilities(doc.logic, rep, psi, args.tol)
    sums = context_sums(doc.logic, q)
    lines = [f"q({a}) = {v:.12g}" for a, v in q.items()]
    lines.append("context sums: " + ", ".join(f"{s:.12g}" for s in sums))
    return "\n".join(lines), {"psi": psi, "probabilities": dict(q), "context_sums": sums}


def cmd_maxq(args, doc):
    rep = _rep(args, doc)
    if args.targets:
        targets = _csv(args.targets)
    else:
        targets = intertwine_list(doc.logic) or list(doc.logic.atoms)
    value, psi = max_quantum_value(rep, targets)
    text = f"max quantum value: {value:.12g}\ntargets: {', '.join(targets)}\nargmax: " + ", ".join(
        f"{x:.12g}" for x in psi
    )
    return text, {"targets": targets, "value": value, "argmax": [float(x) for x in psi]}


def cmd_export_dot(args, doc):
    dot = export_dot(doc.logic)
    if args.output:
        Path(args.output).write_text(dot, encoding="utf-8", newline="\n")
        return f"wrote {args.output}", {"output": args.output}
    return dot.rstrip("\n"), {"dot": dot}


def cmd_catalog(args):
    """Returns ``(text, payload, logic, emitted)``; ``emitted`` is raw document text."""
    if args.list or not args.name:
        names = ["two-intertwined", "three-chain", "pentagon", "cycle(n,k)"]
        return "\n".join(names), {"names": names}, None, None
    logic = catalog_logic(args.name)
    if args.emit:
        doc = LogicDocument(logic)
        return None, None, logic, serialize_json(doc) if args.json else serialize_dsl(doc)
    lines = [f"{args.name}: {logic.n_atoms} atoms, {logic.n_contexts} contexts"]
    lines += ["context " + " ".join(c) for c in logic.contexts]
    return "\n".join(lines), {"name": args.name, "contexts": [list(c) for c in logic.contexts]}, logic, None


COMMANDS = {
    "states": (cmd_states, "enumerate two-valued states"),
    "classify": (cmd_classify, "place the logic on the contextuality ladder"),
    "partition": (cmd_partition, "partition-logic representation"),
    "probs": (cmd_probs, "classical mixtures, or check a given probability section"),
    "hull": (cmd_hull, "exact classical-hull membership of a probability section"),
    "gadget": (cmd_gadget, "check an implication between atoms over all states"),
    "forep": (cmd_forep, "validate an orthogonal representation"),
    "born": (cmd_born, "Born-rule probabilities for a state vector"),
    "maxq": (cmd_maxq, "maximum quantum value of a sum of atoms"),
    "export-dot": (cmd_export_dot, "Graphviz export (bipartite atom/context graph)"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ctxlab", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="numeric tolerance")

    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.add_argument("input", help="path to a .ctx/.json file, or a catalog name")
        p.add_argument("--section", help="vec/prob section to use (default: 'default' or the first)")
        if name in ("probs", "hull"):
            p.add_argument("--prob", help="file with prob lines (DSL or JSON)")
        if name == "probs":
            p.add_argument("--weights", help="comma-separated mixing weights, e.g. 1/2,1/4,1/4")
        if name == "gadget":
            p.add_argument("--premises", required=True, help="comma-separated premise atoms")
            p.add_argument("--conclusion", required=True)
        if name in ("forep", "born", "maxq"):
            p.add_argument("--phi", type=_float_arg, help="use the two-context representation at this angle")
            p.add_argument("--umbrella", action="store_true", help="use the umbrella representation of an odd ring")
        if name == "born":
            p.add_argument("--psi", required=True, help="comma-separated unit state vector")
        if name == "maxq":
            p.add_argument("--targets", help="comma-separated atoms (default: intertwine atoms)")
        if name == "export-dot":
            p.add_argument("-o", "--output", help="write to this file instead of stdout")

    p = sub.add_parser("catalog", parents=[common], help="list or emit built-in logics")
    p.add_argument("name", nargs="?", help="e.g. pentagon or cycle(5,3)")
    p.add_argument("--list", action="store_true")
    p.add_argument("--emit", action="store_true", help="write the logic as DSL (JSON with --json)")
    return parser


def _float_arg(text: str) -> float:
    try:
        return _parse_real(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _report(args, summary, payload, warns, elapsed) -> str:
    report = {
        "command": args.command,
        "input": getattr(args, "input", None) or getattr(args, "name", None),
        "logic": summary,
        "result": payload,
        "warnings": warns,
    }
    if args.timing:
        report["timing_ms"] = round(elapsed * 1000, 3)
    return json.dumps(report, indent=2, default=_num)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args._warnings = []
    start = time.perf_counter()
    try:
        if args.command == "catalog":
            text, payload, logic, emitted = cmd_catalog(args)
            if logic is not None:
                args._warnings.extend(logic.warnings)
            if emitted is not None:
                for w in args._warnings:
                    print(f"warning: {w}", file=sys.stderr)
                sys.stdout.write(emitted)
                return EXIT_OK
            summary = _summary(logic) if logic is not None else None
        else:
            doc = _load_input(args.input)
            args._warnings.extend(doc.logic.warnings)
            func = COMMANDS[args.command][0]
            text, payload = func(args, doc)
            summary = _summary(doc.logic)
    except ParseError as exc:
        where = f"{args.input}:" if getattr(args, "input", None) else ""
        pos = f"{exc.line}:{exc.col or 1}: " if exc.line is not None else ""
        print(f"error: {where}{pos}{exc.message}", file=sys.stderr)
        return EXIT_INPUT
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    elapsed = time.perf_counter() - start

    for w in args._warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.json:
        print(_report(args, summary, payload, args._warnings, elapsed))
    else:
        print(text)
        if args.timing:
            print(f"time: {elapsed * 1000:.3f} ms", file=sys.stderr)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
