"""Command-line surface: construct, verify, certify, solve-list, mols.

Payloads go to stdout and are byte-identical across identical
invocations; the run envelope (outcome, elapsed milliseconds) goes to
stderr.  Exit codes: 0 pass, 1 check failure or UNSAT, 2 invalid
parameters or unparsable input, 3 I/O failure, 4 budget exhausted.
"""

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass

from . import coloring, serialize, verification
from .construction import construct_counterexample
from .errors import CapacityError, SearchBudgetExceeded
from .graphcore import SimpleGraph, square
from .latin import are_orthogonal, build_mols_family, is_latin

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_BAD_PARAMS = 2
EXIT_IO = 3
EXIT_BUDGET = 4

log = logging.getLogger("squaregap")


@dataclass
class RunReport:
    command: str
    parameters: dict
    outcome: str  # pass | fail | error
    payload: str  # exactly what went to stdout
    elapsed_ms: int

    def envelope(self) -> str:
        return json.dumps({
            "command": self.command,
            "parameters": self.parameters,
            "outcome": self.outcome,
            "elapsed_ms": self.elapsed_ms,
        }, sort_keys=True)


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="squaregap",
        description="Construct graphs whose squares are complete multipartite "
                    "and certify the gap between choosability and chromatic number.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build the graph and serialize it")
    p.add_argument("--n", type=int, required=True, help="prime order, at least 3")
    p.add_argument("--format", choices=["dot", "dimacs", "json"], default="json")
    p.add_argument("--output", help="write here instead of stdout")

    p = sub.add_parser("verify", help="run the structural checks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lemma", choices=["all", "nw", "nv", "independence", "pq", "structure"],
                   default="all")

    p = sub.add_parser("certify", help="emit a choosability-gap certificate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget-seconds", type=float, default=None)

    p = sub.add_parser("solve-list", help="decide list-colorability of a graph file")
    p.add_argument("--graph", required=True, help="graph in DIMACS .col or graph JSON")
    p.add_argument("--lists", required=True, help="list assignment JSON")

    p = sub.add_parser("mols", help="print the orthogonal Latin square family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="re-validate Latin and orthogonality properties")

    return parser.parse_args(argv)


def _cmd_construct(args) -> tuple[str, str]:
    gc = construct_counterexample(args.n)
    if args.format == "dimacs":
        payload = serialize.graph_to_dimacs(gc.graph)
    elif args.format == "dot":
        payload = serialize.graph_to_dot(gc.graph, serialize.constructed_labels(gc))
    else:
        payload = serialize.json_dumps(serialize.constructed_to_json_dict(gc))
    return "pass", payload


def _cmd_verify(args) -> tuple[str, str]:
    gc = construct_counterexample(args.n)
    if args.lemma == "all":
        reports = verification.run_all_checks(gc)
    elif args.lemma == "structure":
        _, report = verification.check_square_structure(gc)
        reports = {"structure": report}
    else:
        sq = square(gc.graph)
        reports = {
            "nw": lambda: verification.check_lemma_nw(gc),
            "nv": lambda: verification.check_lemma_nv(gc),
            "independence": lambda: verification.check_independence(sq, gc),
            "pq": lambda: verification.check_pq_adjacency(sq, gc),
        }[args.lemma]()
        reports = {args.lemma: reports}
    all_passed = all(r.passed for r in reports.values())
    doc = {
        "n": args.n,
        "lemma": args.lemma,
        "reports": {name: serialize.report_to_json_dict(r) for name, r in reports.items()},
        "all_passed": all_passed,
    }
    if "structure" in reports:
        witness, _ = verification.check_square_structure(gc)
        doc["structure_parts"] = {
            "count": len(witness.parts),
            "sizes": [len(p) for p in witness.parts],
        }
    return ("pass" if all_passed else "fail"), serialize.json_dumps(doc)


def _cmd_certify(args) -> tuple[str, str]:
    cert = coloring.certify_gap(args.n, budget_seconds=args.budget_seconds)
    return "pass", serialize.json_dumps(serialize.certificate_to_json_dict(cert))


def _load_graph_file(path: str) -> SimpleGraph:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        g, _ = serialize.parse_graph_json(text)
        return g
    return serialize.parse_dimacs(text)


def _cmd_solve_list(args) -> tuple[str, str]:
    g = _load_graph_file(args.graph)
    with open(args.lists, encoding="utf-8") as fh:
        assignment = serialize.parse_lists_json(fh.read())
    result = coloring.is_list_colorable(g, assignment)
    doc = {
        "satisfiable": result.satisfiable,
        "nodes": result.attestation.nodes,
        "complete": result.attestation.complete,
    }
    if result.satisfiable:
        doc["coloring"] = {str(v): c for v, c in result.coloring.items()}
    if result.attestation.empty_list_vertex is not None:
        doc["empty_list_vertex"] = result.attestation.empty_list_vertex
    return ("pass" if result.satisfiable else "fail"), serialize.json_dumps(doc)


def _cmd_mols(args) -> tuple[str, str]:
    family = build_mols_family(args.n)
    lines = []
    for i, sq in enumerate(family.squares, start=1):
        lines.append(f"L_{i}")
        for row in sq.entries:
            lines.append(" ".join(str(int(x)) for x in row))
        lines.append("")
    outcome = "pass"
    if args.check:
        latin_ok = all(is_latin(sq.entries) for sq in family.squares)
        orth_ok = all(are_orthogonal(family.squares[a], family.squares[b])
                      for a in range(len(family.squares))
                      for b in range(a + 1, len(family.squares)))
        lines.append(f"latin: {'ok' if latin_ok else 'FAILED'}")
        lines.append(f"orthogonal: {'ok' if orth_ok else 'FAILED'}")
        if not (latin_ok and orth_ok):
            outcome = "fail"
    return outcome, "\n".join(lines) + "\n"


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "certify": _cmd_certify,
    "solve-list": _cmd_solve_list,
    "mols": _cmd_mols,
}


def main(argv=None) -> int:
    args = _parse_args(argv)
    level = os.environ.get("SQUAREGAP_LOG", "warning").upper()
    logging.basicConfig(stream=sys.stderr, level=getattr(logging, level, logging.WARNING))
    started = time.perf_counter()
    parameters = {k: v for k, v in vars(args).items() if k != "command"}
    payload = ""
    try:
        outcome, payload = _HANDLERS[args.command](args)
        code = EXIT_PASS if outcome == "pass" else EXIT_FAIL
    except (ValueError, CapacityError) as exc:
        print(f"squaregap {args.command}: {exc}", file=sys.stderr)
        outcome, code = "error", EXIT_BAD_PARAMS
    except SearchBudgetExceeded as exc:
        print(f"squaregap {args.command}: {exc} (nodes={exc.nodes})", file=sys.stderr)
        outcome, code = "error", EXIT_BUDGET
    except OSError as exc:
        print(f"squaregap {args.command}: {exc}", file=sys.stderr)
        outcome, code = "error", EXIT_IO
    else:
        output_path = getattr(args, "output", None)
        try:
            if output_path:
                with open(output_path, "w", encoding="utf-8") as fh:
                    fh.write(payload)
            else:
                sys.stdout.write(payload)
        except OSError as exc:
            print(f"squaregap {args.command}: {exc}", file=sys.stderr)
            outcome, code = "error", EXIT_IO
    elapsed_ms = int((time.perf_counter() - started) * 1000)
    report = RunReport(command=args.command, parameters=parameters,
                       outcome=outcome, payload=payload, elapsed_ms=elapsed_ms)
    print(report.envelope(), file=sys.stderr)
    log.debug("finished %s with outcome %s", args.command, outcome)
    return code


if __name__ == "__main__":
    sys.exit(main())
