"""Deterministic text formats: DOT, DIMACS .col, and the JSON schemas.

Everything here is byte-stable: edges sorted (u, v) with u < v, JSON
emitted with sorted keys, no timestamps or machine-local data in any
payload.
"""

import json

from .coloring import GapCertificate, ListAssignment
from .construction import ConstructedGraph
from .graphcore import SimpleGraph
from .verification import LemmaReport


def json_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# -- DIMACS .col --------------------------------------------------------------


def graph_to_dimacs(g: SimpleGraph) -> str:
    lines = [f"p edge {g.n} {g.edge_count}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> SimpleGraph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if len(fields) != 4 or fields[1] != "edge":
                raise ValueError(f"line {lineno}: malformed problem line {line!r}")
            n = int(fields[2])
        elif fields[0] == "e":
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: malformed edge line {line!r}")
            edges.append((int(fields[1]) - 1, int(fields[2]) - 1))
        else:
            raise ValueError(f"line {lineno}: unknown record {fields[0]!r}")
    if n is None:
        raise ValueError("missing 'p edge' problem line")
    return SimpleGraph.from_edges(n, edges)


# -- DOT ----------------------------------------------------------------------


def graph_to_dot(g: SimpleGraph, labels: dict[int, str] | None = None) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        name = labels.get(v) if labels else None
        lines.append(f'  {v} [label="{name}"];' if name else f"  {v};")
    lines += [f"  {u} -- {v};" for u, v in g.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- graph JSON ---------------------------------------------------------------


def graph_to_json_dict(g: SimpleGraph, labels: dict[int, str] | None = None,
                       parts: dict[str, list[int]] | None = None,
                       cliques: dict[str, list[int]] | None = None) -> dict:
    doc = {
        "n_vertices": g.n,
        "edges": [[u, v] for u, v in g.edges()],
    }
    if labels is not None:
        doc["labels"] = {str(v): name for v, name in labels.items()}
    if parts is not None:
        doc["parts"] = {name: sorted(vs) for name, vs in parts.items()}
    if cliques is not None:
        doc["cliques"] = {name: sorted(vs) for name, vs in cliques.items()}
    return doc


def constructed_to_json_dict(gc: ConstructedGraph) -> dict:
    labels = {v: str(lab) for v, lab in enumerate(gc.labels)}
    parts = {f"P_{i}": list(s) for i, s in enumerate(gc.p_sets, start=1)}
    parts.update({f"Q_{i}": list(s) for i, s in enumerate(gc.q_sets, start=1)})
    cliques = {f"T_{j}": list(s) for j, s in enumerate(gc.t_sets, start=1)}
    return graph_to_json_dict(gc.graph, labels=labels, parts=parts, cliques=cliques)


def parse_graph_json(text: str) -> tuple[SimpleGraph, dict]:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "n_vertices" not in doc or "edges" not in doc:
        raise ValueError("graph JSON must carry n_vertices and edges")
    g = SimpleGraph.from_edges(int(doc["n_vertices"]),
                               [(int(u), int(v)) for u, v in doc["edges"]])
    return g, doc


def constructed_labels(gc: ConstructedGraph) -> dict[int, str]:
    return {v: str(lab) for v, lab in enumerate(gc.labels)}


# -- list-assignment JSON -----------------------------------------------------


def lists_to_json_dict(assignment: ListAssignment) -> dict:
    return {
        "universe": sorted(assignment.universe),
        "lists": {str(v): sorted(colors) for v, colors in assignment.lists.items()},
    }


def parse_lists_json(text: str) -> ListAssignment:
    doc = json.loads(text)
    if not isinstance(doc, dict) or "universe" not in doc or "lists" not in doc:
        raise ValueError("lists JSON must carry universe and lists")
    universe = tuple(sorted(int(c) for c in doc["universe"]))
    lists = {int(v): frozenset(int(c) for c in colors)
             for v, colors in doc["lists"].items()}
    return ListAssignment(universe=universe, lists=lists)


# -- reports and certificates -------------------------------------------------


def report_to_json_dict(report: LemmaReport) -> dict:
    return {
        "lemma_id": report.lemma_id,
        "checked_cases": report.checked_cases,
        "passed": report.passed,
        "witness": list(report.witness) if report.witness is not None else None,
        "failure_count": report.failure_count,
    }


def certificate_to_json_dict(cert: GapCertificate) -> dict:
    return {
        "n": cert.n,
        "chromatic": cert.chromatic,
        "chromatic_coloring": list(cert.chromatic_coloring),
        "not_choosable": cert.list_bound,
        "gap_lower": cert.gap_lower,
        "blocks": [list(b) for b in cert.blocks],
        "refuted_lists": lists_to_json_dict(cert.refuted_assignment),
        "refutation": {
            "nodes": cert.attestation.nodes,
            "complete": cert.attestation.complete,
        },
    }
