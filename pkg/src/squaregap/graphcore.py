"""Simple-graph representation and generic structural operations.

Vertices are dense integers 0..n-1.  Each vertex's neighborhood is one
Python int used as a bit row, so the hot operations everywhere else in
the package (shared-neighbor tests, independence checks, color-set
arithmetic) are single AND/OR/popcount steps.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .errors import CapacityError

SQUARE_ORACLE_MAX_VERTICES = 512


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1, immutable after construction."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise ValueError(f"adjacency has {len(adj)} rows for {n} vertices")
        full = (1 << n) - 1
        for u, row in enumerate(adj):
            if row >> n:
                raise ValueError(f"row {u} mentions vertices >= {n}")
            if row & (1 << u):
                raise ValueError(f"vertex {u} is adjacent to itself")
            if row & ~full:
                raise ValueError(f"row {u} out of range")
        for u in range(n):
            for v in bits(adj[u]):
                if not adj[v] & (1 << u):
                    raise ValueError(f"adjacency not symmetric at ({u},{v})")
        self.n = n
        self.adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "SimpleGraph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for {n} vertices")
            if u == v:
                raise ValueError(f"self-loop at {u} not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "SimpleGraph":
        return cls(n, (0,) * n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            for d in bits(row):
                out.append((u, u + 1 + d))
        return out

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimpleGraph)
                and self.n == other.n and self.adj == other.adj)

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"SimpleGraph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class PartitionWitness:
    """Ordered disjoint nonempty vertex sets covering a whole vertex set."""

    parts: tuple[tuple[int, ...], ...]  # each part sorted ascending

    def covers(self, n: int) -> bool:
        seen: set[int] = set()
        total = 0
        for part in self.parts:
            if not part:
                return False
            seen.update(part)
            total += len(part)
        return total == n and seen == set(range(n))

    def part_masks(self) -> list[int]:
        return [_mask(part) for part in self.parts]


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def _check_subset(g: SimpleGraph, s: Iterable[int]) -> int:
    m = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for {g.n} vertices")
        m |= 1 << v
    return m


def square(g: SimpleGraph) -> SimpleGraph:
    """The distance-<=2 power: u ~ v iff adjacent or sharing a neighbor in g."""
    rows = []
    for u in range(g.n):
        row = g.adj[u]
        for v in bits(g.adj[u]):
            row |= g.adj[v]
        rows.append(row & ~(1 << u))
    return SimpleGraph(g.n, tuple(rows))


def square_oracle(g: SimpleGraph) -> SimpleGraph:
    """Independent route to square(g): boolean A OR A@A with the diagonal cleared.

    Dense n x n matrices; refuses graphs beyond the size guard.
    """
    if g.n > SQUARE_ORACLE_MAX_VERTICES:
        raise CapacityError(
            f"square_oracle limited to {SQUARE_ORACLE_MAX_VERTICES} vertices, got {g.n}")
    a = np.zeros((g.n, g.n), dtype=bool)
    for u, v in g.edges():
        a[u, v] = a[v, u] = True
    two = a | (a @ a)
    np.fill_diagonal(two, False)
    edges = [(int(u), int(v)) for u, v in zip(*np.nonzero(np.triu(two)))]
    return SimpleGraph.from_edges(g.n, edges)


def induced_subgraph(g: SimpleGraph, s: Iterable[int]) -> tuple[SimpleGraph, list[int]]:
    """Subgraph on s, reindexed 0..|s|-1; returns (subgraph, new->old index map)."""
    _check_subset(g, s)
    old = sorted(set(s))
    pos = {v: i for i, v in enumerate(old)}
    edges = [(pos[u], pos[v]) for u in old for v in bits(g.adj[u]) if v in pos and u < v]
    return SimpleGraph.from_edges(len(old), edges), old


def is_independent_set(g: SimpleGraph, s: Iterable[int]) -> bool:
    m = _check_subset(g, s)
    return all(g.adj[v] & m == 0 for v in bits(m))


def is_clique(g: SimpleGraph, s: Iterable[int]) -> bool:
    m = _check_subset(g, s)
    want = m  # each member must see every other member
    return all((g.adj[v] | (1 << v)) & m == want for v in bits(m))


def is_complete_multipartite(g: SimpleGraph, w: PartitionWitness) -> bool:
    """True iff every part is independent and every cross-part pair is adjacent.

    Equivalently: each vertex's adjacency row is exactly "everything outside
    my part", which is what gets checked.
    """
    if not w.covers(g.n):
        raise ValueError("witness is not a partition of the vertex set")
    full = (1 << g.n) - 1
    for part_mask in w.part_masks():
        want = full & ~part_mask
        for v in bits(part_mask):
            if g.adj[v] != want:
                return False
    return True


def complete_multipartite(part_sizes: Iterable[int]) -> tuple[SimpleGraph, PartitionWitness]:
    """Canonical K with the given part sizes; parts are consecutive index blocks."""
    sizes = list(part_sizes)
    if any(s <= 0 for s in sizes):
        raise ValueError(f"part sizes must be positive, got {sizes}")
    n = sum(sizes)
    parts = []
    start = 0
    for s in sizes:
        parts.append(tuple(range(start, start + s)))
        start += s
    witness = PartitionWitness(parts=tuple(parts))
    full = (1 << n) - 1
    rows = []
    for part_mask in witness.part_masks():
        rows.extend([full & ~part_mask] * part_mask.bit_count())
    return SimpleGraph(n, tuple(rows)), witness


# -- subdivision and total graph ------------------------------------------
#
# Both place the original vertices first and one vertex per edge after them,
# edge vertices ordered by lexicographic (u, v) with u < v.  The shared
# deterministic labeling makes "square of subdivision equals total graph"
# an exact graph equality rather than an isomorphism search.

VertexKind = tuple[str, object]  # ("vertex", v) or ("edge", (u, v))


@dataclass(frozen=True)
class ExpandedGraph:
    """A graph over V(g) plus one vertex per edge of g, with origin labels."""

    graph: SimpleGraph
    labels: tuple[VertexKind, ...]


def _expansion_labels(g: SimpleGraph) -> tuple[list[tuple[int, int]], tuple[VertexKind, ...]]:
    edge_list = g.edges()
    labels = tuple(("vertex", v) for v in range(g.n)) + tuple(
        ("edge", e) for e in edge_list)
    return edge_list, labels


def subdivision(g: SimpleGraph) -> ExpandedGraph:
    """Replace every edge uv by the path u - m_uv - v through a fresh midpoint."""
    edge_list, labels = _expansion_labels(g)
    edges = []
    for idx, (u, v) in enumerate(edge_list):
        m = g.n + idx
        edges.append((u, m))
        edges.append((v, m))
    return ExpandedGraph(SimpleGraph.from_edges(g.n + len(edge_list), edges), labels)


def total_graph(g: SimpleGraph) -> ExpandedGraph:
    """Vertices plus edges of g; adjacency by vertex-adjacency, edge-adjacency, incidence."""
    edge_list, labels = _expansion_labels(g)
    edges = list(g.edges())
    for idx, (u, v) in enumerate(edge_list):
        m = g.n + idx
        edges.append((u, m))
        edges.append((v, m))
        for jdx in range(idx + 1, len(edge_list)):
            x, y = edge_list[jdx]
            if x in (u, v) or y in (u, v):
                edges.append((m, g.n + jdx))
    return ExpandedGraph(SimpleGraph.from_edges(g.n + len(edge_list), edges), labels)
