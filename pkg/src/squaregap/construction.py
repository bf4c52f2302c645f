"""The counterexample graph whose square is complete multipartite.

For prime n >= 3 the graph has n^2 "v" vertices grouped both into rows
P_1..P_n and into columns T_1..T_n, plus n(n-1) "w" vertices grouped
into Q_1..Q_{n-1}.  Each column T_j is a clique, and w_{i,j} is joined
to the v-vertices named by row j of the i-th Latin square: one neighbor
in every P_k and one in every T_k.
"""

from dataclasses import dataclass

from .graphcore import SimpleGraph
from .latin import LatinSquare, build_mols_family, require_prime


@dataclass(frozen=True)
class VertexLabel:
    """1-based (kind, i, j) name of a vertex; kind is "v" or "w"."""

    kind: str
    i: int
    j: int

    def __str__(self):
        return f"{self.kind}_{self.i}_{self.j}"


@dataclass(frozen=True)
class ConstructedGraph:
    n: int
    graph: SimpleGraph
    labels: tuple[VertexLabel, ...]  # index -> label
    p_sets: tuple[tuple[int, ...], ...]  # P_1..P_n
    q_sets: tuple[tuple[int, ...], ...]  # Q_1..Q_{n-1}
    t_sets: tuple[tuple[int, ...], ...]  # T_1..T_n
    squares: tuple[LatinSquare, ...]

    def v_index(self, i: int, j: int) -> int:
        """Vertex index of v_{i,j} (row i, position j), 1-based arguments."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"v_{{{i},{j}}} out of range for n={self.n}")
        return (i - 1) * self.n + (j - 1)

    def w_index(self, i: int, j: int) -> int:
        """Vertex index of w_{i,j} (group i, position j), 1-based arguments."""
        if not (1 <= i <= self.n - 1 and 1 <= j <= self.n):
            raise ValueError(f"w_{{{i},{j}}} out of range for n={self.n}")
        return self.n * self.n + (i - 1) * self.n + (j - 1)

    @property
    def p_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.n * self.n))

    @property
    def q_vertices(self) -> tuple[int, ...]:
        return tuple(range(self.n * self.n, 2 * self.n * self.n - self.n))


def _labels(n: int) -> tuple[VertexLabel, ...]:
    out = [VertexLabel("v", i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out += [VertexLabel("w", i, j) for i in range(1, n) for j in range(1, n + 1)]
    return tuple(out)


def construct_counterexample(n: int) -> ConstructedGraph:
    """Build the 2n^2 - n vertex graph for prime n >= 3.

    Edge set is the union of the Latin-row stars (each w_{i,j} to the
    v-vertices on row j of square i) and the column cliques T_1..T_n.
    Insertion is set-based, so duplicates are harmless.
    """
    require_prime(n)
    if n < 3:
        raise ValueError(f"n must be a prime >= 3, got {n}")
    family = build_mols_family(n)

    def v_idx(i, j):
        return (i - 1) * n + (j - 1)

    def w_idx(i, j):
        return n * n + (i - 1) * n + (j - 1)

    edges: set[tuple[int, int]] = set()
    for i in range(1, n):  # star edges, one per (w, column)
        sq = family.squares[i - 1]
        for j in range(1, n + 1):
            w = w_idx(i, j)
            for k in range(1, n + 1):
                edges.add((w, v_idx(k, sq(j, k))))
    for j in range(1, n + 1):  # clique edges inside each column T_j
        col = [v_idx(i, j) for i in range(1, n + 1)]
        for a in range(n):
            for b in range(a + 1, n):
                edges.add((col[a], col[b]))

    graph = SimpleGraph.from_edges(2 * n * n - n, sorted(edges))
    p_sets = tuple(tuple(v_idx(i, j) for j in range(1, n + 1)) for i in range(1, n + 1))
    q_sets = tuple(tuple(w_idx(i, j) for j in range(1, n + 1)) for i in range(1, n))
    t_sets = tuple(tuple(v_idx(i, j) for i in range(1, n + 1)) for j in range(1, n + 1))
    return ConstructedGraph(n=n, graph=graph, labels=_labels(n), p_sets=p_sets,
                            q_sets=q_sets, t_sets=t_sets, squares=family.squares)


def neighbors_of_w(n: int, i: int, j: int) -> list[VertexLabel]:
    """The neighbor list of w_{i,j}: row j of square i read as column positions."""
    require_prime(n)
    if n < 3:
        raise ValueError(f"n must be a prime >= 3, got {n}")
    if not (1 <= i <= n - 1 and 1 <= j <= n):
        raise ValueError(f"w_{{{i},{j}}} out of range for n={n}")
    family = build_mols_family(n)
    sq = family.squares[i - 1]
    return [VertexLabel("v", k, sq(j, k)) for k in range(1, n + 1)]


def t_set(gc: ConstructedGraph, j: int) -> tuple[int, ...]:
    """Vertex indices of the column clique T_j."""
    if not 1 <= j <= gc.n:
        raise ValueError(f"j must be in 1..{gc.n}, got {j}")
    return gc.t_sets[j - 1]
