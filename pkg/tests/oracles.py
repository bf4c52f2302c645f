"""Independent reference implementations used to cross-check the library.

Deliberately naive: plain BFS, full cartesian-product enumeration.  Slow
past tiny sizes, which is fine; they exist to disagree with the fast
code, not to replace it.
"""

import itertools

from squaregap.graphcore import SimpleGraph


def bfs_square(g: SimpleGraph) -> SimpleGraph:
    """Distance-at-most-2 power computed by two-level BFS from every vertex."""
    adjacency = [sorted(g.neighbors(v)) for v in range(g.n)]
    edges = set()
    for s in range(g.n):
        reach = set(adjacency[s])
        for u in adjacency[s]:
            reach.update(adjacency[u])
        reach.discard(s)
        for t in reach:
            edges.add((min(s, t), max(s, t)))
    return SimpleGraph.from_edges(g.n, sorted(edges))


def enumerate_list_colorable(g: SimpleGraph, lists) -> bool:
    """Try every combination of per-vertex choices; no pruning at all."""
    domains = [sorted(lists[v]) for v in range(g.n)]
    if any(not d for d in domains):
        return False
    edge_list = g.edges()
    for combo in itertools.product(*domains):
        if all(combo[u] != combo[v] for u, v in edge_list):
            return True
    return False


def enumerate_chromatic(g: SimpleGraph) -> int:
    """Smallest k admitting a proper k-coloring, by full enumeration.

    Usable only for a handful of vertices (k**n colorings per candidate k).
    """
    if g.n == 0:
        return 0
    edge_list = g.edges()
    for k in range(1, g.n + 1):
        for combo in itertools.product(range(k), repeat=g.n):
            if all(combo[u] != combo[v] for u, v in edge_list):
                return k
    raise AssertionError("a graph on n vertices is always n-colorable")


def random_graph(rng, n: int, p: float) -> SimpleGraph:
    """G(n, p) with edges drawn from the supplied seeded Random instance."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)
