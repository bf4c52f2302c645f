import itertools
import random

import pytest

from oracles import bfs_square, random_graph
from squaregap.errors import CapacityError
from squaregap.graphcore import (
    PartitionWitness,
    SimpleGraph,
    bits,
    complete_multipartite,
    induced_subgraph,
    is_clique,
    is_complete_multipartite,
    is_independent_set,
    square,
    square_oracle,
    subdivision,
    total_graph,
)


def path(n):
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n):
    return SimpleGraph.from_edges(n, list(itertools.combinations(range(n), 2)))


def test_bits_iterates_ascending():
    assert list(bits(0)) == []
    assert list(bits(0b101101)) == [0, 2, 3, 5]


def test_rejects_self_loop():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        SimpleGraph(2, (0b01, 0b01))  # vertex 0 adjacent to itself


def test_rejects_asymmetric_adjacency():
    with pytest.raises(ValueError):
        SimpleGraph(2, (0b10, 0b00))


def test_rejects_out_of_range():
    with pytest.raises(ValueError):
        SimpleGraph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        SimpleGraph(1, (0b10,))


def test_edges_sorted_and_counted():
    g = SimpleGraph.from_edges(4, [(2, 3), (0, 1), (1, 3)])
    assert g.edges() == [(0, 1), (1, 3), (2, 3)]
    assert g.edge_count == 3
    assert g.degree(1) == 2 and g.degree(2) == 1
    assert sorted(g.neighbors(3)) == [1, 2]
    assert g.has_edge(3, 1) and not g.has_edge(0, 2)


def test_square_of_path():
    # P5 squared: each vertex also sees the vertex two steps away
    g = square(path(5))
    assert g.edges() == [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]


def test_square_of_five_cycle_is_complete():
    assert square(cycle(5)) == complete(5)


def test_square_of_star_is_complete():
    star = SimpleGraph.from_edges(5, [(0, i) for i in range(1, 5)])
    assert square(star) == complete(5)


def test_square_fixed_points():
    # squaring is the identity on complete graphs and on edgeless graphs
    assert square(complete(4)) == complete(4)
    assert square(SimpleGraph.empty(6)) == SimpleGraph.empty(6)


def test_square_three_ways_on_random_graphs():
    # bitset implementation vs numpy matrix oracle vs plain BFS
    rng = random.Random(20210)
    for trial in range(200):
        n = rng.randint(1, 40)
        g = random_graph(rng, n, rng.choice([0.05, 0.15, 0.3, 0.6]))
        fast = square(g)
        assert fast == square_oracle(g), f"trial {trial}"
        assert fast == bfs_square(g), f"trial {trial}"


def test_square_oracle_capacity_guard():
    with pytest.raises(CapacityError):
        square_oracle(SimpleGraph.empty(513))
    assert square_oracle(SimpleGraph.empty(512)) == SimpleGraph.empty(512)


def test_induced_subgraph():
    g = cycle(6)
    sub, old = induced_subgraph(g, [0, 1, 2, 5])
    assert old == [0, 1, 2, 5]
    assert sub.edges() == [(0, 1), (0, 3), (1, 2)]  # 0-1, 0-5, 1-2 relabeled
    with pytest.raises(ValueError):
        induced_subgraph(g, [0, 6])


def test_induced_subgraph_preserves_adjacency():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, 12, 0.4)
        keep = [v for v in range(12) if rng.random() < 0.6]
        sub, old = induced_subgraph(g, keep)
        for a in range(sub.n):
            for b in range(a + 1, sub.n):
                assert sub.has_edge(a, b) == g.has_edge(old[a], old[b])


def test_independent_set_and_clique():
    g = cycle(6)
    assert is_independent_set(g, [0, 2, 4])
    assert not is_independent_set(g, [0, 1])
    assert is_independent_set(g, [])
    assert is_clique(g, [0, 1])
    assert not is_clique(g, [0, 1, 2])
    assert is_clique(complete(4), range(4))
    with pytest.raises(ValueError):
        is_clique(g, [0, 9])


def test_partition_witness_covers():
    w = PartitionWitness(parts=((0, 1), (2,)))
    assert w.covers(3)
    assert not w.covers(4)
    assert not PartitionWitness(parts=((0, 1), (1, 2))).covers(3)  # overlap
    assert not PartitionWitness(parts=((0,), ())).covers(1)  # empty part


def test_complete_multipartite_builder_and_recognizer():
    g, w = complete_multipartite([2, 3, 1])
    assert g.n == 6
    assert g.edge_count == 2 * 3 + 2 * 1 + 3 * 1
    assert w.parts == ((0, 1), (2, 3, 4), (5,))
    assert is_complete_multipartite(g, w)


def test_recognizer_rejects_perturbations():
    g, w = complete_multipartite([2, 2])
    # edge inside a part
    bad1 = SimpleGraph.from_edges(4, g.edges() + [(0, 1)])
    assert not is_complete_multipartite(bad1, w)
    # missing cross edge
    bad2 = SimpleGraph.from_edges(4, [e for e in g.edges() if e != (0, 2)])
    assert not is_complete_multipartite(bad2, w)
    # wrong witness for the right graph
    with_swapped = PartitionWitness(parts=((0, 2), (1, 3)))
    assert not is_complete_multipartite(g, with_swapped)


def test_recognizer_requires_partition():
    g, _ = complete_multipartite([2, 2])
    with pytest.raises(ValueError):
        is_complete_multipartite(g, PartitionWitness(parts=((0, 1),)))


def test_complete_multipartite_rejects_empty_part():
    with pytest.raises(ValueError):
        complete_multipartite([2, 0, 1])


def test_subdivision_of_triangle_is_six_cycle():
    sub = subdivision(complete(3))
    assert sub.graph.n == 6
    assert sub.graph.edge_count == 6
    assert all(sub.graph.degree(v) == 2 for v in range(6))
    assert sub.labels[:3] == (("vertex", 0), ("vertex", 1), ("vertex", 2))
    assert sub.labels[3:] == (("edge", (0, 1)), ("edge", (0, 2)), ("edge", (1, 2)))


def test_total_graph_of_triangle_is_octahedron():
    tot = total_graph(complete(3))
    assert tot.graph.n == 6
    assert tot.graph.edge_count == 12
    assert all(tot.graph.degree(v) == 4 for v in range(6))
    # complete tripartite with parts {vertex, opposite edge}
    w = PartitionWitness(parts=((0, 5), (1, 4), (2, 3)))
    assert is_complete_multipartite(tot.graph, w)


def test_total_graph_of_path():
    # P3 = 0-1-2: total graph is vertices {0,1,2} plus midpoints {3,4}
    tot = total_graph(path(3))
    assert tot.graph.edges() == [(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]


def test_square_of_subdivision_is_total_graph_exhaustive():
    # every graph on 5 labeled vertices, all 2^10 edge subsets
    slots = list(itertools.combinations(range(5), 2))
    for picks in itertools.product([0, 1], repeat=len(slots)):
        g = SimpleGraph.from_edges(5, [e for e, take in zip(slots, picks) if take])
        sub = subdivision(g)
        tot = total_graph(g)
        assert sub.labels == tot.labels
        assert square(sub.graph) == tot.graph


def test_square_of_subdivision_on_random_larger_graphs():
    rng = random.Random(99)
    for _ in range(100):
        g = random_graph(rng, rng.randint(6, 9), 0.5)
        assert square(subdivision(g).graph) == total_graph(g).graph
