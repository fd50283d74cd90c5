import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import component_count, graphs, naive_distances
from lapfam import (
    Combination,
    DisconnectedGraphError,
    Graph,
    Resolver,
    all_pairs_distances,
    are_adjacency_equal,
    bfs_distances,
    degree_sequence,
    diameter,
    disjoint_union,
    eccentricities,
    join,
    permuted,
    radius,
)


class TestConstruction:
    def test_basic(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert g.n == 3
        assert g.edge_count == 2
        assert g.adjacent(0, 1) and g.adjacent(1, 0)
        assert not g.adjacent(0, 2)

    def test_duplicate_edges_collapse(self):
        g = Graph(2, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count == 1

    def test_edge_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(2, [(0, 2)])

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError):
            Graph(2, [(1, 1)])

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            Graph(-1)

    def test_label_count_must_match(self):
        with pytest.raises(ValueError):
            Graph(2, [], [Combination((1,))])

    def test_labels_must_be_distinct(self):
        with pytest.raises(ValueError):
            Graph(2, [], [Resolver(1), Resolver(1)])

    def test_partial_labels_allowed(self):
        g = Graph(2, [], [Resolver(1), None])
        assert g.labels == (Resolver(1), None)

    def test_complete(self):
        k4 = Graph.complete(4)
        assert k4.edge_count == 6
        assert all(k4.degree(v) == 3 for v in range(4))

    def test_path(self):
        p4 = Graph.path(4)
        assert p4.edge_count == 3
        assert degree_sequence(p4) == [2, 2, 1, 1]

    def test_edges_sorted(self):
        g = Graph(4, [(3, 2), (1, 0), (0, 2)])
        assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]


class TestLabels:
    def test_combination_str(self):
        assert str(Combination((1, 1, 2))) == "112"
        assert str(Combination((2, 10))) == "2-10"

    def test_combination_ones(self):
        assert Combination((1, 1, 3)).ones == 2
        assert Combination((2, 2)).ones == 0

    def test_combination_must_be_nondecreasing(self):
        with pytest.raises(ValueError):
            Combination((2, 1))

    def test_combination_entries_positive(self):
        with pytest.raises(ValueError):
            Combination((0, 1))

    def test_resolver(self):
        assert str(Resolver(3)) == "w3"
        with pytest.raises(ValueError):
            Resolver(0)


class TestDistances:
    def test_path_distances(self):
        assert bfs_distances(Graph.path(4), 0) == [0, 1, 2, 3]

    def test_unreachable_is_none(self):
        assert bfs_distances(Graph(3, [(0, 1)]), 0) == [0, 1, None]

    def test_bad_source(self):
        with pytest.raises(IndexError):
            bfs_distances(Graph(2), 5)

    @given(graphs(), st.data())
    @settings(max_examples=60)
    def test_matches_queue_bfs(self, g, data):
        """Bitset BFS agrees with a plain deque BFS on arbitrary graphs."""
        source = data.draw(st.integers(min_value=0, max_value=g.n - 1))
        assert bfs_distances(g, source) == naive_distances(g, source)

    @given(graphs(max_n=6))
    @settings(max_examples=40)
    def test_all_pairs_symmetric(self, g):
        dist = all_pairs_distances(g)
        for u in range(g.n):
            for v in range(g.n):
                assert dist[u][v] == dist[v][u]


class TestEccentricity:
    def test_path(self):
        p5 = Graph.path(5)
        assert eccentricities(p5) == [4, 3, 2, 3, 4]
        assert diameter(p5) == 4
        assert radius(p5) == 2

    def test_complete(self):
        assert diameter(Graph.complete(4)) == 1
        assert radius(Graph.complete(4)) == 1

    def test_single_vertex(self):
        assert diameter(Graph(1)) == 0

    def test_disconnected_raises(self):
        with pytest.raises(DisconnectedGraphError):
            eccentricities(Graph(2))

    def test_empty_graph_raises(self):
        with pytest.raises(ValueError):
            eccentricities(Graph(0))


class TestUnionJoin:
    def test_union_shifts_second(self):
        g = disjoint_union(Graph.path(2), Graph.path(3))
        assert g.n == 5
        assert list(g.edges()) == [(0, 1), (2, 3), (3, 4)]

    def test_join_adds_cross_edges(self):
        g = join(Graph(1), Graph.path(2))
        assert g.n == 3
        assert g.edge_count == 3  # triangle

    def test_union_keeps_labels(self):
        a = Graph(1, (), (Combination((1,)),))
        b = Graph(1, (), (Resolver(1),))
        assert disjoint_union(a, b).labels == (Combination((1,)), Resolver(1))

    def test_union_drops_duplicate_label(self):
        # collision keeps the first copy, second vertex becomes unlabeled
        a = Graph(1, (), (Resolver(1),))
        b = Graph(1, (), (Resolver(1),))
        assert disjoint_union(a, b).labels == (Resolver(1), None)

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=40)
    def test_join_counts(self, a, b):
        g = join(a, b)
        assert g.n == a.n + b.n
        assert g.edge_count == a.edge_count + b.edge_count + a.n * b.n

    @given(graphs(max_n=5), graphs(max_n=5))
    @settings(max_examples=40)
    def test_union_component_count(self, a, b):
        u = disjoint_union(a, b)
        assert component_count(u) == component_count(a) + component_count(b)


class TestPermuted:
    def test_reverse_path(self):
        g = permuted(Graph.path(3), [2, 1, 0])
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_labels_follow(self):
        g = Graph(2, [(0, 1)], (Combination((1,)), Combination((2,))))
        h = permuted(g, [1, 0])
        assert h.labels == (Combination((2,)), Combination((1,)))

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            permuted(Graph(2), [0, 0])

    @given(graphs(max_n=6), st.randoms())
    @settings(max_examples=40)
    def test_roundtrip(self, g, rng):
        order = list(range(g.n))
        rng.shuffle(order)
        h = permuted(g, order)
        assert degree_sequence(h) == degree_sequence(g)
        inverse = [0] * g.n
        for new, old in enumerate(order):
            inverse[old] = new
        assert are_adjacency_equal(permuted(h, inverse), g)


def test_adjacency_equal_size_mismatch():
    with pytest.raises(ValueError):
        are_adjacency_equal(Graph(2), Graph(3))


def test_adjacency_equal_ignores_labels():
    a = Graph(2, [(0, 1)], (Resolver(1), Resolver(2)))
    b = Graph(2, [(0, 1)])
    assert are_adjacency_equal(a, b)
