"""Tests for graph representations and predicates."""

import networkx as nx
import pytest

from src.exceptions import ConsistencyError, DomainError, InvalidBipartitionError
from src.graphs.core import (
    BipartiteGraph,
    Graph,
    GraphBuilder,
    Part,
    PathView,
    bipartition_check,
    cut_vertices,
    is_biconnected,
    is_connected,
    min_degree,
)
from src.graphs.generators import (
    complete,
    complete_bipartite,
    cycle,
    even_cycle_bipartite,
    path,
    philox,
    random_graph,
    random_path,
    relabel,
    star,
)


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


class TestGraph:
    """Immutable bitset graph."""

    def test_from_edges(self):
        g = Graph.from_edges(4, [(0, 1), (2, 1), (3, 0)])

        assert g.size == 3
        assert g.degrees() == [2, 2, 1, 1]
        assert list(g.edges()) == [(0, 1), (0, 3), (1, 2)]
        assert g.has_edge(1, 0)
        assert not g.has_edge(2, 3)

    def test_asymmetric_rows_rejected(self):
        with pytest.raises(ConsistencyError):
            Graph(2, (0b10, 0))

    def test_self_loop_rejected(self):
        with pytest.raises(ConsistencyError):
            Graph(1, (0b1,))
        with pytest.raises(ConsistencyError):
            GraphBuilder(3).add_edge(1, 1)

    def test_edge_out_of_range(self):
        with pytest.raises(DomainError):
            GraphBuilder(3).add_edge(0, 3)

    def test_with_edges_returns_copy(self):
        g = path(3)
        h = g.with_edges([(0, 2)])

        assert g.size == 2
        assert h.size == 3

    def test_induced_degree(self):
        g = complete(5)

        assert g.induced_degree(0, 0b00110) == 2

    def test_wide_rows(self):
        """Orders beyond one machine word behave the same."""
        g = cycle(70)

        assert g.size == 70
        assert g.has_edge(69, 0)
        assert is_connected(g)

    def test_families(self):
        assert complete(5).size == 10
        assert star(4).degree(0) == 4
        assert complete_bipartite(3, 4).graph.size == 12
        assert even_cycle_bipartite(4).graph.size == 8


class TestBipartiteGraph:
    """Bipartition invariants."""

    def test_from_parts(self):
        bg = BipartiteGraph.from_parts(2, 3, [(0, 2), (1, 4)])

        assert bg.n == 2
        assert bg.b == 3
        assert bg.part_of(0) is Part.X
        assert bg.part_of(4) is Part.Y
        assert bg.is_standard()

    def test_intra_part_edge_rejected(self):
        with pytest.raises(InvalidBipartitionError) as info:
            BipartiteGraph.from_parts(2, 2, [(0, 1)])

        assert info.value.edge == (0, 1)

    def test_bipartition_check_labels(self):
        g = path(4)
        bg = bipartition_check(g, ["X", "y", Part.X, "Y"])

        assert bg.x_vertices == [0, 2]
        assert bg.y_vertices == [1, 3]

    def test_bipartition_check_mapping(self):
        bg = bipartition_check(path(3), {0: "X", 1: "Y", 2: "X"})

        assert bg.n == 2

    def test_bipartition_check_missing_label(self):
        with pytest.raises(DomainError):
            bipartition_check(path(3), ["X", "Y"])

    def test_bipartition_check_unknown_label(self):
        with pytest.raises(DomainError):
            bipartition_check(path(2), ["X", "Z"])

    def test_bipartition_check_odd_cycle(self):
        with pytest.raises(InvalidBipartitionError):
            bipartition_check(cycle(3), ["X", "Y", "X"])


class TestPathView:
    """Paths inside a host graph."""

    def test_valid_path(self):
        p = PathView(cycle(6), (0, 1, 2, 3))

        assert p.order == 4
        assert p.endpoints == (0, 3)
        assert p.path_degree(0) == 1
        assert not p.is_maximal()

    def test_non_edge_step_rejected(self):
        with pytest.raises(DomainError):
            PathView(cycle(6), (0, 2))

    def test_repeated_vertex_rejected(self):
        with pytest.raises(DomainError):
            PathView(cycle(6), (0, 1, 0))

    def test_random_maximal_path(self, rng):
        g = random_graph(8, 0.5, rng)
        p = random_path(g, rng, maximal=True)

        assert p.is_maximal()


class TestPredicates:
    """Connectivity and degree predicates."""

    def test_connectivity(self):
        assert is_connected(path(5))
        assert not is_connected(Graph.empty(2))
        assert is_connected(Graph.empty(1))

    def test_cut_vertices(self):
        assert cut_vertices(path(4)) == [1, 2]
        assert cut_vertices(cycle(5)) == []

    def test_biconnected(self):
        assert is_biconnected(cycle(5))
        assert not is_biconnected(path(4))
        assert not is_biconnected(complete(2))

    def test_min_degree(self):
        assert min_degree(star(3)) == 1
        with pytest.raises(DomainError):
            min_degree(Graph.empty(0))

    def test_predicates_match_networkx(self):
        """Connectivity and biconnectivity agree with networkx on seeded graphs."""
        for index in range(200):
            rng = philox(11, index)
            order = int(rng.integers(3, 10))
            g = random_graph(order, float(rng.uniform(0.1, 0.8)), rng)
            h = to_nx(g)

            assert is_connected(g) == nx.is_connected(h)
            assert is_biconnected(g) == nx.is_biconnected(h)

    def test_relabel_preserves_structure(self):
        g = path(4)
        h = relabel(g, [3, 2, 1, 0])

        assert h.size == 3
        assert h.has_edge(3, 2)
        assert nx.is_isomorphic(to_nx(g), to_nx(h))
