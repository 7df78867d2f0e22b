"""Tests for the graph and vertex set models."""

import random

import pytest
from pydantic import ValidationError

from domenum.algorithms.generators import random_graph
from domenum.errors import InvalidEdgeError, InvalidVertexError
from domenum.models import Graph, VertexSet
from domenum.models.graph import (
    as_networkx,
    closed_neighbourhood,
    closed_neighbourhood_of_set,
    complement,
    components_without,
    connected_components,
    induced_subgraph,
    induces_connected,
    is_connected,
    open_neighbourhood,
    open_neighbourhood_of_set,
    with_added_edges,
)


class TestVertexSet:
    """Tests for VertexSet."""

    def test_of_sorts_and_collapses(self):
        """Members are sorted and duplicates collapse."""
        s = VertexSet.of([3, 1, 3, 0], 4)
        assert s.members == (0, 1, 3)
        assert len(s) == 3

    def test_rejects_unsorted_members(self):
        """Direct construction enforces strict order."""
        with pytest.raises(ValidationError):
            VertexSet(members=(2, 1), universe_size=3)

    def test_rejects_out_of_range(self):
        """Members must lie inside the universe."""
        with pytest.raises(ValidationError):
            VertexSet(members=(0, 3), universe_size=3)

    def test_contains(self):
        """Membership uses the sorted members."""
        s = VertexSet.of([1, 4], 5)
        assert 4 in s
        assert 2 not in s

    def test_external_is_one_based(self):
        """The stream line format numbers vertices from 1."""
        assert VertexSet.of([0, 3], 4).external() == "1 4"
        assert VertexSet(universe_size=2).external() == ""


class TestGraph:
    """Tests for Graph construction."""

    def test_from_edges(self, make_graph):
        """Adjacency lists are sorted and symmetric."""
        g = make_graph(4, [(1, 2), (3, 2), (2, 4)])
        assert g.n == 4
        assert g.m == 3
        assert g.neighbours(1) == (0, 2, 3)
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 3)
        assert g.degree(1) == 3

    def test_repeated_edges_collapse(self):
        """An edge listed twice is stored once."""
        g = Graph.from_edges(2, [(0, 1), (1, 0)])
        assert g.m == 1

    def test_self_loop_rejected(self):
        """Loops are not simple-graph edges."""
        with pytest.raises(InvalidEdgeError):
            Graph.from_edges(2, [(1, 1)])

    def test_vertex_out_of_range(self):
        """Edge endpoints must be vertices."""
        with pytest.raises(InvalidVertexError):
            Graph.from_edges(2, [(0, 2)])

    def test_asymmetric_adjacency_rejected(self):
        """The model validator checks symmetry and the edge count."""
        with pytest.raises(ValidationError):
            Graph(n=2, adjacency=((1,), ()), m=1)
        with pytest.raises(ValidationError):
            Graph(n=2, adjacency=((1,), (0,)), m=2)

    def test_edges_lexicographic(self, make_graph):
        """edges() lists u < v pairs in order."""
        g = make_graph(3, [(3, 1), (2, 1)])
        assert g.edges() == [(0, 1), (0, 2)]


class TestNeighbourhoods:
    """Tests for neighbourhood primitives."""

    def test_closed_and_open(self, path_graph):
        """N[2] and N(2) on P3."""
        g = path_graph(3)
        assert closed_neighbourhood(g, 1).members == (0, 1, 2)
        assert open_neighbourhood(g, 1).members == (0, 2)

    def test_invalid_vertex(self, path_graph):
        """Querying a missing vertex raises."""
        with pytest.raises(InvalidVertexError):
            closed_neighbourhood(path_graph(3), 5)

    def test_of_set(self, path_graph):
        """N[X] and N(X) on P5 with X = {1, 2}."""
        g = path_graph(5)
        assert closed_neighbourhood_of_set(g, [0, 1]).members == (0, 1, 2)
        assert open_neighbourhood_of_set(g, [0, 1]).members == (2,)


class TestComponents:
    """Tests for connectivity helpers."""

    def test_components_without(self, path_graph):
        """Removing the middle of P5 leaves two components."""
        assert components_without(path_graph(5), {2}) == [[0, 1], [3, 4]]

    def test_empty_graph_is_connected(self):
        """Zero or one component counts as connected."""
        assert is_connected(Graph.from_edges(0, []))
        assert is_connected(Graph.from_edges(1, []))
        assert not is_connected(Graph.from_edges(2, []))

    def test_induces_connected(self, path_graph):
        """Subsets of P4 inducing a path or not."""
        g = path_graph(4)
        assert induces_connected(g, {1, 2})
        assert not induces_connected(g, {0, 2})
        assert not induces_connected(g, set())

    def test_induces_connected_rejects_unknown_vertex(self, path_graph):
        """Ids outside the graph are an error."""
        with pytest.raises(InvalidVertexError):
            induces_connected(path_graph(4), {1, 4})

    def test_networkx_view_keeps_isolated_vertices(self, make_graph):
        """Every vertex id appears, with or without edges."""
        view = as_networkx(make_graph(4, [(1, 2)]))
        assert sorted(view.nodes) == [0, 1, 2, 3]
        assert list(view.edges) == [(0, 1)]

    @pytest.mark.parametrize("seed", range(20))
    def test_components_partition_vertices(self, seed):
        """Components are sorted, ordered by minimum and cover every vertex once."""
        g = random_graph(12, 0.15, random.Random(seed))
        components = [c.members for c in connected_components(g)]
        assert [c[0] for c in components] == sorted(c[0] for c in components)
        assert sorted(v for c in components for v in c) == list(range(g.n))
        for c in components:
            assert list(c) == sorted(c)
            assert induces_connected(g, c)
        assert is_connected(g) == (len(components) == 1)


class TestDerivedGraphs:
    """Tests for complement, induced subgraphs and edge additions."""

    def test_complement_of_path(self, path_graph):
        """The complement of P4 is P4 (2-4-1-3)."""
        g = complement(path_graph(4))
        assert g.edges() == [(0, 2), (0, 3), (1, 3)]

    def test_complement_is_involution(self, rng):
        """complement(complement(g)) == g."""
        g = random_graph(9, 0.4, rng)
        assert complement(complement(g)) == g

    def test_induced_subgraph(self, cycle_graph):
        """Three consecutive vertices of C5 induce P3."""
        sub, mapping = induced_subgraph(cycle_graph(5), [4, 0, 1])
        assert mapping == [0, 1, 4]
        assert sub.edges() == [(0, 1), (0, 2)]

    def test_with_added_edges(self, path_graph):
        """Added edges appear once; existing ones are ignored."""
        g = with_added_edges(path_graph(3), [(0, 2), (0, 1)])
        assert g.m == 3
