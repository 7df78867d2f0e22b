"""Tests for the incidence-graph routes to tr(H)."""

import random

import pytest

from domenum.algorithms.generators import random_hypergraph, random_simple_hypergraph
from domenum.algorithms.stream import OperationCounter
from domenum.algorithms.trans_enum import trans_enum
from domenum.algorithms.transversal_routes import (
    TransversalRoute,
    route_transversals,
    transversals_via_cobipartite,
    transversals_via_split_cdom,
    transversals_via_split_tdom,
)
from domenum.errors import DegenerateInputError, NoTransversalError
from domenum.models import VertexSet

ROUTES = list(TransversalRoute)


def members(sets) -> list[tuple[int, ...]]:
    return [s.members for s in sets]


class TestRoutes:
    """Every route agrees with Berge multiplication."""

    @pytest.mark.parametrize("route", ROUTES)
    def test_fig1(self, route, fig1_hypergraph):
        """Nested and repeated edges do not change the answer."""
        out = members(route_transversals(fig1_hypergraph, route))
        assert sorted(out) == [(0, 3), (1, 2), (1, 3)]

    @pytest.mark.parametrize("route", ROUTES)
    def test_edge_is_ground_set(self, route, make_hypergraph):
        """One edge covering everything gives the singletons."""
        h = make_hypergraph(3, [[1, 2, 3], [1, 2]])
        assert sorted(members(route_transversals(h, route))) == [(0,), (1,)]

    @pytest.mark.parametrize("route", ROUTES)
    def test_single_vertex(self, route, make_hypergraph):
        """{x} alone."""
        assert members(route_transversals(make_hypergraph(1, [[1]]), route)) == [(0,)]

    @pytest.mark.parametrize("route", ROUTES)
    def test_empty_edge(self, route, make_hypergraph):
        """Every route refuses an empty edge up front."""
        h = make_hypergraph(2, [[1, 2], []], allow_empty_edges=True)
        with pytest.raises(NoTransversalError):
            route_transversals(h, route)

    @pytest.mark.parametrize("route", ROUTES)
    @pytest.mark.parametrize("seed", range(12))
    def test_random_simple(self, route, seed):
        """Agreement on random simple hypergraphs."""
        rng = random.Random(seed)
        h = random_simple_hypergraph(rng.randint(1, 5), rng.randint(1, 5), rng)
        out = members(route_transversals(h, route, OperationCounter()))
        assert len(out) == len(set(out))
        assert sorted(out) == members(trans_enum(h))

    @pytest.mark.parametrize("seed", range(8))
    def test_random_with_repeats(self, seed):
        """Routes also accept non-simple hypergraphs."""
        rng = random.Random(seed)
        h = random_hypergraph(4, 5, rng)
        expected = members(trans_enum(h))
        for route in ROUTES:
            assert sorted(members(route_transversals(h, route))) == expected


class TestEdgelessHypergraph:
    """Hypergraphs without edges."""

    def test_split_routes_give_empty_set(self, make_hypergraph):
        """∅ is the only transversal."""
        h = make_hypergraph(2, [])
        assert members(transversals_via_split_tdom(h)) == [()]
        assert members(transversals_via_split_cdom(h)) == [()]

    def test_cobipartite_is_degenerate(self, make_hypergraph):
        """B(H) needs an edge."""
        with pytest.raises(DegenerateInputError):
            transversals_via_cobipartite(make_hypergraph(2, []))


class TestDroppedPairs:
    """The pairs removed by the B(H) filter."""

    def test_pairs_reported(self, fig1_hypergraph):
        """Every dropped set is {x, y_e} and their number is bounded."""
        dropped: list[VertexSet] = []
        out = list(route_transversals(fig1_hypergraph, "cobip", dropped=dropped))
        assert len(out) == 3
        assert dropped
        edge_vertices = set(range(4, 10))
        for pair in dropped:
            assert len(pair) == 2
            edge_side = [v for v in pair.members if v in edge_vertices]
            other = [v for v in pair.members if v not in edge_vertices]
            assert len(edge_side) == 1
            assert other[0] < 4 or other[0] == 10
        assert len(dropped) <= 5 * 6
