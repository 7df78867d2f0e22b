"""Tests for the seeded instance generators."""

import random

import pytest

from domenum.algorithms.classify import is_chordal, is_split
from domenum.algorithms.generators import (
    random_chordal_graph,
    random_connected_graph,
    random_graph,
    random_hypergraph,
    random_simple_hypergraph,
    random_split_graph,
)
from domenum.errors import PreconditionError
from domenum.models.graph import is_connected
from domenum.models.hypergraph import is_simple


class TestGenerators:
    """Every generator is reproducible and produces its class."""

    def test_same_seed_same_graph(self):
        """A seed fixes the instance."""
        assert random_graph(10, 0.3, random.Random(7)) == random_graph(10, 0.3, random.Random(7))

    def test_probability_extremes(self):
        """p = 0 gives no edges and p = 1 the complete graph."""
        assert random_graph(6, 0.0, random.Random(0)).m == 0
        assert random_graph(6, 1.0, random.Random(0)).m == 15

    @pytest.mark.parametrize("seed", range(10))
    def test_connected(self, seed):
        """The spanning tree keeps every instance connected."""
        assert is_connected(random_connected_graph(12, 0.05, random.Random(seed)))

    @pytest.mark.parametrize("seed", range(10))
    def test_split(self, seed):
        """Split instances are split."""
        assert is_split(random_split_graph(5, 6, 0.5, random.Random(seed)))

    @pytest.mark.parametrize("seed", range(10))
    def test_chordal(self, seed):
        """Subtree intersection graphs are chordal."""
        assert is_chordal(random_chordal_graph(12, random.Random(seed))).chordal

    @pytest.mark.parametrize("seed", range(10))
    def test_hypergraph(self, seed):
        """Edges are non-empty and bounded in size."""
        h = random_hypergraph(6, 8, random.Random(seed), max_edge_size=3)
        assert len(h.edges) == 8
        assert all(1 <= len(e) <= 3 for e in h.edges)

    @pytest.mark.parametrize("seed", range(10))
    def test_simple_hypergraph(self, seed):
        """Minimised and relabelled instances are simple."""
        h = random_simple_hypergraph(6, 8, random.Random(seed))
        assert is_simple(h).simple

    def test_invalid_parameters(self):
        """Negative counts and probabilities outside [0, 1] are refused."""
        with pytest.raises(PreconditionError):
            random_graph(-1, 0.5, random.Random(0))
        with pytest.raises(PreconditionError):
            random_split_graph(2, 2, 1.5, random.Random(0))
        with pytest.raises(PreconditionError):
            random_hypergraph(0, 1, random.Random(0))
