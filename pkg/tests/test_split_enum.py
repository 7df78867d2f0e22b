"""Tests for DominantSplit and the P6-free chordal path."""

import random
import statistics
from itertools import combinations

import pytest

from domenum.algorithms.classify import contains_induced_p6, split_partition
from domenum.algorithms.domination import is_minimal_dominating
from domenum.algorithms.generators import random_chordal_graph, random_split_graph
from domenum.algorithms.oracles import oracle_minimal_dominating_sets
from domenum.algorithms.split_enum import (
    PrivateNeighbourMarks,
    clique_part_has_all_privates,
    dom_enum_p6_chordal,
    dominant_split,
)
from domenum.algorithms.stream import OperationCounter, VertexSetStream, delay_ratio
from domenum.algorithms.trans_enum import DominationPath, dom_enum
from domenum.errors import InvalidPartitionError, PreconditionError
from domenum.models import EnumerationOrder, Graph, SplitPartition, VertexSet


def run_split(g: Graph, sigma: EnumerationOrder | None = None) -> list[tuple[int, ...]]:
    p = split_partition(g).partition
    return [d.members for d in dominant_split(g, p, sigma)]


def oracle(g: Graph) -> list[tuple[int, ...]]:
    return [d.members for d in oracle_minimal_dominating_sets(g)]


class TestCliquePartPrivates:
    """Tests for the direct private-neighbour test."""

    def test_single_vertex_is_private(self, two_matched_split):
        """A lone clique vertex is its own private neighbour."""
        p = split_partition(two_matched_split).partition
        assert clique_part_has_all_privates(two_matched_split, p, VertexSet.of([0], 4))
        assert clique_part_has_all_privates(two_matched_split, p, VertexSet(universe_size=4))

    def test_matched_pair(self, two_matched_split):
        """a and b each own one independent neighbour."""
        p = split_partition(two_matched_split).partition
        assert clique_part_has_all_privates(two_matched_split, p, VertexSet.of([0, 1], 4))

    def test_shared_neighbour(self, make_graph):
        """Clique {1, 2, 3}; s=4 sees 1 and 2, s=5 sees 3; {1, 2} has no privates."""
        g = make_graph(5, [(1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5)])
        p = split_partition(g).partition
        assert p.clique.members == (0, 1, 2)
        assert not clique_part_has_all_privates(g, p, VertexSet.of([0, 1], 5))
        assert clique_part_has_all_privates(g, p, VertexSet.of([0, 2], 5))

    def test_outside_clique_raises(self, two_matched_split):
        """A must lie on the clique side."""
        p = split_partition(two_matched_split).partition
        with pytest.raises(PreconditionError):
            clique_part_has_all_privates(two_matched_split, p, VertexSet.of([2], 4))


class TestPrivateNeighbourMarks:
    """Tests for the incremental bookkeeping."""

    @pytest.mark.parametrize("seed", range(15))
    def test_matches_direct_test(self, seed):
        """Every prefix of a random clique sequence agrees with the direct test."""
        rng = random.Random(seed)
        g = random_split_graph(rng.randint(2, 7), rng.randint(1, 7), 0.4, rng)
        p = split_partition(g).partition
        in_clique = p.clique.as_set()
        nbrs = [
            [s for s in g.adjacency[c] if s not in in_clique] if c in in_clique else []
            for c in range(g.n)
        ]
        state = PrivateNeighbourMarks(g.n, nbrs, OperationCounter())
        order = list(p.clique.members)
        rng.shuffle(order)
        for k, x in enumerate(order, start=1):
            state.add(x)
            a = VertexSet.of(order[:k], g.n)
            assert state.all_private() == clique_part_has_all_privates(g, p, a)

    def test_remove_restores(self):
        """add then remove leaves every array as it was."""
        nbrs = [[2], [3], [], []]
        state = PrivateNeighbourMarks(4, nbrs, OperationCounter())
        state.add(0)
        before = (list(state.marks), list(state.owner_sum), list(state.private_count))
        state.add(1)
        state.remove(1)
        assert (state.marks, state.owner_sum, state.private_count) == tuple(map(list, before))
        assert state.members == [0]
        assert state.unprivate == 0


class TestDominantSplit:
    """Tests for DominantSplit."""

    def test_emission_order(self, two_matched_split):
        """S first, then depth-first along sigma."""
        assert run_split(two_matched_split) == [(2, 3), (0, 3), (0, 1), (1, 2)]

    def test_reversed_sigma(self, two_matched_split):
        """Another order visits b before a but yields the same family."""
        sigma = EnumerationOrder.from_sequence([1, 0, 2, 3])
        out = run_split(two_matched_split, sigma)
        assert out == [(2, 3), (1, 2), (0, 1), (0, 3)]

    def test_path_on_three(self, path_graph):
        """P3 splits as clique {2} and gives {1, 3} then {2}."""
        assert run_split(path_graph(3)) == [(0, 2), (1,)]

    def test_edgeless(self):
        """Only S itself."""
        assert run_split(Graph.from_edges(3, [])) == [(0, 1, 2)]

    def test_empty_graph(self):
        """The empty graph has the single minimal dominating set ∅."""
        assert run_split(Graph.from_edges(0, [])) == [()]

    def test_complete_graph(self, complete_graph):
        """Every singleton of K_n."""
        assert sorted(run_split(complete_graph(5))) == [(v,) for v in range(5)]

    def test_invalid_partition_is_eager(self, two_matched_split):
        """A bad partition raises before iteration starts."""
        p = SplitPartition(
            clique=VertexSet.of([0, 2], 4), independent=VertexSet.of([1, 3], 4)
        )
        with pytest.raises(InvalidPartitionError):
            dominant_split(two_matched_split, p)

    def test_sigma_size_mismatch(self, two_matched_split):
        """sigma must order exactly n vertices."""
        p = split_partition(two_matched_split).partition
        with pytest.raises(PreconditionError):
            dominant_split(two_matched_split, p, EnumerationOrder.identity(3))

    @pytest.mark.parametrize("seed", range(40))
    def test_random_split_graphs_match_oracle(self, seed):
        """Exact family, no repeats, on random split graphs."""
        rng = random.Random(seed)
        g = random_split_graph(rng.randint(1, 6), rng.randint(0, 6), rng.random(), rng)
        out = run_split(g)
        assert len(out) == len(set(out))
        assert sorted(out) == oracle(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_sigma(self, seed):
        """The family does not depend on sigma."""
        rng = random.Random(seed)
        g = random_split_graph(5, 5, 0.5, rng)
        order = list(range(g.n))
        rng.shuffle(order)
        assert sorted(run_split(g, EnumerationOrder.from_sequence(order))) == oracle(g)

    @pytest.mark.parametrize("seed", range(10))
    def test_clique_parts_are_a_bijection(self, seed):
        """D -> D ∩ C is one-to-one onto the clique parts passing the private test."""
        rng = random.Random(seed)
        g = random_split_graph(6, 5, 0.4, rng)
        p = split_partition(g).partition
        parts = [tuple(v for v in d if v in p.clique) for d in run_split(g)]
        assert len(parts) == len(set(parts))
        expected = {
            combo
            for k in range(len(p.clique) + 1)
            for combo in combinations(p.clique.members, k)
            if clique_part_has_all_privates(g, p, VertexSet.of(combo, g.n))
        }
        assert set(parts) == expected

    @pytest.mark.parametrize("size", [4, 8, 12])
    def test_delay_is_linear(self, size, rng):
        """Counted delay stays within a constant multiple of n + m."""
        g = random_split_graph(size, size, 0.5, rng)
        p = split_partition(g).partition
        counter = OperationCounter()
        stream = VertexSetStream(counter, limit=None, check_unique=True)
        stats = stream.drain(dominant_split(g, p, counter=counter))
        assert stats.count > 0
        assert delay_ratio(stats, g) <= 8

    @pytest.mark.slow
    def test_delay_ratio_flat_across_sizes(self):
        """max delay / (n + m) does not trend upward from n = 10 to n = 400."""
        ratios = []
        for n in (10, 25, 50, 100, 200, 400):
            g = random_split_graph(n // 2, n - n // 2, 0.5, random.Random(n))
            p = split_partition(g).partition
            counter = OperationCounter()
            stream = VertexSetStream(counter, limit=200, check_unique=True)
            ratios.append(delay_ratio(stream.drain(dominant_split(g, p, counter=counter)), g))
        assert max(ratios) <= 3 * statistics.median(ratios)

    @pytest.mark.parametrize("seed", range(10))
    def test_matches_generic_path(self, seed):
        """Larger split graphs agree with tr(N(G))."""
        rng = random.Random(seed)
        g = random_split_graph(rng.randint(5, 7), rng.randint(5, 7), 0.4, rng)
        generic = dom_enum(g, path=DominationPath.GENERIC)
        assert sorted(run_split(g)) == [d.members for d in generic]

    def test_early_stop_is_lazy(self, complete_graph):
        """Stopping after one set leaves later work undone."""
        g = complete_graph(30)
        p = split_partition(g).partition
        counter = OperationCounter()
        stream = VertexSetStream(counter, limit=1)
        stats = stream.drain(dominant_split(g, p, counter=counter))
        assert stats.count == 1
        assert stats.total_operations < 30 * (g.n + g.m)


class TestP6FreeChordal:
    """Tests for enumeration through the completion."""

    def test_path_on_five(self, path_graph):
        """P5 is chordal, P6-free and not split."""
        g = path_graph(5)
        out = [d.members for d in dom_enum_p6_chordal(g)]
        assert sorted(out) == oracle(g)
        assert all(is_minimal_dominating(g, d) for d in out)

    def test_rejects_cycle(self, cycle_graph):
        """C4 is not chordal; the cycle is the witness."""
        with pytest.raises(PreconditionError) as exc:
            dom_enum_p6_chordal(cycle_graph(4))
        assert sorted(exc.value.witness) == [0, 1, 2, 3]

    def test_rejects_p6(self, path_graph):
        """P6 itself is excluded."""
        with pytest.raises(PreconditionError) as exc:
            dom_enum_p6_chordal(path_graph(6))
        assert len(exc.value.witness) == 6

    @pytest.mark.parametrize("seed", range(30))
    def test_random_chordal_graphs(self, seed):
        """Agreement with the oracle on P6-free chordal graphs."""
        g = random_chordal_graph(9, random.Random(seed), tree_size=5)
        if contains_induced_p6(g).found:
            pytest.skip("instance contains an induced P6")
        out = [d.members for d in dom_enum_p6_chordal(g)]
        assert len(out) == len(set(out))
        assert sorted(out) == oracle(g)
