"""Linear-delay enumeration of minimal dominating sets of split graphs.

Every minimal dominating set D of a split graph is determined by its clique
part A = D ∩ C: D = A ∪ (S minus N(A)), and such a D is minimal exactly when
every vertex of A has a private neighbour. The enumeration walks the clique
subsets that pass this test depth-first, extending A only with vertices
later than its last one in the linear order sigma, so every set is reached
from a single parent.

P6-free chordal graphs reduce to this case: their completion is split and
has the same minimal dominating sets.
"""

import logging
from collections.abc import Iterator

from domenum.algorithms.classify import (
    contains_induced_p6,
    is_chordal,
    split_partition,
    validate_partition,
)
from domenum.algorithms.completion import completion_graph
from domenum.algorithms.stream import OperationCounter
from domenum.errors import ContractViolationError, PreconditionError
from domenum.models import EnumerationOrder, Graph, SplitPartition, VertexSet

logger = logging.getLogger(__name__)


# =============================================================================
# Private Neighbour Test
# =============================================================================

def clique_part_has_all_privates(g: Graph, p: SplitPartition, a: VertexSet) -> bool:
    """Whether every y in A has a private neighbour w.r.t. A ∪ (S minus N(A)).

    A lone clique vertex is its own private neighbour; otherwise y needs an
    independent neighbour adjacent to no other member of A.
    """
    clique = p.clique.as_set()
    outside = [y for y in a.members if y not in clique]
    if outside:
        raise PreconditionError(
            f"vertices {outside} are not on the clique side", witness=outside
        )
    if len(a) <= 1:
        return True
    independent = p.independent.as_set()
    marks: dict[int, int] = {}
    for y in a.members:
        for s in g.adjacency[y]:
            if s in independent:
                marks[s] = marks.get(s, 0) + 1
    return all(
        any(marks.get(s) == 1 for s in g.adjacency[y] if s in independent)
        for y in a.members
    )


class PrivateNeighbourMarks:
    """Incremental private-neighbour bookkeeping for a growing clique part A.

    ``marks[s]`` is |N(s) ∩ A| for every independent vertex s. While a mark
    is 1, ``owner_sum[s]`` is its single owner; with mark 2 it is the sum of
    the two owners, so the survivor is found by subtraction when a third
    vertex arrives. ``private_count[y]`` counts the independent neighbours
    of y with mark 1 and ``unprivate`` how many members of A have none.
    """

    def __init__(
        self,
        n: int,
        independent_neighbours: list[list[int]],
        counter: OperationCounter,
    ) -> None:
        self.independent_neighbours = independent_neighbours
        self.counter = counter
        self.marks = [0] * n
        self.owner_sum = [0] * n
        self.private_count = [0] * n
        self.members: list[int] = []
        self.unprivate = 0

    def add(self, x: int) -> None:
        marks, owner_sum, private_count = self.marks, self.owner_sum, self.private_count
        nbrs = self.independent_neighbours[x]
        for s in nbrs:
            marks[s] += 1
            owner_sum[s] += x
            if marks[s] == 1:
                private_count[x] += 1
            elif marks[s] == 2:
                y = owner_sum[s] - x
                private_count[y] -= 1
                if private_count[y] == 0:
                    self.unprivate += 1
        if private_count[x] == 0:
            self.unprivate += 1
        self.members.append(x)
        self.counter.charge(len(nbrs) + 1)

    def remove(self, x: int) -> None:
        """Undo ``add(x)``; x must be the most recently added member."""
        marks, owner_sum, private_count = self.marks, self.owner_sum, self.private_count
        nbrs = self.independent_neighbours[x]
        if private_count[x] == 0:
            self.unprivate -= 1
        for s in nbrs:
            if marks[s] == 1:
                private_count[x] -= 1
            elif marks[s] == 2:
                y = owner_sum[s] - x
                private_count[y] += 1
                if private_count[y] == 1:
                    self.unprivate -= 1
            marks[s] -= 1
            owner_sum[s] -= x
        self.members.pop()
        self.counter.charge(len(nbrs) + 1)

    def all_private(self) -> bool:
        self.counter.charge()
        return len(self.members) <= 1 or self.unprivate == 0


# =============================================================================
# DominantSplit
# =============================================================================

def dominant_split(
    g: Graph,
    p: SplitPartition,
    sigma: EnumerationOrder | None = None,
    counter: OperationCounter | None = None,
) -> Iterator[VertexSet]:
    """Yield every minimal dominating set of a split graph exactly once.

    The first set is S(G); afterwards sets come in depth-first order, the
    children of a clique part A being A + x for the admissible x later than
    max(A) in increasing sigma. Between two yields the work charged to
    ``counter`` is O(n + m).

    Raises:
        InvalidPartitionError: p does not certify g as split with S maximal.
        PreconditionError: sigma does not order exactly the vertices of g.
    """
    validate_partition(g, p)
    sigma = sigma or EnumerationOrder.identity(g.n)
    if len(sigma.sigma) != g.n:
        raise PreconditionError(
            f"ordering covers {len(sigma.sigma)} vertices, graph has {g.n}"
        )
    return _dominant_split(g, p, sigma, counter or OperationCounter())


def _dominant_split(
    g: Graph, p: SplitPartition, sigma: EnumerationOrder, counter: OperationCounter
) -> Iterator[VertexSet]:
    n = g.n
    in_clique = [False] * n
    for c in p.clique.members:
        in_clique[c] = True
    independent_neighbours = [
        [s for s in g.adjacency[c] if not in_clique[s]] if in_clique[c] else []
        for c in range(n)
    ]
    clique_order = sigma.arrange(p.clique.members)
    position = {c: i for i, c in enumerate(clique_order)}
    counter.charge(n + g.m)

    state = PrivateNeighbourMarks(n, independent_neighbours, counter)
    in_a = [False] * n
    logger.debug(
        "DominantSplit on n=%d m=%d with |C|=%d |S|=%d",
        n, g.m, len(p.clique), len(p.independent),
    )

    def emission() -> VertexSet:
        counter.charge(n)
        members = [
            v for v in range(n)
            if in_a[v] or (not in_clique[v] and state.marks[v] == 0)
        ]
        return VertexSet.trusted(members, n)

    def extensions(start: int) -> list[int]:
        # Cov: clique vertices after max(A) that keep every member private
        cov: list[int] = []
        for x in clique_order[start:]:
            state.add(x)
            if state.all_private():
                cov.append(x)
            state.remove(x)
        return cov

    yield emission()

    # frame = [Cov, next index, vertex whose addition opened the frame]
    stack: list[list] = [[extensions(0), 0, None]]
    emitted = 1
    while stack:
        frame = stack[-1]
        cov, i, entered = frame
        if i < len(cov):
            frame[1] = i + 1
            x = cov[i]
            state.add(x)
            in_a[x] = True
            yield emission()
            emitted += 1
            stack.append([extensions(position[x] + 1), 0, x])
        else:
            stack.pop()
            counter.charge()
            if entered is not None:
                in_a[entered] = False
                state.remove(entered)
    logger.debug("DominantSplit finished after %d sets", emitted)


# =============================================================================
# P6-free Chordal Graphs
# =============================================================================

def dom_enum_p6_chordal(
    g: Graph,
    sigma: EnumerationOrder | None = None,
    counter: OperationCounter | None = None,
) -> Iterator[VertexSet]:
    """Minimal dominating sets of a P6-free chordal graph via its completion.

    Raises:
        PreconditionError: g has a chordless cycle or an induced P6 (the
            witness is attached).
        ContractViolationError: the completion of g is not split.
    """
    chordal = is_chordal(g)
    if not chordal.chordal:
        raise PreconditionError(
            "graph is not chordal", witness=list(chordal.cycle)
        )
    p6 = contains_induced_p6(g)
    if p6.found:
        raise PreconditionError(
            "graph contains an induced P6", witness=list(p6.path)
        )
    completed = completion_graph(g)
    check = split_partition(completed)
    if check.partition is None:
        raise ContractViolationError(
            "completion of a P6-free chordal graph is not split",
            witness=list(check.witness),
        )
    logger.debug("Completion added %d edges", completed.m - g.m)
    return dominant_split(completed, check.partition, sigma, counter)
