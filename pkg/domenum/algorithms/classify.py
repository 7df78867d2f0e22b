"""Recognition predicates that decide which enumeration path applies.

- split graphs (Hammer-Simeone degree test, maximal independent side,
  forbidden 2K2/C4/C5 witness on failure)
- chordal graphs (LexBFS + perfect elimination check, chordless cycle witness)
- induced P6 detection (bounded DFS over induced paths)
- simplicial vertices, bipartite and co-bipartite graphs
"""

import logging
from itertools import combinations

import networkx as nx

from domenum.config import get_settings
from domenum.errors import ContractViolationError, InvalidPartitionError, InvalidVertexError
from domenum.models import (
    ChordalCheck,
    ForbiddenSubgraph,
    Graph,
    InducedPathCheck,
    SplitCheck,
    SplitPartition,
    VertexSet,
)
from domenum.models.graph import as_networkx

logger = logging.getLogger(__name__)


# =============================================================================
# Split Graphs
# =============================================================================

def split_partition(g: Graph) -> SplitCheck:
    """Split partition with a maximal independent side, or a forbidden witness.

    Vertices are ranked by decreasing degree (smaller id first on ties); with
    k the largest rank such that d_k >= k-1, g is split iff the k top degrees
    sum to k(k-1) plus the remaining degrees. The top k vertices then form
    the clique. Clique vertices without a neighbour on the independent side
    are moved across (smallest id first) until none is left.
    """
    ranked = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    degrees = [g.degree(v) for v in ranked]
    k = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            k = i
    if sum(degrees[:k]) != k * (k - 1) + sum(degrees[k:]):
        return _not_split(g)

    clique = set(ranked[:k])
    independent = set(ranked[k:])
    _check_sides(g, clique, independent)

    while True:
        movable = [c for c in sorted(clique) if independent.isdisjoint(g.adjacency[c])]
        if not movable:
            break
        clique.discard(movable[0])
        independent.add(movable[0])

    partition = SplitPartition(
        clique=VertexSet.of(clique, g.n), independent=VertexSet.of(independent, g.n)
    )
    return SplitCheck(partition=partition)


def is_split(g: Graph) -> bool:
    return split_partition(g).is_split


def _check_sides(g: Graph, clique: set[int], independent: set[int]) -> None:
    for u, v in combinations(sorted(clique), 2):
        if not g.has_edge(u, v):
            raise ContractViolationError(f"degree test produced a non-clique ({u}, {v})")
    for s in independent:
        if not independent.isdisjoint(g.adjacency[s]):
            raise ContractViolationError(f"degree test produced a non-independent side at {s}")


def validate_partition(g: Graph, p: SplitPartition) -> None:
    """Raise InvalidPartitionError unless p certifies g as split with S maximal."""
    if p.clique.universe_size != g.n:
        raise InvalidPartitionError(
            f"partition is over {p.clique.universe_size} vertices, graph has {g.n}"
        )
    clique = p.clique.members
    for i, u in enumerate(clique):
        for v in clique[i + 1:]:
            if not g.has_edge(u, v):
                raise InvalidPartitionError(
                    f"clique side misses edge {{{u}, {v}}}", witness=[u, v]
                )
    independent = p.independent.as_set()
    for s in p.independent.members:
        for u in g.adjacency[s]:
            if u in independent:
                raise InvalidPartitionError(
                    f"independent side contains edge {{{s}, {u}}}", witness=[s, u]
                )
    for c in clique:
        if independent.isdisjoint(g.adjacency[c]):
            raise InvalidPartitionError(
                f"clique vertex {c} has no independent neighbour, independent side not maximal",
                witness=[c],
            )


def _not_split(g: Graph) -> SplitCheck:
    if g.n > get_settings().WITNESS_MAX_VERTICES:
        logger.debug("Graph too large for a forbidden-subgraph witness (n=%d)", g.n)
        return SplitCheck()
    kind, witness = find_forbidden_split_subgraph(g)
    return SplitCheck(witness_kind=kind, witness=witness)


def find_forbidden_split_subgraph(g: Graph) -> tuple[ForbiddenSubgraph, tuple[int, ...]]:
    """Induced 2K2, C4 (vertex order around the cycle) or C5 in a non-split graph."""
    edges = g.edges()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1:]:
            if len({a, b, c, d}) < 4:
                continue
            cross = [(x, y) for x in (a, b) for y in (c, d) if g.has_edge(x, y)]
            if not cross:
                return ForbiddenSubgraph.TWO_K2, (a, b, c, d)
            matched = {x for x, _ in cross} == {a, b} and {y for _, y in cross} == {c, d}
            if len(cross) == 2 and matched:
                # a-b and c-d joined by a perfect matching: a cycle of length four
                (x1, y1), (x2, y2) = cross
                return ForbiddenSubgraph.C4, (x1, x2, y2, y1)
    cycle = _find_induced_c5(g)
    if cycle:
        return ForbiddenSubgraph.C5, cycle
    raise ContractViolationError("graph failed the split test but has no 2K2, C4 or C5")


def _find_induced_c5(g: Graph) -> tuple[int, ...] | None:
    for a in range(g.n):
        na = g.neighbour_set(a)
        for b in g.adjacency[a]:
            nb = g.neighbour_set(b)
            for c in g.adjacency[b]:
                if c == a or c in na:
                    continue
                nc = g.neighbour_set(c)
                for d in g.adjacency[c]:
                    if d in (a, b) or d in na or d in nb:
                        continue
                    for e in g.adjacency[d]:
                        if e in na and e not in nb and e not in nc and e not in (a, b, c):
                            return (a, b, c, d, e)
    return None


# =============================================================================
# Chordal Graphs
# =============================================================================

def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first order by partition refinement."""
    classes: list[list[int]] = [list(range(g.n))] if g.n else []
    order: list[int] = []
    while classes:
        first = classes[0]
        v = first.pop(0)
        if not first:
            classes.pop(0)
        order.append(v)
        nbrs = g.neighbour_set(v)
        refined: list[list[int]] = []
        for part in classes:
            inside = [u for u in part if u in nbrs]
            outside = [u for u in part if u not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        classes = refined
    return order


def is_chordal(g: Graph) -> ChordalCheck:
    """Chordality via LexBFS; reverse LexBFS order must eliminate perfectly."""
    elimination = lex_bfs(g)[::-1]
    position = {v: i for i, v in enumerate(elimination)}
    for v in elimination:
        later = [u for u in g.adjacency[v] if position[u] > position[v]]
        if not later:
            continue
        parent = min(later, key=position.__getitem__)
        for w in later:
            if w != parent and not g.has_edge(parent, w):
                view = as_networkx(g)
                cycle = _chordless_cycle_through(view, v, parent, w) or _any_chordless_cycle(
                    g, view
                )
                if cycle is None:
                    raise ContractViolationError(
                        "elimination check failed without a chordless cycle"
                    )
                return ChordalCheck(chordal=False, cycle=cycle)
    return ChordalCheck(chordal=True, elimination_order=tuple(elimination))


def _chordless_cycle_through(
    view: nx.Graph, v: int, p: int, w: int
) -> tuple[int, ...] | None:
    """Cycle v-p-...-w-v whose inner path avoids N[v]; p and w non-adjacent.

    A shortest p-w path outside N[v] has no chords, so closing it at v
    gives a chordless cycle.
    """
    blocked = (set(view.adj[v]) | {v}) - {p, w}
    try:
        path = nx.shortest_path(nx.restricted_view(view, blocked, ()), p, w)
    except nx.NetworkXNoPath:
        return None
    return (v, *path)


def _any_chordless_cycle(g: Graph, view: nx.Graph) -> tuple[int, ...] | None:
    for v in range(g.n):
        for p, w in combinations(g.adjacency[v], 2):
            if not g.has_edge(p, w):
                cycle = _chordless_cycle_through(view, v, p, w)
                if cycle:
                    return cycle
    return None


# =============================================================================
# Induced Paths
# =============================================================================

def contains_induced_path(g: Graph, k: int) -> InducedPathCheck:
    """Search for k vertices inducing exactly a path."""
    if k <= 0:
        return InducedPathCheck(found=True)

    def extend(path: list[int], members: set[int]) -> list[int] | None:
        if len(path) == k:
            return path
        last = path[-1]
        for u in g.adjacency[last]:
            if u in members:
                continue
            if any(g.has_edge(u, x) for x in path[:-1]):
                continue
            path.append(u)
            members.add(u)
            found = extend(path, members)
            if found:
                return found
            path.pop()
            members.discard(u)
        return None

    for start in range(g.n):
        found = extend([start], {start})
        if found:
            return InducedPathCheck(found=True, path=tuple(found))
    return InducedPathCheck(found=False)


def contains_induced_p6(g: Graph) -> InducedPathCheck:
    return contains_induced_path(g, 6)


# =============================================================================
# Local and Bipartite Predicates
# =============================================================================

def is_simplicial(g: Graph, x: int) -> bool:
    """N(x) induces a complete subgraph."""
    if not 0 <= x < g.n:
        raise InvalidVertexError(f"vertex {x} outside 0..{g.n - 1}", witness=[x])
    return all(g.has_edge(u, v) for u, v in combinations(g.adjacency[x], 2))


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(as_networkx(g))


def is_cobipartite(g: Graph) -> bool:
    """The complement of g is bipartite."""
    return nx.is_bipartite(nx.complement(as_networkx(g)))
