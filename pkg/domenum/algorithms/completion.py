"""Irredundant/redundant vertex classification and the completion graph.

A vertex is irredundant when its closed neighbourhood is inclusion-minimal
among all closed neighbourhoods; among twins (equal closed neighbourhoods)
only the smallest id is irredundant. The completion adds every edge between
redundant vertices and leaves the minimal dominating sets unchanged.
"""

import logging
from itertools import combinations

from domenum.errors import InvalidEdgeError, InvalidVertexError
from domenum.models import Graph, RedundancyLabeling, VertexSet
from domenum.models.graph import with_added_edges

logger = logging.getLogger(__name__)


def classify_redundancy(g: Graph) -> RedundancyLabeling:
    """Label every vertex irredundant or redundant, with a representative."""
    closed = [g.neighbour_set(v) | {v} for v in range(g.n)]
    irredundant: list[int] = []
    redundant: list[int] = []
    for v in range(g.n):
        dominated = any(
            closed[u] < closed[v] or (closed[u] == closed[v] and u < v)
            for u in range(g.n)
            if u != v and len(closed[u]) <= len(closed[v])
        )
        (redundant if dominated else irredundant).append(v)

    representative = list(range(g.n))
    for v in redundant:
        # smallest irredundant y with N[y] ⊆ N[v]; one always exists
        representative[v] = next(y for y in irredundant if closed[y] <= closed[v])

    logger.debug("Redundancy: |IR|=%d |RN|=%d", len(irredundant), len(redundant))
    return RedundancyLabeling(
        irredundant=VertexSet.trusted(irredundant, g.n),
        redundant=VertexSet.trusted(redundant, g.n),
        twin_representative=tuple(representative),
    )


def completion_additions(
    g: Graph, labeling: RedundancyLabeling | None = None
) -> list[tuple[int, int]]:
    """Non-edges between redundant vertices, i.e. the edges the completion adds."""
    labeling = labeling or classify_redundancy(g)
    return [
        (u, v)
        for u, v in combinations(labeling.redundant.members, 2)
        if not g.has_edge(u, v)
    ]


def completion_graph(g: Graph, labeling: RedundancyLabeling | None = None) -> Graph:
    """G_co: g plus a clique on RN(g)."""
    return with_added_edges(g, completion_additions(g, labeling))


def check_completion_optimality(g: Graph, e: tuple[int, int]) -> bool:
    """Whether adding non-edge e changes the minimal dominating sets (e meets IR(g))."""
    u, v = e
    for x in (u, v):
        if not 0 <= x < g.n:
            raise InvalidVertexError(f"vertex {x} outside 0..{g.n - 1}", witness=[x])
    if u == v:
        raise InvalidEdgeError(f"self-loop at vertex {u}", witness=[u])
    if g.has_edge(u, v):
        raise InvalidEdgeError(f"{{{u}, {v}}} is already an edge", witness=[u, v])
    irredundant = classify_redundancy(g).irredundant
    return u in irredundant or v in irredundant
