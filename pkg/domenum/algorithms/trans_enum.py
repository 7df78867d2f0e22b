"""Generic minimal transversal enumeration and the domination front doors.

Transversals are computed by Berge multiplication: the minimal transversals
of the first k edges are extended by every vertex of edge k+1 and the
result is re-minimised. This is correct on every input but not
output-polynomial; intermediate antichains can outgrow the final one.

``dom_enum`` picks the fastest applicable path:

- split graphs go straight to DominantSplit
- P6-free chordal graphs go through their (split) completion
- everything else is tr(Min(N(G)))
"""

import logging
from collections.abc import Iterator
from enum import Enum

from domenum.algorithms.classify import contains_induced_p6, is_chordal, split_partition
from domenum.algorithms.reductions import (
    closed_neighbourhood_hypergraph,
    open_neighbourhood_hypergraph,
)
from domenum.algorithms.split_enum import dom_enum_p6_chordal, dominant_split
from domenum.algorithms.stream import OperationCounter
from domenum.errors import NoTransversalError, PreconditionError
from domenum.models import EnumerationOrder, Graph, Hypergraph, VertexSet
from domenum.models.hypergraph import minimize

logger = logging.getLogger(__name__)


class DominationPath(str, Enum):
    """Route taken by ``dom_enum``."""

    AUTO = "auto"
    SPLIT = "split"
    P6_CHORDAL = "p6-chordal"
    GENERIC = "generic"


# =============================================================================
# Berge Multiplication
# =============================================================================

def _minimal_masks(masks: set[int], counter: OperationCounter) -> list[int]:
    """Inclusion-minimal members of a family of bitmasks."""
    kept: list[int] = []
    for t in sorted(masks, key=int.bit_count):
        counter.charge(len(kept) + 1)
        if not any(k & t == k for k in kept):
            kept.append(t)
    return kept


def _mask_members(mask: int) -> list[int]:
    members = []
    v = 0
    while mask:
        if mask & 1:
            members.append(v)
        mask >>= 1
        v += 1
    return members


def trans_enum(h: Hypergraph, counter: OperationCounter | None = None) -> Iterator[VertexSet]:
    """Yield tr(H) in lexicographic order of member tuples.

    A hypergraph without edges has the single minimal transversal ∅.

    Raises:
        NoTransversalError: H has an empty hyperedge.
    """
    for i, e in enumerate(h.edges):
        if not e:
            raise NoTransversalError(f"hyperedge {i} is empty, no transversal exists", witness=[i])
    return _berge(h, counter or OperationCounter())


def _berge(h: Hypergraph, counter: OperationCounter) -> Iterator[VertexSet]:
    edges = minimize(h).edges
    counter.charge(sum(len(e) for e in h.edges) + 1)
    antichain = [0]
    for e in edges:
        edge_mask = 0
        for v in e:
            edge_mask |= 1 << v
        extended: set[int] = set()
        for t in antichain:
            counter.charge()
            if t & edge_mask:
                extended.add(t)
            else:
                for v in e:
                    counter.charge()
                    extended.add(t | 1 << v)
        antichain = _minimal_masks(extended, counter)
    logger.debug(
        "Berge multiplication: %d edges, %d minimal transversals", len(edges), len(antichain)
    )
    family = sorted(_mask_members(t) for t in antichain)
    for members in family:
        counter.charge(len(members) + 1)
        yield VertexSet.trusted(members, h.ground_size)


def minimal_transversals(h: Hypergraph) -> list[VertexSet]:
    """tr(H) as a list."""
    return list(trans_enum(h))


def strip_dominating_vertices(h: Hypergraph) -> tuple[Hypergraph, VertexSet]:
    """Remove the vertices lying in every hyperedge.

    Returns the residual hypergraph (same ground ids, the removed vertices
    deleted from every edge) and the removed vertices; each removed x is the
    minimal transversal {x}, and the rest of tr(H) is tr of the residual. An
    edge made only of removed vertices becomes empty, which marks the
    residual as having no transversal at all.
    """
    if not h.edges:
        return h, VertexSet(universe_size=h.ground_size)
    common = set(h.edges[0]).intersection(*h.edges[1:])
    removed = VertexSet.of(common, h.ground_size)
    if not common:
        return h, removed
    residual_edges = tuple(tuple(v for v in e if v not in common) for e in h.edges)
    emptied = [i for i, e in enumerate(residual_edges) if not e]
    if emptied:
        logger.info("Residual edges %s were covered only by dominating vertices", emptied)
    residual = Hypergraph(
        ground_size=h.ground_size, edges=residual_edges, allow_empty_edges=bool(emptied)
    )
    return residual, removed


# =============================================================================
# Domination Front Doors
# =============================================================================

def dom_enum(
    g: Graph,
    counter: OperationCounter | None = None,
    path: DominationPath | str = DominationPath.AUTO,
    sigma: EnumerationOrder | None = None,
) -> Iterator[VertexSet]:
    """Yield D(G), the minimal dominating sets, along the chosen path.

    Raises:
        PreconditionError: a forced path does not apply to g.
    """
    path = DominationPath(path)
    counter = counter or OperationCounter()

    if path in (DominationPath.AUTO, DominationPath.SPLIT):
        check = split_partition(g)
        if check.partition is not None:
            logger.info("dom_enum: split graph, running DominantSplit")
            return dominant_split(g, check.partition, sigma, counter)
        if path is DominationPath.SPLIT:
            kind = check.witness_kind.value if check.witness_kind else "no witness"
            raise PreconditionError(
                f"graph is not split ({kind})",
                witness=list(check.witness),
            )

    if path is DominationPath.P6_CHORDAL:
        logger.info("dom_enum: forced P6-free chordal path")
        return dom_enum_p6_chordal(g, sigma, counter)

    if path is DominationPath.AUTO and is_chordal(g).chordal and not contains_induced_p6(g).found:
        logger.info("dom_enum: P6-free chordal graph, enumerating its completion")
        return dom_enum_p6_chordal(g, sigma, counter)

    logger.info("dom_enum: generic path through the closed neighbourhood hypergraph")
    return trans_enum(closed_neighbourhood_hypergraph(g), counter)


def tdom_enum(g: Graph, counter: OperationCounter | None = None) -> Iterator[VertexSet]:
    """Yield the minimal total dominating sets as tr(N_o(G)).

    Raises:
        NoTotalDominatingSetError: g has an isolated vertex.
    """
    return trans_enum(open_neighbourhood_hypergraph(g), counter)
