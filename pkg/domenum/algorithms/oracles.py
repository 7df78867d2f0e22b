"""Brute-force reference families over the subset lattice.

Every oracle scans subsets by increasing size (lexicographic within a
size) as bitmasks. For monotone properties a subset is minimal exactly
when no previously accepted set is contained in it. Connected domination
is not monotone, so its minimality is the one-deletion test: removing any
member breaks domination or connectivity.

Inputs above ``ORACLE_MAX_VERTICES`` are refused.
"""

import logging
from collections.abc import Callable, Iterator
from itertools import combinations

from domenum.config import get_settings
from domenum.errors import (
    NoConnectedDominatingSetError,
    NoTotalDominatingSetError,
    NoTransversalError,
    OracleCapExceededError,
    PreconditionError,
)
from domenum.models import Graph, Hypergraph, VertexSet
from domenum.models.graph import is_connected

logger = logging.getLogger(__name__)


def _check_cap(n: int, what: str) -> None:
    cap = get_settings().ORACLE_MAX_VERTICES
    if n > cap:
        raise OracleCapExceededError(
            f"{what} has {n} vertices, oracle cap is {cap} (DOMENUM_ORACLE_MAX_VERTICES)"
        )


def _subsets_by_size(n: int) -> Iterator[tuple[tuple[int, ...], int]]:
    for k in range(n + 1):
        for combo in combinations(range(n), k):
            mask = 0
            for v in combo:
                mask |= 1 << v
            yield combo, mask


def _minimal_monotone(n: int, holds: Callable[[int], bool]) -> list[VertexSet]:
    accepted: list[int] = []
    family: list[VertexSet] = []
    for combo, mask in _subsets_by_size(n):
        if any(a & mask == a for a in accepted):
            continue
        if holds(mask):
            accepted.append(mask)
            family.append(VertexSet.trusted(combo, n))
    family.sort(key=lambda s: s.members)
    return family


def _adjacency_masks(g: Graph) -> list[int]:
    masks = []
    for v in range(g.n):
        mask = 0
        for u in g.adjacency[v]:
            mask |= 1 << u
        masks.append(mask)
    return masks


def _covers_all(targets: list[int], mask: int) -> bool:
    return all(t & mask for t in targets)


def _mask_connected(adjacency: list[int], mask: int) -> bool:
    """G[mask] is connected and non-empty."""
    if not mask:
        return False
    reached = mask & -mask
    frontier = reached
    while frontier:
        grown = 0
        rest = frontier
        while rest:
            low = rest & -rest
            grown |= adjacency[low.bit_length() - 1]
            rest ^= low
        frontier = grown & mask & ~reached
        reached |= frontier
    return reached == mask


# =============================================================================
# Domination
# =============================================================================

def oracle_minimal_dominating_sets(g: Graph) -> list[VertexSet]:
    _check_cap(g.n, "graph")
    adjacency = _adjacency_masks(g)
    closed = [adjacency[v] | 1 << v for v in range(g.n)]
    family = _minimal_monotone(g.n, lambda mask: _covers_all(closed, mask))
    logger.debug("Oracle: %d minimal dominating sets on n=%d", len(family), g.n)
    return family


def oracle_minimal_total_dominating_sets(g: Graph) -> list[VertexSet]:
    """Raises NoTotalDominatingSetError when g has an isolated vertex."""
    _check_cap(g.n, "graph")
    for v in range(g.n):
        if not g.adjacency[v]:
            raise NoTotalDominatingSetError(
                f"vertex {v} is isolated, no total dominating set exists", witness=[v]
            )
    adjacency = _adjacency_masks(g)
    return _minimal_monotone(g.n, lambda mask: _covers_all(adjacency, mask))


def oracle_minimal_connected_dominating_sets(g: Graph) -> list[VertexSet]:
    """Raises NoConnectedDominatingSetError when g is disconnected."""
    _check_cap(g.n, "graph")
    if not is_connected(g):
        raise NoConnectedDominatingSetError(
            "graph is disconnected, no connected dominating set exists"
        )
    adjacency = _adjacency_masks(g)
    closed = [adjacency[v] | 1 << v for v in range(g.n)]

    def connected_dominating(mask: int) -> bool:
        return _covers_all(closed, mask) and _mask_connected(adjacency, mask)

    family: list[VertexSet] = []
    for combo, mask in _subsets_by_size(g.n):
        if not connected_dominating(mask):
            continue
        if all(not connected_dominating(mask & ~(1 << v)) for v in combo):
            family.append(VertexSet.trusted(combo, g.n))
    family.sort(key=lambda s: s.members)
    return family


# =============================================================================
# Transversals and Separators
# =============================================================================

def oracle_minimal_transversals(h: Hypergraph) -> list[VertexSet]:
    """Raises NoTransversalError when h has an empty hyperedge."""
    _check_cap(h.ground_size, "hypergraph")
    edge_masks = []
    for i, e in enumerate(h.edges):
        if not e:
            raise NoTransversalError(f"hyperedge {i} is empty, no transversal exists", witness=[i])
        mask = 0
        for v in e:
            mask |= 1 << v
        edge_masks.append(mask)
    return _minimal_monotone(h.ground_size, lambda mask: _covers_all(edge_masks, mask))


def oracle_minimal_separators(g: Graph) -> list[VertexSet]:
    """Inclusion-minimal S with G - S disconnected; g must be connected.

    Separation is not monotone, but a separator with a separating proper
    subset contains a smaller minimal one, so the accepted-subset skip
    still applies.
    """
    _check_cap(g.n, "graph")
    if not is_connected(g):
        raise PreconditionError("graph is disconnected, every set separates it")
    adjacency = _adjacency_masks(g)
    everyone = (1 << g.n) - 1

    def separates(mask: int) -> bool:
        rest = everyone & ~mask
        return bool(rest) and not _mask_connected(adjacency, rest)

    return _minimal_monotone(g.n, separates)
