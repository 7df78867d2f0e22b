"""Minimal separators and connected domination.

A set S is a minimal ab-separator for some pair exactly when G - S has at
least two full components, components in which every vertex of S has a
neighbour. All of them are generated by closing the seeds

    N(C) for every component C of G - N[v]

under the rule

    S, x in S  ->  N(C) for every component C of G - (S ∪ N(x)).

The inclusion-minimal ones form the separator hypergraph S(G), whose
minimal transversals are the minimal connected dominating sets of a
connected non-complete graph.
"""

import logging
from collections import deque
from collections.abc import Collection, Iterator

import networkx as nx

from domenum.algorithms.stream import OperationCounter
from domenum.algorithms.trans_enum import trans_enum
from domenum.errors import (
    ContractViolationError,
    NoConnectedDominatingSetError,
    PreconditionError,
)
from domenum.models import Graph, SeparatorFamily, SeparatorSource, VertexSet
from domenum.models.graph import as_networkx, components_of, components_without, is_connected
from domenum.models.hypergraph import as_hypergraph

logger = logging.getLogger(__name__)


# =============================================================================
# Predicates
# =============================================================================

def is_separator(g: Graph, s: Collection[int]) -> bool:
    """G - S has at least two components."""
    return len(components_without(g, s)) >= 2


def full_components(g: Graph, s: Collection[int]) -> list[list[int]]:
    """Components of G - S adjacent to every vertex of S."""
    return _full_components(as_networkx(g), set(s))


def _full_components(view: nx.Graph, separator: set[int]) -> list[list[int]]:
    # the boundary of a component of G - S lies inside S
    return [
        component
        for component in components_of(view, separator)
        if nx.node_boundary(view, component) == separator
    ]


def is_minimal_ab_separator(g: Graph, s: Collection[int]) -> bool:
    """S separates some pair a, b minimally: G - S has two full components."""
    return len(full_components(g, s)) >= 2


# =============================================================================
# Generation
# =============================================================================

def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        components = components_without(g)
        raise PreconditionError(
            f"graph has {len(components)} components, separators need a connected graph",
            witness=[c[0] for c in components],
        )


def minimal_ab_separators(g: Graph) -> list[VertexSet]:
    """Every minimal ab-separator over all pairs, in lexicographic order.

    Raises:
        PreconditionError: g is disconnected.
    """
    _require_connected(g)
    view = as_networkx(g)
    found: set[frozenset[int]] = set()
    queue: deque[frozenset[int]] = deque()

    def offer(candidate: frozenset[int]) -> None:
        if not candidate or candidate in found:
            return
        if len(_full_components(view, set(candidate))) < 2:
            raise ContractViolationError(
                "generated set lacks two full components", witness=sorted(candidate)
            )
        found.add(candidate)
        queue.append(candidate)

    for v in range(g.n):
        closed = {v, *g.adjacency[v]}
        for component in components_of(view, closed):
            offer(frozenset(nx.node_boundary(view, component)))

    while queue:
        s = queue.popleft()
        for x in s:
            blocked = s | g.neighbour_set(x)
            for component in components_of(view, blocked):
                offer(frozenset(nx.node_boundary(view, component)))

    logger.debug("Generated %d minimal ab-separators on n=%d", len(found), g.n)
    return sorted((VertexSet.of(s, g.n) for s in found), key=lambda s: s.members)


def minimal_separators(g: Graph) -> SeparatorFamily:
    """Inclusion-minimal members of the minimal ab-separators.

    Raises:
        PreconditionError: g is disconnected.
    """
    candidates = minimal_ab_separators(g)
    kept: list[VertexSet] = []
    for s in sorted(candidates, key=len):
        members = s.as_set()
        if not any(k.as_set() < members for k in kept):
            kept.append(s)
    kept.sort(key=lambda s: s.members)
    return SeparatorFamily(separators=tuple(kept), source=SeparatorSource.GENERATION_RULE)


# =============================================================================
# Connected Domination
# =============================================================================

def is_complete(g: Graph) -> bool:
    return 2 * g.m == g.n * (g.n - 1)


def cdom_enum(g: Graph, counter: OperationCounter | None = None) -> Iterator[VertexSet]:
    """Yield the minimal connected dominating sets as tr(S(G)).

    Complete graphs have no separator, so every singleton is emitted
    instead; the empty graph emits nothing.

    Raises:
        NoConnectedDominatingSetError: g is disconnected.
    """
    if not is_connected(g):
        raise NoConnectedDominatingSetError(
            "graph is disconnected, no connected dominating set exists",
            witness=[c[0] for c in components_without(g)],
        )
    counter = counter or OperationCounter()
    if is_complete(g):
        logger.debug("cdom_enum: complete graph on %d vertices", g.n)
        return _singletons(g, counter)
    family = minimal_separators(g)
    counter.charge(sum(len(s) for s in family.separators))
    logger.debug("cdom_enum: %d minimal separators", len(family.separators))
    return trans_enum(as_hypergraph(g.n, family.separators), counter)


def _singletons(g: Graph, counter: OperationCounter) -> Iterator[VertexSet]:
    for v in range(g.n):
        counter.charge()
        yield VertexSet.trusted((v,), g.n)
