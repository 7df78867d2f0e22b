"""Alternative routes from a hypergraph to its minimal transversals.

Each route turns tr(H) into a domination problem on an incidence graph and
maps the answer back:

- cobip: minimal dominating sets of B(H), minus the {x, y_e} pairs
- split-tdom: minimal total dominating sets of I'(H) after removing the
  vertices that lie in every edge
- split-cdom: minimal connected dominating sets of I'(H)

They agree with ``trans_enum`` on every hypergraph without an empty edge.
"""

import logging
from collections.abc import Iterator
from enum import Enum

from domenum.algorithms.reductions import (
    cobipartite_incidence,
    filter_bdom_to_transversals,
    split_incidence,
)
from domenum.algorithms.separators import cdom_enum
from domenum.algorithms.stream import OperationCounter
from domenum.algorithms.trans_enum import (
    dom_enum,
    strip_dominating_vertices,
    tdom_enum,
    trans_enum,
)
from domenum.errors import ContractViolationError, NoTransversalError
from domenum.models import Hypergraph, IncidenceLabels, VertexSet

logger = logging.getLogger(__name__)


class TransversalRoute(str, Enum):
    """Route used for ``enum mts``."""

    BERGE = "berge"
    COBIPARTITE = "cobip"
    SPLIT_TDOM = "split-tdom"
    SPLIT_CDOM = "split-cdom"


def _require_no_empty_edge(h: Hypergraph) -> None:
    for i, e in enumerate(h.edges):
        if not e:
            raise NoTransversalError(f"hyperedge {i} is empty, no transversal exists", witness=[i])


def _ground_side(
    sets: Iterator[VertexSet], labels: IncidenceLabels, h: Hypergraph
) -> Iterator[VertexSet]:
    for d in sets:
        if not all(labels.is_ground(v) for v in d.members):
            raise ContractViolationError(
                f"set {d.external()} leaves the ground side", witness=list(d.members)
            )
        yield VertexSet.trusted(d.members, h.ground_size)


def transversals_via_cobipartite(
    h: Hypergraph,
    counter: OperationCounter | None = None,
    dropped: list[VertexSet] | None = None,
) -> Iterator[VertexSet]:
    """tr(H) from the minimal dominating sets of B(H).

    The discarded {x, y_e} pairs are appended to ``dropped`` when given.

    Raises:
        NoTransversalError: H has an empty hyperedge.
        DegenerateInputError: H has no edges.
    """
    _require_no_empty_edge(h)
    graph, labels = cobipartite_incidence(h)
    logger.debug("B(H) has %d vertices and %d edges", graph.n, graph.m)
    return filter_bdom_to_transversals(h, dom_enum(graph, counter), labels, dropped)


def transversals_via_split_tdom(
    h: Hypergraph, counter: OperationCounter | None = None
) -> Iterator[VertexSet]:
    """tr(H) = {x} for each dominating vertex x, plus TD(I'(residual)).

    Raises:
        NoTransversalError: H has an empty hyperedge.
    """
    _require_no_empty_edge(h)
    return _split_tdom(h, counter or OperationCounter())


def _split_tdom(h: Hypergraph, counter: OperationCounter) -> Iterator[VertexSet]:
    if not h.edges:
        yield VertexSet(universe_size=h.ground_size)
        return
    residual, removed = strip_dominating_vertices(h)
    for x in removed.members:
        counter.charge()
        yield VertexSet.trusted((x,), h.ground_size)
    if residual.has_empty_edge():
        return
    graph, labels = split_incidence(residual)
    yield from _ground_side(tdom_enum(graph, counter), labels, h)


def transversals_via_split_cdom(
    h: Hypergraph, counter: OperationCounter | None = None
) -> Iterator[VertexSet]:
    """tr(H) as the minimal connected dominating sets of I'(H).

    When one edge is the whole ground set, I'(H) is complete and its edge
    vertex is a connected dominating singleton with no transversal
    counterpart; such sets are skipped.

    Raises:
        NoTransversalError: H has an empty hyperedge.
    """
    _require_no_empty_edge(h)
    return _split_cdom(h, counter or OperationCounter())


def _split_cdom(h: Hypergraph, counter: OperationCounter) -> Iterator[VertexSet]:
    if not h.edges:
        yield VertexSet(universe_size=h.ground_size)
        return
    graph, labels = split_incidence(h)
    sets = (
        d for d in cdom_enum(graph, counter)
        if not (len(d) == 1 and labels.edge_index(d.members[0]) is not None)
    )
    yield from _ground_side(sets, labels, h)


def route_transversals(
    h: Hypergraph,
    route: TransversalRoute | str = TransversalRoute.BERGE,
    counter: OperationCounter | None = None,
    dropped: list[VertexSet] | None = None,
) -> Iterator[VertexSet]:
    route = TransversalRoute(route)
    if route is TransversalRoute.COBIPARTITE:
        return transversals_via_cobipartite(h, counter, dropped)
    if route is TransversalRoute.SPLIT_TDOM:
        return transversals_via_split_tdom(h, counter)
    if route is TransversalRoute.SPLIT_CDOM:
        return transversals_via_split_cdom(h, counter)
    return trans_enum(h, counter)
