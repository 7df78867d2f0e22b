"""Constructions tying graphs and hypergraphs together.

Graph -> hypergraph:
- closed neighbourhood hypergraph N(G): dominating sets are its transversals
- open neighbourhood hypergraph N_o(G): total dominating sets are its transversals
- split graph -> (C(G), {N(s) | s in S(G)})

Hypergraph -> graph (vertex layout fixed by IncidenceLabels):
- bipartite incidence I(H)
- split incidence I'(H): I(H) with the ground side made a clique
- co-bipartite incidence B(H): I(H) with both sides made cliques plus an
  apex adjacent to the ground side

and the streaming filter that recovers tr(H) from the minimal dominating
sets of B(H).
"""

import logging
from collections.abc import Iterable, Iterator
from itertools import combinations

from domenum.errors import (
    ContractViolationError,
    DegenerateInputError,
    NoTotalDominatingSetError,
)
from domenum.models import Graph, Hypergraph, IncidenceLabels, SplitPartition, VertexSet

logger = logging.getLogger(__name__)


# =============================================================================
# Graph -> Hypergraph
# =============================================================================

def closed_neighbourhood_hypergraph(g: Graph) -> Hypergraph:
    """One edge N[x] per vertex, in vertex order (duplicates retained)."""
    edges = tuple(tuple(sorted((*g.adjacency[x], x))) for x in range(g.n))
    return Hypergraph(ground_size=g.n, edges=edges)


def open_neighbourhood_hypergraph(g: Graph) -> Hypergraph:
    """One edge N(x) per vertex; an isolated vertex would give an empty edge."""
    for x in range(g.n):
        if not g.adjacency[x]:
            raise NoTotalDominatingSetError(
                f"vertex {x} is isolated, no total dominating set exists", witness=[x]
            )
    return Hypergraph(ground_size=g.n, edges=g.adjacency)


def split_graph_to_hypergraph(g: Graph, p: SplitPartition) -> Hypergraph:
    """Hypergraph on the clique with one edge N(s) per independent vertex s.

    Ground vertex i stands for ``p.clique.members[i]``. An independent vertex
    without clique neighbours yields an empty edge: such a graph has no
    connected dominating set.
    """
    position = {c: i for i, c in enumerate(p.clique.members)}
    edges = tuple(
        tuple(position[c] for c in g.adjacency[s] if c in position)
        for s in p.independent.members
    )
    has_empty = any(not e for e in edges)
    if has_empty:
        logger.warning("Independent vertex without clique neighbour: empty hyperedge recorded")
    return Hypergraph(ground_size=len(position), edges=edges, allow_empty_edges=has_empty)


# =============================================================================
# Hypergraph -> Graph
# =============================================================================

def _incidence_neighbours(h: Hypergraph, extra: int) -> tuple[list[set[int]], IncidenceLabels]:
    nv = h.ground_size
    ne = len(h.edges)
    labels = IncidenceLabels(
        ground_count=nv,
        edge_vertices=tuple(range(nv, nv + ne)),
        apex=nv + ne if extra else None,
    )
    nbrs: list[set[int]] = [set() for _ in range(nv + ne + extra)]
    for i, edge in enumerate(h.edges):
        y = nv + i
        for x in edge:
            nbrs[x].add(y)
            nbrs[y].add(x)
    return nbrs, labels


def _make_clique(nbrs: list[set[int]], vertices: Iterable[int]) -> None:
    for u, v in combinations(vertices, 2):
        nbrs[u].add(v)
        nbrs[v].add(u)


def bipartite_incidence(h: Hypergraph) -> tuple[Graph, IncidenceLabels]:
    """I(H): x adjacent to y_e iff x in e."""
    nbrs, labels = _incidence_neighbours(h, extra=0)
    return Graph.from_neighbour_sets(nbrs), labels


def split_incidence(h: Hypergraph) -> tuple[Graph, IncidenceLabels]:
    """I'(H): I(H) with the ground side turned into a clique."""
    nbrs, labels = _incidence_neighbours(h, extra=0)
    _make_clique(nbrs, range(h.ground_size))
    return Graph.from_neighbour_sets(nbrs), labels


def cobipartite_incidence(h: Hypergraph) -> tuple[Graph, IncidenceLabels]:
    """B(H): cliques on both sides of I(H) plus an apex adjacent to the ground side."""
    if not any(h.edges):
        raise DegenerateInputError("co-bipartite incidence needs at least one non-empty hyperedge")
    nbrs, labels = _incidence_neighbours(h, extra=1)
    _make_clique(nbrs, range(h.ground_size))
    _make_clique(nbrs, labels.edge_vertices)
    apex = labels.vertex_count - 1
    for x in range(h.ground_size):
        nbrs[apex].add(x)
        nbrs[x].add(apex)
    return Graph.from_neighbour_sets(nbrs), labels


# =============================================================================
# Filter
# =============================================================================

def filter_bdom_to_transversals(
    h: Hypergraph,
    dsets: Iterable[VertexSet],
    labels: IncidenceLabels | None = None,
    dropped: list[VertexSet] | None = None,
) -> Iterator[VertexSet]:
    """Pass the minimal dominating sets of B(H) that lie on the ground side.

    The others must be pairs {x, y_e} with x a ground copy or the apex; they
    are dropped (and appended to ``dropped`` when given). Anything else means
    the input was not D(B(H)).
    """
    if labels is None:
        nv, ne = h.ground_size, len(h.edges)
        labels = IncidenceLabels(
            ground_count=nv, edge_vertices=tuple(range(nv, nv + ne)), apex=nv + ne
        )
    for d in dsets:
        members = d.members
        if all(labels.is_ground(v) for v in members):
            yield VertexSet.trusted(members, h.ground_size)
            continue
        if len(members) == 2 and _is_lemma_pair(labels, *members):
            if dropped is not None:
                dropped.append(d)
            continue
        raise ContractViolationError(
            f"set {d.external()} is neither a ground-side set nor an {{x, y_e}} pair",
            witness=list(members),
        )


def _is_lemma_pair(labels: IncidenceLabels, u: int, v: int) -> bool:
    """{x, y_e} with x a ground copy or the apex."""
    if labels.edge_index(u) is not None:
        u, v = v, u
    if labels.edge_index(v) is None:
        return False
    return labels.is_ground(u) or u == labels.apex
