"""Membership predicates for dominating sets and their variants.

These certify enumerated output independently of how it was produced.
"""

from collections.abc import Iterable

from domenum.models import Graph, VertexSet
from domenum.models.graph import closed_neighbourhood_of_set, induces_connected


def _members(d: VertexSet | Iterable[int]) -> frozenset[int]:
    return d.as_set() if isinstance(d, VertexSet) else frozenset(d)


def is_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    """Every vertex is in D or adjacent to D."""
    return len(closed_neighbourhood_of_set(g, _members(d))) == g.n


def is_total_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    """Every vertex, members of D included, has a neighbour in D."""
    members = _members(d)
    return all(not members.isdisjoint(g.adjacency[v]) for v in range(g.n))


def is_connected_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    members = _members(d)
    return induces_connected(g, members) and is_dominating(g, members)


def private_neighbours(g: Graph, d: VertexSet | Iterable[int], x: int) -> VertexSet:
    """Vertices of N[x] that no other member of D dominates."""
    members = _members(d)
    others = closed_neighbourhood_of_set(g, members - {x}).as_set()
    own = {x, *g.adjacency[x]}
    return VertexSet.of(own - others, g.n)


def is_minimal_dominating(g: Graph, d: VertexSet | Iterable[int]) -> bool:
    """D dominates and every member has a private neighbour."""
    members = _members(d)
    if not is_dominating(g, members):
        return False
    return all(len(private_neighbours(g, members, x)) > 0 for x in members)


def vertex_coverage_holds(family: Iterable[VertexSet], n: int) -> bool:
    """Every vertex 0..n-1 belongs to some set of the family.

    Holds for D(G) of any graph: a maximal independent set through v is a
    minimal dominating set containing v.
    """
    covered: set[int] = set()
    for d in family:
        covered.update(d.members)
    return len(covered) == n
