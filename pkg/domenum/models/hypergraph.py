"""Pydantic model for hypergraphs and the transversal predicates.

Edge order is preserved exactly as given: incidence constructions name the
vertex of edge i after its position, so reordering would relabel them.
Duplicate edges are legal input and collapse under ``minimize``.
"""

from collections.abc import Iterable, Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from domenum.errors import InvalidVertexError, NoTransversalError
from domenum.models.graph import VertexSet


class Hypergraph(BaseModel):
    """Ground set 0..ground_size-1 with an ordered list of hyperedges."""

    model_config = ConfigDict(frozen=True)

    ground_size: int = Field(..., ge=0, description="Number of ground vertices")
    edges: tuple[tuple[int, ...], ...] = Field(
        default=(), description="Hyperedges as strictly sorted id tuples, in input order"
    )
    allow_empty_edges: bool = Field(
        default=False, description="Permit empty hyperedges (degenerate construction)"
    )

    @model_validator(mode="after")
    def _check_edges(self) -> "Hypergraph":
        for i, edge in enumerate(self.edges):
            if not edge and not self.allow_empty_edges:
                raise ValueError(f"hyperedge {i} is empty")
            previous = -1
            for v in edge:
                if v <= previous:
                    raise ValueError(f"hyperedge {i} is not strictly sorted")
                if v >= self.ground_size:
                    raise ValueError(f"hyperedge {i} uses vertex {v} outside the ground set")
                previous = v
        return self

    @classmethod
    def from_edges(
        cls,
        ground_size: int,
        edges: Iterable[Iterable[int]],
        allow_empty_edges: bool = False,
    ) -> "Hypergraph":
        """Build a hypergraph; each edge is sorted and de-duplicated."""
        return cls(
            ground_size=ground_size,
            edges=tuple(tuple(sorted(set(e))) for e in edges),
            allow_empty_edges=allow_empty_edges,
        )

    def edge_sets(self) -> list[frozenset[int]]:
        return [frozenset(e) for e in self.edges]

    def has_empty_edge(self) -> bool:
        return any(not e for e in self.edges)


class SimplicityViolation(str, Enum):
    """Which condition of simplicity a hypergraph breaks."""

    NESTED_EDGES = "nested_edges"
    DUPLICATE_EDGES = "duplicate_edges"
    UNCOVERED_VERTEX = "uncovered_vertex"


class SimplicityReport(BaseModel):
    """Outcome of ``is_simple`` with the offending edges or vertex."""

    simple: bool
    violation: SimplicityViolation | None = None
    edge_indices: tuple[int, ...] = Field(
        default=(), description="Offending edges: (contained, containing) or (first, duplicate)"
    )
    vertex: int | None = Field(None, description="Uncovered ground vertex")


# =============================================================================
# Normalisation
# =============================================================================

def minimize(h: Hypergraph) -> Hypergraph:
    """Min(H): inclusion-minimal edges, duplicates kept once (earliest copy)."""
    sets = h.edge_sets()
    kept: list[tuple[int, ...]] = []
    seen: set[frozenset[int]] = set()
    for i, e in enumerate(sets):
        if e in seen:
            continue
        if any(other < e for other in sets):
            continue
        seen.add(e)
        kept.append(h.edges[i])
    return Hypergraph(
        ground_size=h.ground_size, edges=tuple(kept), allow_empty_edges=h.allow_empty_edges
    )


def is_simple(h: Hypergraph) -> SimplicityReport:
    """Antichain of distinct edges covering every ground vertex."""
    sets = h.edge_sets()
    for i, e in enumerate(sets):
        for j, f in enumerate(sets):
            if i == j:
                continue
            if e == f and i < j:
                return SimplicityReport(
                    simple=False,
                    violation=SimplicityViolation.DUPLICATE_EDGES,
                    edge_indices=(i, j),
                )
            if e < f:
                return SimplicityReport(
                    simple=False,
                    violation=SimplicityViolation.NESTED_EDGES,
                    edge_indices=(i, j),
                )
    covered = set().union(*sets) if sets else set()
    for v in range(h.ground_size):
        if v not in covered:
            return SimplicityReport(
                simple=False, violation=SimplicityViolation.UNCOVERED_VERTEX, vertex=v
            )
    return SimplicityReport(simple=True)


# =============================================================================
# Transversal Predicates
# =============================================================================

def _members(h: Hypergraph, t: VertexSet | Iterable[int]) -> frozenset[int]:
    members = t.as_set() if isinstance(t, VertexSet) else frozenset(t)
    outside = sorted(v for v in members if not 0 <= v < h.ground_size)
    if outside:
        raise InvalidVertexError(
            f"vertex {outside[0]} outside 0..{h.ground_size - 1}", witness=outside
        )
    return members


def _require_no_empty_edge(h: Hypergraph) -> None:
    for i, e in enumerate(h.edges):
        if not e:
            raise NoTransversalError(f"hyperedge {i} is empty, no transversal exists", witness=[i])


def is_transversal(h: Hypergraph, t: VertexSet | Iterable[int]) -> bool:
    """T meets every hyperedge."""
    _require_no_empty_edge(h)
    members = _members(h, t)
    return all(not members.isdisjoint(e) for e in h.edges)


def is_minimal_transversal(h: Hypergraph, t: VertexSet | Iterable[int]) -> bool:
    """T is a transversal and every member has an edge met only by it."""
    _require_no_empty_edge(h)
    members = _members(h, t)
    witnessed: set[int] = set()
    for e in h.edges:
        hit = members.intersection(e)
        if not hit:
            return False
        if len(hit) == 1:
            witnessed.update(hit)
    return witnessed == members


def transversal_family(
    ground_size: int, family: Iterable[Iterable[int]]
) -> list[VertexSet]:
    """Sorted, de-duplicated list of VertexSets from raw id collections."""
    sets = {VertexSet.of(s, ground_size) for s in family}
    return sorted(sets, key=lambda s: s.members)


def as_hypergraph(ground_size: int, family: Sequence[VertexSet]) -> Hypergraph:
    """Treat a family of sets as the edges of a hypergraph on the same ground set."""
    return Hypergraph(
        ground_size=ground_size,
        edges=tuple(s.members for s in family),
        allow_empty_edges=any(len(s) == 0 for s in family),
    )
