"""Pydantic models for the certificates and labelings the algorithms produce.

- SplitPartition / SplitCheck: clique + maximal independent side, or a
  forbidden induced subgraph
- ChordalCheck / InducedPathCheck: recognition verdicts with witnesses
- EnumerationOrder: the linear order DominantSplit extends cliques along
- RedundancyLabeling: irredundant/redundant vertices for the completion
- IncidenceLabels: role of each vertex of an incidence graph
- SeparatorFamily: minimal separators with their provenance
- DelayStats: counted-operation gaps between consecutive emissions
"""

from collections.abc import Sequence
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from domenum.models.graph import VertexSet


# =============================================================================
# Recognition
# =============================================================================

class SplitPartition(BaseModel):
    """Certified (clique, independent set) bipartition of a split graph."""

    model_config = ConfigDict(frozen=True)

    clique: VertexSet = Field(..., description="C(G)")
    independent: VertexSet = Field(..., description="S(G), maximal")

    @model_validator(mode="after")
    def _check_cover(self) -> "SplitPartition":
        n = self.clique.universe_size
        if self.independent.universe_size != n:
            raise ValueError("clique and independent side use different universes")
        if not self.clique.as_set().isdisjoint(self.independent.members):
            raise ValueError("clique and independent side overlap")
        if len(self.clique) + len(self.independent) != n:
            raise ValueError("partition does not cover every vertex")
        return self


class ForbiddenSubgraph(str, Enum):
    """Induced subgraphs whose absence characterises split graphs."""

    TWO_K2 = "2K2"
    C4 = "C4"
    C5 = "C5"


class SplitCheck(BaseModel):
    """Result of split recognition."""

    partition: SplitPartition | None = None
    witness_kind: ForbiddenSubgraph | None = None
    witness: tuple[int, ...] = Field(default=(), description="Vertices of the forbidden subgraph")

    @property
    def is_split(self) -> bool:
        return self.partition is not None


class ChordalCheck(BaseModel):
    """Result of chordality testing."""

    chordal: bool
    elimination_order: tuple[int, ...] = Field(
        default=(), description="Perfect elimination ordering when chordal"
    )
    cycle: tuple[int, ...] = Field(default=(), description="Chordless cycle (length >= 4)")


class InducedPathCheck(BaseModel):
    """Result of searching for an induced path on a fixed number of vertices."""

    found: bool
    path: tuple[int, ...] = Field(default=(), description="Vertices in path order")


# =============================================================================
# Enumeration Order
# =============================================================================

class EnumerationOrder(BaseModel):
    """Linear ordering sigma: vertex -> rank in 1..n."""

    model_config = ConfigDict(frozen=True)

    sigma: tuple[int, ...] = Field(..., description="sigma[v] is the rank of vertex v")

    @model_validator(mode="after")
    def _check_bijective(self) -> "EnumerationOrder":
        if sorted(self.sigma) != list(range(1, len(self.sigma) + 1)):
            raise ValueError("sigma must be a bijection onto 1..n")
        return self

    @classmethod
    def identity(cls, n: int) -> "EnumerationOrder":
        return cls(sigma=tuple(range(1, n + 1)))

    @classmethod
    def from_sequence(cls, vertices: Sequence[int]) -> "EnumerationOrder":
        """Order in which ``vertices[0]`` gets rank 1, ``vertices[1]`` rank 2, ..."""
        sigma = [0] * len(vertices)
        for rank, v in enumerate(vertices, start=1):
            if not 0 <= v < len(vertices):
                raise ValueError(f"vertex {v} outside 0..{len(vertices) - 1}")
            sigma[v] = rank
        return cls(sigma=tuple(sigma))

    def arrange(self, vertices: Sequence[int]) -> list[int]:
        return sorted(vertices, key=self.sigma.__getitem__)


# =============================================================================
# Completion
# =============================================================================

class RedundancyLabeling(BaseModel):
    """Partition of V(G) into irredundant IR(G) and redundant RN(G) vertices."""

    model_config = ConfigDict(frozen=True)

    irredundant: VertexSet
    redundant: VertexSet
    twin_representative: tuple[int, ...] = Field(
        ..., description="For each vertex, an irredundant y with N[y] ⊆ N[v]"
    )


# =============================================================================
# Incidence Constructions
# =============================================================================

class IncidenceLabels(BaseModel):
    """Role of each vertex in an incidence graph built from a hypergraph.

    Ground copies occupy 0..ground_count-1, the vertex of edge i is
    ground_count+i, and the apex (B(H) only) comes last.
    """

    model_config = ConfigDict(frozen=True)

    ground_count: int = Field(..., ge=0)
    edge_vertices: tuple[int, ...] = Field(default=(), description="y_{e_i} for each edge i")
    apex: int | None = Field(None, description="Apex adjacent to the ground copies")

    @model_validator(mode="after")
    def _check_layout(self) -> "IncidenceLabels":
        expected = tuple(range(self.ground_count, self.ground_count + len(self.edge_vertices)))
        if self.edge_vertices != expected:
            raise ValueError("edge vertices must follow the ground copies contiguously")
        if self.apex is not None and self.apex != self.ground_count + len(self.edge_vertices):
            raise ValueError("apex must be the last vertex")
        return self

    @property
    def vertex_count(self) -> int:
        return self.ground_count + len(self.edge_vertices) + (self.apex is not None)

    def is_ground(self, v: int) -> bool:
        return v < self.ground_count

    def edge_index(self, v: int) -> int | None:
        i = v - self.ground_count
        return i if 0 <= i < len(self.edge_vertices) else None


# =============================================================================
# Separators
# =============================================================================

class SeparatorSource(str, Enum):
    """How a separator family was produced."""

    GENERATION_RULE = "generation-rule"
    ORACLE = "oracle"


class SeparatorFamily(BaseModel):
    """Antichain of inclusion-minimal separators."""

    model_config = ConfigDict(frozen=True)

    separators: tuple[VertexSet, ...] = Field(default=())
    source: SeparatorSource


# =============================================================================
# Streams
# =============================================================================

class DelayStats(BaseModel):
    """Counted basic operations between consecutive emissions."""

    count: int = Field(default=0, description="Number of emitted sets")
    max_delay: int = Field(default=0, description="Largest inter-emission operation count")
    mean_delay: float = Field(default=0.0, description="Mean inter-emission operation count")
    total_operations: int = Field(default=0, description="Operations charged overall")

    def summary_line(self) -> str:
        return (
            f"# stats count={self.count} max_delay={self.max_delay} "
            f"mean_delay={self.mean_delay:.2f} total_ops={self.total_operations}"
        )
