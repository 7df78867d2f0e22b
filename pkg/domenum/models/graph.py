"""Pydantic models for undirected simple graphs and vertex sets.

Vertex ids are contiguous 0..n-1 internally; text formats are 1-based and
converted in domenum.formats.

Besides the models, this module holds the neighbourhood, component and
edge-mutation primitives every algorithm consumes:

- closed/open neighbourhood of a vertex or of a set
- connected components through a networkx view (optionally with vertices removed)
- edge addition, complement, induced subgraph
"""

from bisect import bisect_left
from collections.abc import Collection, Iterable, Sequence

import networkx as nx
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, model_validator

from domenum.errors import InvalidEdgeError, InvalidVertexError


# =============================================================================
# Vertex Sets
# =============================================================================

class VertexSet(BaseModel):
    """Strictly sorted set of vertex ids over a host universe."""

    model_config = ConfigDict(frozen=True)

    members: tuple[int, ...] = Field(default=(), description="Sorted vertex ids")
    universe_size: int = Field(..., ge=0, description="Vertex count of the host")

    @model_validator(mode="after")
    def _check_members(self) -> "VertexSet":
        previous = -1
        for v in self.members:
            if v <= previous:
                raise ValueError("members must be strictly increasing")
            previous = v
        if self.members and (self.members[0] < 0 or self.members[-1] >= self.universe_size):
            raise ValueError(f"member outside 0..{self.universe_size - 1}")
        return self

    @classmethod
    def of(cls, members: Iterable[int], universe_size: int) -> "VertexSet":
        """Build a validated set from any iterable of ids (duplicates collapse)."""
        return cls(members=tuple(sorted(set(members))), universe_size=universe_size)

    @classmethod
    def trusted(cls, members: Sequence[int], universe_size: int) -> "VertexSet":
        """Wrap already sorted, in-range, duplicate-free ids without validation."""
        return cls.model_construct(members=tuple(members), universe_size=universe_size)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        i = bisect_left(self.members, v)  # type: ignore[arg-type]
        return i < len(self.members) and self.members[i] == v

    def as_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def external(self) -> str:
        """Space separated 1-based ids, the line format of every set stream."""
        return " ".join(str(v + 1) for v in self.members)


# =============================================================================
# Graph
# =============================================================================

class Graph(BaseModel):
    """Undirected simple graph on vertices 0..n-1 with sorted adjacency lists."""

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0, description="Vertex count")
    adjacency: tuple[tuple[int, ...], ...] = Field(
        default=(), description="Per-vertex strictly sorted neighbour ids"
    )
    m: int = Field(default=0, ge=0, description="Edge count")

    _neighbour_sets: tuple[frozenset[int], ...] = PrivateAttr(default=())

    @model_validator(mode="after")
    def _check_adjacency(self) -> "Graph":
        if len(self.adjacency) != self.n:
            raise ValueError(f"expected {self.n} adjacency lists, got {len(self.adjacency)}")
        degree_sum = 0
        for v, nbrs in enumerate(self.adjacency):
            previous = -1
            for u in nbrs:
                if u <= previous:
                    raise ValueError(f"adjacency of {v} is not strictly sorted")
                if u < 0 or u >= self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                previous = u
            degree_sum += len(nbrs)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if not _sorted_contains(self.adjacency[u], v):
                    raise ValueError(f"adjacency is not symmetric on {{{v}, {u}}}")
        if degree_sum != 2 * self.m:
            raise ValueError(f"m={self.m} but adjacency lists hold {degree_sum // 2} edges")
        return self

    def model_post_init(self, __context: object) -> None:
        self._neighbour_sets = tuple(frozenset(nbrs) for nbrs in self.adjacency)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; repeated edges collapse to one."""
        if n < 0:
            raise InvalidVertexError(f"negative vertex count {n}")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            _check_vertex(n, u)
            _check_vertex(n, v)
            if u == v:
                raise InvalidEdgeError(f"self-loop at vertex {u}", witness=[u])
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls.from_neighbour_sets(nbrs)

    @classmethod
    def from_neighbour_sets(cls, nbrs: Sequence[Collection[int]]) -> "Graph":
        adjacency = tuple(tuple(sorted(s)) for s in nbrs)
        m = sum(len(a) for a in adjacency) // 2
        return cls(n=len(adjacency), adjacency=adjacency, m=m)

    def neighbours(self, x: int) -> tuple[int, ...]:
        return self.adjacency[x]

    def neighbour_set(self, x: int) -> frozenset[int]:
        return self._neighbour_sets[x]

    def has_edge(self, u: int, v: int) -> bool:
        return _sorted_contains(self.adjacency[u], v)

    def degree(self, x: int) -> int:
        return len(self.adjacency[x])

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def vertices(self) -> VertexSet:
        return VertexSet.trusted(range(self.n), self.n)


def _sorted_contains(values: tuple[int, ...], x: int) -> bool:
    i = bisect_left(values, x)
    return i < len(values) and values[i] == x


def _check_vertex(n: int, x: int) -> None:
    if not 0 <= x < n:
        raise InvalidVertexError(f"vertex {x} outside 0..{n - 1}", witness=[x])


def _members(xs: VertexSet | Iterable[int]) -> Iterable[int]:
    return xs.members if isinstance(xs, VertexSet) else xs


# =============================================================================
# Neighbourhoods
# =============================================================================

def closed_neighbourhood(g: Graph, x: int) -> VertexSet:
    """N[x] = N(x) ∪ {x}."""
    _check_vertex(g.n, x)
    return VertexSet.of((*g.adjacency[x], x), g.n)


def open_neighbourhood(g: Graph, x: int) -> VertexSet:
    """N(x)."""
    _check_vertex(g.n, x)
    return VertexSet.trusted(g.adjacency[x], g.n)


def closed_neighbourhood_of_set(g: Graph, xs: VertexSet | Iterable[int]) -> VertexSet:
    """N[X], the union of N[x] over x in X."""
    result: set[int] = set()
    for x in _members(xs):
        _check_vertex(g.n, x)
        result.add(x)
        result.update(g.adjacency[x])
    return VertexSet.of(result, g.n)


def open_neighbourhood_of_set(g: Graph, xs: VertexSet | Iterable[int]) -> VertexSet:
    """N(X) = N[X] minus X."""
    members = set(_members(xs))
    closed = closed_neighbourhood_of_set(g, members)
    return VertexSet.of((v for v in closed.members if v not in members), g.n)


# =============================================================================
# Components
# =============================================================================

def as_networkx(g: Graph) -> nx.Graph:
    """networkx copy of g on the same vertex ids."""
    view = nx.Graph()
    view.add_nodes_from(range(g.n))
    view.add_edges_from(g.edges())
    return view


def components_of(view: nx.Graph, removed: Collection[int] = ()) -> list[list[int]]:
    """Components of ``view`` minus ``removed`` as sorted lists ordered by minimum."""
    remaining = nx.restricted_view(view, removed, ()) if removed else view
    return sorted((sorted(c) for c in nx.connected_components(remaining)), key=lambda c: c[0])


def components_without(g: Graph, removed: Collection[int] = ()) -> list[list[int]]:
    """Components of G minus ``removed`` as sorted lists ordered by minimum."""
    return components_of(as_networkx(g), removed)


def connected_components(g: Graph) -> list[VertexSet]:
    """Maximal connected vertex sets, ordered by their minimum member."""
    return [VertexSet.trusted(c, g.n) for c in components_without(g)]


def is_connected(g: Graph) -> bool:
    # networkx refuses the null graph; zero vertices count as connected here
    return g.n == 0 or nx.is_connected(as_networkx(g))


def induces_connected(g: Graph, xs: Collection[int]) -> bool:
    """True iff G[X] is connected (the empty set counts as disconnected)."""
    members = set(xs)
    if not members:
        return False
    for x in members:
        _check_vertex(g.n, x)
    return nx.is_connected(as_networkx(g).subgraph(members))


# =============================================================================
# Derived Graphs
# =============================================================================

def with_added_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Copy of g plus ``edges``; edges already present are ignored."""
    nbrs = [set(a) for a in g.adjacency]
    for u, v in edges:
        _check_vertex(g.n, u)
        _check_vertex(g.n, v)
        if u == v:
            raise InvalidEdgeError(f"self-loop at vertex {u}", witness=[u])
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph.from_neighbour_sets(nbrs)


def complement(g: Graph) -> Graph:
    """uv is an edge iff it is not an edge of g (no loops)."""
    inverse = nx.complement(as_networkx(g))
    return Graph.from_neighbour_sets([list(inverse.adj[v]) for v in range(g.n)])


def induced_subgraph(g: Graph, xs: VertexSet | Iterable[int]) -> tuple[Graph, list[int]]:
    """G[X] relabelled to 0..|X|-1, plus the new-id -> old-id mapping."""
    mapping = sorted(set(_members(xs)))
    for x in mapping:
        _check_vertex(g.n, x)
    position = {old: new for new, old in enumerate(mapping)}
    nbrs = [[position[u] for u in g.adjacency[old] if u in position] for old in mapping]
    return Graph.from_neighbour_sets(nbrs), mapping
