"""Text formats for graphs, hypergraphs, permutations and set streams.

Graph file::

    # optional comments
    p graph <n> <m>
    e <u> <v>           (m lines, 1 <= u, v <= n)

Hypergraph file::

    p hg <n> <m>
    h <v1> ... <vk>     (m lines, k >= 1 unless empty edges are allowed)

Permutation file: n lines, each a distinct 1-based vertex id.

External ids are 1-based; every model uses 0-based ids. Blank lines and
lines starting with ``#`` are ignored everywhere.
"""

from collections.abc import Iterator

from domenum.errors import ParseError
from domenum.models import EnumerationOrder, Graph, Hypergraph, IncidenceLabels, VertexSet


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line.split()


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", line=line) from None


def _parse_header(fields: list[str], kind: str, line: int) -> tuple[int, int]:
    if len(fields) != 4 or fields[0] != "p" or fields[1] != kind:
        raise ParseError(f"expected header 'p {kind} <n> <m>', got {' '.join(fields)!r}", line=line)
    n = _parse_int(fields[2], line)
    m = _parse_int(fields[3], line)
    if n < 0 or m < 0:
        raise ParseError("header counts must be non-negative", line=line)
    return n, m


def _parse_vertex(token: str, n: int, line: int) -> int:
    v = _parse_int(token, line)
    if not 1 <= v <= n:
        raise ParseError(f"vertex {v} outside 1..{n}", line=line)
    return v - 1


def parse_graph(text: str) -> Graph:
    """Parse a graph file; duplicate edges and self-loops are rejected."""
    header: tuple[int, int] | None = None
    seen: set[tuple[int, int]] = set()
    last_line = 0
    for number, fields in _content_lines(text):
        last_line = number
        if header is None:
            header = _parse_header(fields, "graph", number)
            continue
        n, m = header
        if fields[0] != "e" or len(fields) != 3:
            raise ParseError(f"expected 'e <u> <v>', got {' '.join(fields)!r}", line=number)
        u = _parse_vertex(fields[1], n, number)
        v = _parse_vertex(fields[2], n, number)
        if u == v:
            raise ParseError(f"self-loop at vertex {u + 1}", line=number)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise ParseError(f"duplicate edge {edge[0] + 1} {edge[1] + 1}", line=number)
        seen.add(edge)
    if header is None:
        raise ParseError("missing 'p graph <n> <m>' header", line=last_line or None)
    n, m = header
    if len(seen) != m:
        raise ParseError(f"header announces {m} edges, file has {len(seen)}", line=last_line)
    return Graph.from_edges(n, sorted(seen))


def parse_hypergraph(text: str, allow_empty_edge: bool = False) -> Hypergraph:
    """Parse a hypergraph file; repeated edges are kept in input order."""
    header: tuple[int, int] | None = None
    edges: list[list[int]] = []
    last_line = 0
    for number, fields in _content_lines(text):
        last_line = number
        if header is None:
            header = _parse_header(fields, "hg", number)
            continue
        n, _ = header
        if fields[0] != "h":
            raise ParseError(f"expected 'h <v1> ... <vk>', got {' '.join(fields)!r}", line=number)
        edge = [_parse_vertex(token, n, number) for token in fields[1:]]
        if not edge and not allow_empty_edge:
            raise ParseError("empty hyperedge (pass --allow-empty-edge to accept it)", line=number)
        if len(set(edge)) != len(edge):
            raise ParseError("vertex repeated inside a hyperedge", line=number)
        edges.append(edge)
    if header is None:
        raise ParseError("missing 'p hg <n> <m>' header", line=last_line or None)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"header announces {m} hyperedges, file has {len(edges)}", line=last_line)
    return Hypergraph.from_edges(n, edges, allow_empty_edges=allow_empty_edge)


def parse_permutation(text: str, n: int) -> EnumerationOrder:
    """Parse n distinct 1-based ids; the i-th line gets rank i."""
    order: list[int] = []
    seen: set[int] = set()
    last_line = 0
    for number, fields in _content_lines(text):
        last_line = number
        if len(fields) != 1:
            raise ParseError("expected one vertex id per line", line=number)
        v = _parse_vertex(fields[0], n, number)
        if v in seen:
            raise ParseError(f"vertex {v + 1} listed twice", line=number)
        seen.add(v)
        order.append(v)
    if len(order) != n:
        raise ParseError(f"permutation lists {len(order)} of {n} vertices", line=last_line or None)
    return EnumerationOrder.from_sequence(order)


# =============================================================================
# Serialisation
# =============================================================================

def format_set(s: VertexSet) -> str:
    return s.external()


def format_graph(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"p graph {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def format_hypergraph(h: Hypergraph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    lines.append(f"p hg {h.ground_size} {len(h.edges)}")
    lines.extend(" ".join(["h", *(str(v + 1) for v in e)]) for e in h.edges)
    return "\n".join(lines) + "\n"


def format_labels(labels: IncidenceLabels) -> list[str]:
    """Comment lines naming the role of each incidence-graph vertex (1-based)."""
    lines = [f"label {x + 1} ground {x + 1}" for x in range(labels.ground_count)]
    lines += [f"label {y + 1} edge {i + 1}" for i, y in enumerate(labels.edge_vertices)]
    if labels.apex is not None:
        lines.append(f"label {labels.apex + 1} apex")
    return lines
