"""Pytest configuration and fixtures for domenum tests."""

import os
import random

import pytest

# Set test environment variables before importing domenum
os.environ["DOMENUM_CHECK_UNIQUE_EMISSIONS"] = "true"
os.environ["DOMENUM_ORACLE_MAX_VERTICES"] = "16"
os.environ["DOMENUM_LOG_LEVEL"] = "WARNING"

from domenum.config import get_settings  # noqa: E402
from domenum.models import Graph, Hypergraph  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings():
    """Re-read settings for every test so monkeypatched variables apply."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng():
    """Seeded random source; every property suite is reproducible."""
    return random.Random(20240611)


@pytest.fixture
def make_graph():
    """Build a graph from 1-based edges, the way the text format numbers vertices."""

    def build(n: int, edges: list[tuple[int, int]]) -> Graph:
        return Graph.from_edges(n, [(u - 1, v - 1) for u, v in edges])

    return build


@pytest.fixture
def make_hypergraph():
    """Build a hypergraph from 1-based edges."""

    def build(n: int, edges: list[list[int]], allow_empty_edges: bool = False) -> Hypergraph:
        return Hypergraph.from_edges(
            n, ([v - 1 for v in e] for e in edges), allow_empty_edges=allow_empty_edges
        )

    return build


@pytest.fixture
def path_graph(make_graph):
    """P_n on 1..n."""

    def build(n: int) -> Graph:
        return make_graph(n, [(i, i + 1) for i in range(1, n)])

    return build


@pytest.fixture
def cycle_graph(make_graph):
    """C_n on 1..n."""

    def build(n: int) -> Graph:
        return make_graph(n, [(i, i % n + 1) for i in range(1, n + 1)])

    return build


@pytest.fixture
def complete_graph():
    """K_n."""

    def build(n: int) -> Graph:
        return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    return build


@pytest.fixture
def fig1_hypergraph(make_hypergraph):
    """Four vertices, six edges; e2 and e3 are not minimal and e6 repeats e4."""
    return make_hypergraph(
        4,
        [[1, 2], [1, 2, 3], [1, 3, 4], [2, 4], [3, 4], [2, 4]],
    )


@pytest.fixture
def two_matched_split(make_graph):
    """Clique {a=1, b=2}, independent {s1=3, s2=4}, a-s1 and b-s2."""
    return make_graph(4, [(1, 2), (1, 3), (2, 4)])


@pytest.fixture
def fig1_file(tmp_path):
    """The four-vertex, six-edge hypergraph as a file."""
    path = tmp_path / "fig1.hg"
    path.write_text(
        "# e4 and e6 coincide\n"
        "p hg 4 6\n"
        "h 1 2\n"
        "h 1 2 3\n"
        "h 1 3 4\n"
        "h 2 4\n"
        "h 3 4\n"
        "h 2 4\n"
    )
    return path


@pytest.fixture
def write_graph(tmp_path):
    """Write a graph file from 1-based edges and return its path."""

    def write(n: int, edges: list[tuple[int, int]], name: str = "g.graph"):
        path = tmp_path / name
        lines = [f"p graph {n} {len(edges)}", *(f"e {u} {v}" for u, v in edges)]
        path.write_text("\n".join(lines) + "\n")
        return path

    return write
