"""Seeded random instance generators.

Every generator takes an explicit ``random.Random`` so test suites and the
``generate`` subcommand are reproducible from a seed. Vertices are labelled
0..n-1 and, where a construction has a natural layout (split graphs), the
labels are shuffled so algorithms never see the layout for free.
"""

import random

from domenum.errors import PreconditionError
from domenum.models import Graph, Hypergraph
from domenum.models.hypergraph import minimize


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"edge probability {p} outside [0, 1]")


def _check_count(name: str, value: int) -> None:
    if value < 0:
        raise PreconditionError(f"{name} must be non-negative, got {value}")


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    """Erdős–Rényi G(n, p)."""
    _check_count("n", n)
    _check_probability(p)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_connected_graph(n: int, p: float, rng: random.Random) -> Graph:
    """A random spanning tree overlaid with G(n, p) edges."""
    _check_count("n", n)
    _check_probability(p)
    order = list(range(n))
    rng.shuffle(order)
    edges = [(order[i], order[rng.randrange(i)]) for i in range(1, n)]
    edges += [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_split_graph(
    clique_size: int, independent_size: int, p: float, rng: random.Random
) -> Graph:
    """Clique plus independent set, each cross pair joined with probability p."""
    _check_count("clique_size", clique_size)
    _check_count("independent_size", independent_size)
    _check_probability(p)
    n = clique_size + independent_size
    label = list(range(n))
    rng.shuffle(label)
    edges = [
        (label[u], label[v]) for u in range(clique_size) for v in range(u + 1, clique_size)
    ]
    edges += [
        (label[c], label[s])
        for s in range(clique_size, n)
        for c in range(clique_size)
        if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def random_chordal_graph(
    n: int, rng: random.Random, tree_size: int | None = None, max_subtree: int = 4
) -> Graph:
    """Intersection graph of random subtrees of a random host tree.

    Each vertex owns a connected subtree grown from a random node by up to
    ``max_subtree - 1`` random frontier steps; two vertices are adjacent
    iff their subtrees share a node. Subtree intersection graphs are
    exactly the chordal graphs.
    """
    _check_count("n", n)
    tree_size = tree_size or max(1, n)
    host: list[list[int]] = [[] for _ in range(tree_size)]
    for node in range(1, tree_size):
        parent = rng.randrange(node)
        host[node].append(parent)
        host[parent].append(node)

    subtrees: list[set[int]] = []
    for _ in range(n):
        nodes = {rng.randrange(tree_size)}
        for _ in range(rng.randrange(max_subtree)):
            frontier = sorted({u for x in nodes for u in host[x]} - nodes)
            if not frontier:
                break
            nodes.add(rng.choice(frontier))
        subtrees.append(nodes)

    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not subtrees[u].isdisjoint(subtrees[v])
    ]
    return Graph.from_edges(n, edges)


def random_hypergraph(
    ground_size: int, edge_count: int, rng: random.Random, max_edge_size: int | None = None
) -> Hypergraph:
    """``edge_count`` random non-empty edges (repeats and nesting allowed)."""
    _check_count("edge_count", edge_count)
    if ground_size < 1 and edge_count:
        raise PreconditionError("non-empty edges need at least one ground vertex")
    largest = min(ground_size, max_edge_size or ground_size)
    edges = [
        rng.sample(range(ground_size), rng.randint(1, largest)) for _ in range(edge_count)
    ]
    return Hypergraph.from_edges(ground_size, edges)


def random_simple_hypergraph(
    ground_size: int, edge_count: int, rng: random.Random, max_edge_size: int | None = None
) -> Hypergraph:
    """Minimised random hypergraph relabelled onto the vertices it covers.

    The result is an antichain covering its ground set, possibly on fewer
    than ``ground_size`` vertices and ``edge_count`` edges.
    """
    h = minimize(random_hypergraph(ground_size, edge_count, rng, max_edge_size))
    covered = sorted({v for e in h.edges for v in e})
    position = {v: i for i, v in enumerate(covered)}
    return Hypergraph.from_edges(
        len(covered), ([position[v] for v in e] for e in h.edges)
    )
