"""Command-line entry point for domenum.

Subcommands:
- classify: split / chordal / P6-free / co-bipartite verdicts with witnesses
- complete: redundancy labeling and the completion graph
- reduce: graph <-> hypergraph constructions with their vertex labels
- enum: stream minimal sets, one per line
- oracle: brute-force reference families
- generate: seeded random instances

Sets are printed as ascending 1-based ids; comment and statistics lines
start with ``#``. Logs go to stderr.
"""

import argparse
import logging
import random
import sys
from collections.abc import Callable, Iterable
from pathlib import Path
from typing import Any, TextIO

from pydantic import BaseModel

from domenum import __version__
from domenum.algorithms.classify import (
    contains_induced_p6,
    is_chordal,
    is_cobipartite,
    is_simplicial,
    split_partition,
)
from domenum.algorithms.completion import (
    classify_redundancy,
    completion_additions,
    completion_graph,
)
from domenum.algorithms.generators import (
    random_chordal_graph,
    random_connected_graph,
    random_graph,
    random_hypergraph,
    random_simple_hypergraph,
    random_split_graph,
)
from domenum.algorithms.oracles import (
    oracle_minimal_connected_dominating_sets,
    oracle_minimal_dominating_sets,
    oracle_minimal_separators,
    oracle_minimal_total_dominating_sets,
    oracle_minimal_transversals,
)
from domenum.algorithms.reductions import (
    bipartite_incidence,
    closed_neighbourhood_hypergraph,
    cobipartite_incidence,
    open_neighbourhood_hypergraph,
    split_incidence,
)
from domenum.algorithms.separators import cdom_enum, minimal_separators
from domenum.algorithms.stream import OperationCounter, VertexSetStream
from domenum.algorithms.trans_enum import DominationPath, dom_enum, tdom_enum
from domenum.algorithms.transversal_routes import TransversalRoute, route_transversals
from domenum.config import get_settings
from domenum.errors import EXIT_OK, EXIT_PRECONDITION, CheckMismatchError, DomenumError, ParseError
from domenum.formats import (
    format_graph,
    format_hypergraph,
    format_labels,
    format_set,
    parse_graph,
    parse_hypergraph,
    parse_permutation,
)
from domenum.models import Graph, Hypergraph, VertexSet

logger = logging.getLogger(__name__)

TARGETS = ("mds", "mtds", "mcds", "mts", "minsep")
HYPERGRAPH_TARGETS = ("mts",)
REDUCTIONS = ("closed-nbhd", "open-nbhd", "bip", "split-inc", "cobip-inc")
INSTANCE_KINDS = ("graph", "connected", "split", "chordal", "hypergraph", "simple-hypergraph")

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configure_logging(level: str, stream: TextIO) -> None:
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=stream, force=True)


# =============================================================================
# Input Helpers
# =============================================================================

def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str) -> Graph:
    g = parse_graph(_read(path))
    logger.debug("Loaded graph %s: n=%d m=%d", path, g.n, g.m)
    return g


def _load_hypergraph(path: str, allow_empty_edge: bool = False) -> Hypergraph:
    h = parse_hypergraph(_read(path), allow_empty_edge=allow_empty_edge)
    logger.debug("Loaded hypergraph %s: |V|=%d |E|=%d", path, h.ground_size, len(h.edges))
    return h


def _ids(vertices: Iterable[int]) -> str:
    return " ".join(str(v + 1) for v in vertices)


def _write_lines(out: TextIO, lines: Iterable[str]) -> None:
    for line in lines:
        out.write(line + "\n")


# =============================================================================
# classify / complete / reduce
# =============================================================================

def handle_classify(args: argparse.Namespace, out: TextIO) -> int:
    """Print recognition verdicts for a graph.

    Args:
        args: Parsed arguments with ``input``.
        out: Output stream.

    Returns:
        Exit status.
    """
    g = _load_graph(args.input)
    split = split_partition(g)
    if split.partition is not None:
        lines = [
            "split: yes",
            f"clique: {_ids(split.partition.clique.members)}",
            f"independent: {_ids(split.partition.independent.members)}",
        ]
    elif split.witness_kind is not None:
        lines = ["split: no", f"{split.witness_kind.value}: {_ids(split.witness)}"]
    else:
        lines = ["split: no"]

    chordal = is_chordal(g)
    if chordal.chordal:
        lines.append("chordal: yes")
        lines.append(f"elimination-order: {_ids(chordal.elimination_order)}")
    else:
        lines.append("chordal: no")
        lines.append(f"cycle: {_ids(chordal.cycle)}")

    p6 = contains_induced_p6(g)
    lines.append("p6-free: no" if p6.found else "p6-free: yes")
    if p6.found:
        lines.append(f"p6: {_ids(p6.path)}")
    lines.append(f"co-bipartite: {'yes' if is_cobipartite(g) else 'no'}")
    lines.append(f"simplicial: {_ids(v for v in range(g.n) if is_simplicial(g, v))}")
    _write_lines(out, lines)
    return EXIT_OK


def handle_complete(args: argparse.Namespace, out: TextIO) -> int:
    """Print IR/RN and the completion graph as a graph file."""
    g = _load_graph(args.input)
    labeling = classify_redundancy(g)
    additions = completion_additions(g, labeling)
    comments = [
        f"irredundant: {_ids(labeling.irredundant.members)}",
        f"redundant: {_ids(labeling.redundant.members)}",
    ]
    comments += [
        f"representative {v + 1} -> {labeling.twin_representative[v] + 1}"
        for v in labeling.redundant.members
    ]
    comments += [f"added: {u + 1} {v + 1}" for u, v in additions]
    out.write(format_graph(completion_graph(g, labeling), comments))
    return EXIT_OK


def handle_reduce(args: argparse.Namespace, out: TextIO) -> int:
    """Print the requested construction with its label map as comments."""
    if args.construction in ("closed-nbhd", "open-nbhd"):
        g = _load_graph(args.input)
        if args.construction == "closed-nbhd":
            h = closed_neighbourhood_hypergraph(g)
        else:
            h = open_neighbourhood_hypergraph(g)
        comments = [f"label edge {x + 1} vertex {x + 1}" for x in range(g.n)]
        out.write(format_hypergraph(h, comments))
        return EXIT_OK

    h = _load_hypergraph(args.input, args.allow_empty_edge)
    build = {
        "bip": bipartite_incidence,
        "split-inc": split_incidence,
        "cobip-inc": cobipartite_incidence,
    }[args.construction]
    graph, labels = build(h)
    out.write(format_graph(graph, format_labels(labels)))
    return EXIT_OK


# =============================================================================
# enum / oracle
# =============================================================================

def _oracle_family(target: str, instance: Graph | Hypergraph) -> list[VertexSet]:
    if isinstance(instance, Hypergraph):
        return oracle_minimal_transversals(instance)
    oracle: Callable[[Graph], list[VertexSet]] = {
        "mds": oracle_minimal_dominating_sets,
        "mtds": oracle_minimal_total_dominating_sets,
        "mcds": oracle_minimal_connected_dominating_sets,
        "minsep": oracle_minimal_separators,
    }[target]
    return oracle(instance)


def _load_instance(args: argparse.Namespace) -> Graph | Hypergraph:
    if args.target in HYPERGRAPH_TARGETS:
        return _load_hypergraph(args.input, args.allow_empty_edge)
    return _load_graph(args.input)


def _enumeration(
    args: argparse.Namespace,
    instance: Graph | Hypergraph,
    counter: OperationCounter,
    dropped: list[VertexSet],
) -> Iterable[VertexSet]:
    if isinstance(instance, Hypergraph):
        return route_transversals(instance, args.via, counter, dropped)
    if args.target == "mds":
        sigma = parse_permutation(_read(args.sigma), instance.n) if args.sigma else None
        return dom_enum(instance, counter, args.path, sigma)
    if args.target == "mtds":
        return tdom_enum(instance, counter)
    if args.target == "mcds":
        return cdom_enum(instance, counter)
    return iter(minimal_separators(instance).separators)


def _check_against_oracle(emitted: list[VertexSet], expected: list[VertexSet], err: TextIO) -> None:
    got = sorted(s.members for s in emitted)
    want = sorted(s.members for s in expected)
    if got == want:
        logger.info("Check passed: %d sets", len(got))
        return
    wanted = set(want)
    produced = set(got)
    for members in sorted(wanted - produced):
        err.write(f"# missing: {_ids(members)}\n")
    for members in sorted(produced - wanted):
        err.write(f"# unexpected: {_ids(members)}\n")
    if len(got) != len(produced):
        err.write(f"# duplicates: {len(got) - len(produced)}\n")
    raise CheckMismatchError(
        f"algorithm emitted {len(got)} sets, oracle has {len(want)}"
    )


def handle_enum(args: argparse.Namespace, out: TextIO) -> int:
    """Stream the minimal sets of the requested kind.

    Args:
        args: Parsed arguments (target, input and the stream flags).
        out: Output stream; sets and ``#`` lines are written here.

    Returns:
        Exit status.

    Raises:
        CheckMismatchError: With ``--check``, the output differs from the oracle.
    """
    instance = _load_instance(args)
    counter = OperationCounter()
    dropped: list[VertexSet] = []
    if args.show_pairs and args.via != TransversalRoute.COBIPARTITE.value:
        logger.warning("--show-pairs only applies to --via cobip")

    # the oracle comparison needs the whole multiset, duplicates included
    stream = VertexSetStream(
        counter=counter,
        limit=args.limit,
        check_unique=False if args.check else None,
        use_default_limit=not args.check,
    )
    emitted: list[VertexSet] = []

    def sink(s: VertexSet) -> None:
        emitted.append(s)
        if not args.sorted:
            out.write(format_set(s) + "\n")

    stats = stream.drain(_enumeration(args, instance, counter, dropped), sink)
    if args.sorted:
        _write_lines(out, (format_set(s) for s in sorted(emitted, key=lambda s: s.members)))
    if args.show_pairs:
        _write_lines(out, (f"# dropped: {format_set(d)}" for d in dropped))
    if args.stats:
        out.write(stats.summary_line() + "\n")
    if args.check:
        _check_against_oracle(emitted, _oracle_family(args.target, instance), args.err)
    return EXIT_OK


def handle_oracle(args: argparse.Namespace, out: TextIO) -> int:
    """Print the brute-force family, lexicographically sorted."""
    family = _oracle_family(args.target, _load_instance(args))
    _write_lines(out, (format_set(s) for s in family))
    return EXIT_OK


# =============================================================================
# generate
# =============================================================================

def handle_generate(args: argparse.Namespace, out: TextIO) -> int:
    """Write a seeded random instance in the matching file format."""
    rng = random.Random(args.seed)
    comment = [f"generated kind={args.kind} seed={args.seed}"]
    if args.kind == "graph":
        out.write(format_graph(random_graph(args.n, args.p, rng), comment))
    elif args.kind == "connected":
        out.write(format_graph(random_connected_graph(args.n, args.p, rng), comment))
    elif args.kind == "split":
        clique = args.clique if args.clique is not None else args.n // 2
        graph = random_split_graph(clique, args.n - clique, args.p, rng)
        out.write(format_graph(graph, comment))
    elif args.kind == "chordal":
        out.write(format_graph(random_chordal_graph(args.n, rng), comment))
    elif args.kind == "hypergraph":
        out.write(format_hypergraph(random_hypergraph(args.n, args.edges, rng), comment))
    else:
        out.write(format_hypergraph(random_simple_hypergraph(args.n, args.edges, rng), comment))
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================

def _non_negative(value: str) -> int:
    number = int(value)
    if number < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return number


def create_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Enumerate minimal dominating sets and minimal hypergraph transversals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    subparsers = parser.add_subparsers(dest="command", required=True)

    classify = subparsers.add_parser("classify", help="recognition verdicts with witnesses")
    classify.add_argument("input", help="graph file ('-' for stdin)")
    classify.set_defaults(handler=handle_classify)

    complete = subparsers.add_parser("complete", help="redundancy labeling and completion graph")
    complete.add_argument("input", help="graph file ('-' for stdin)")
    complete.set_defaults(handler=handle_complete)

    reduce = subparsers.add_parser("reduce", help="graph/hypergraph constructions")
    reduce.add_argument("construction", choices=REDUCTIONS)
    reduce.add_argument("input", help="graph file for *-nbhd, hypergraph file otherwise")
    reduce.add_argument("--allow-empty-edge", action="store_true", help="accept empty hyperedges")
    reduce.set_defaults(handler=handle_reduce)

    enum = subparsers.add_parser("enum", help="stream minimal sets")
    enum.add_argument("target", choices=TARGETS)
    enum.add_argument("input", help="hypergraph file for mts, graph file otherwise")
    enum.add_argument(
        "--sorted", action="store_true", help="buffer and sort (forfeits the delay bound)"
    )
    bound = enum.add_mutually_exclusive_group()
    bound.add_argument("--limit", type=_non_negative, default=None, help="stop after K sets")
    bound.add_argument(
        "--check", action="store_true", help="compare with the oracle, exit 3 on mismatch"
    )
    enum.add_argument("--stats", action="store_true", help="print a final '# stats' line")
    enum.add_argument("--sigma", default=None, help="permutation file ordering the clique (mds)")
    enum.add_argument(
        "--path",
        choices=[p.value for p in DominationPath],
        default=DominationPath.AUTO.value,
        help="force a dispatch path for mds",
    )
    enum.add_argument(
        "--via",
        choices=[r.value for r in TransversalRoute],
        default=TransversalRoute.BERGE.value,
        help="transversal route for mts",
    )
    enum.add_argument(
        "--show-pairs", action="store_true", help="list the pairs dropped by --via cobip"
    )
    enum.add_argument("--allow-empty-edge", action="store_true", help="accept empty hyperedges")
    enum.set_defaults(handler=handle_enum)

    oracle = subparsers.add_parser("oracle", help="brute-force reference family")
    oracle.add_argument("target", choices=TARGETS)
    oracle.add_argument("input", help="hypergraph file for mts, graph file otherwise")
    oracle.add_argument("--allow-empty-edge", action="store_true", help="accept empty hyperedges")
    oracle.set_defaults(handler=handle_oracle)

    generate = subparsers.add_parser("generate", help="seeded random instance")
    generate.add_argument("kind", choices=INSTANCE_KINDS)
    generate.add_argument("--n", type=_non_negative, default=8, help="vertex / ground set size")
    generate.add_argument("--p", type=float, default=0.5, help="edge probability")
    generate.add_argument("--clique", type=_non_negative, default=None, help="clique size (split)")
    generate.add_argument("--edges", type=_non_negative, default=6, help="hyperedge count")
    generate.add_argument("--seed", type=int, default=0)
    generate.set_defaults(handler=handle_generate)

    return parser


# =============================================================================
# Entry Points
# =============================================================================

def _format_witness(witness: Any) -> str:
    if isinstance(witness, BaseModel):
        return witness.model_dump_json()
    if isinstance(witness, (list, tuple)) and all(isinstance(v, int) for v in witness):
        return _ids(witness)
    return str(witness)


def run(
    argv: list[str] | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    """Run one command and return its exit status (0, 1, 2 or 3)."""
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PRECONDITION

    configure_logging("DEBUG" if args.verbose else get_settings().LOG_LEVEL, err)
    args.err = err
    try:
        return args.handler(args, out)
    except DomenumError as exc:
        logger.debug("%s: %s", type(exc).__name__, exc.detail)
        err.write(f"# error: {exc.detail}\n")
        if exc.witness is not None:
            err.write(f"# witness: {_format_witness(exc.witness)}\n")
        return exc.exit_code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
