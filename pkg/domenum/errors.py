"""Error hierarchy for domenum.

Every error carries a human-readable ``detail``, the process exit code the
CLI reports for it, and an optional ``witness`` (vertex ids or a model)
explaining why a precondition failed.
"""

from typing import Any

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_PRECONDITION = 2
EXIT_CHECK_MISMATCH = 3


class DomenumError(Exception):
    """Base class for all domenum errors."""

    exit_code: int = EXIT_PRECONDITION

    def __init__(self, detail: str, witness: Any = None) -> None:
        super().__init__(detail)
        self.detail = detail
        self.witness = witness


class ParseError(DomenumError):
    """Malformed input file."""

    exit_code = EXIT_PARSE

    def __init__(self, detail: str, line: int | None = None) -> None:
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + detail)
        self.line = line


class InvalidVertexError(DomenumError):
    """Vertex id outside 0..n-1."""


class InvalidEdgeError(DomenumError):
    """Self-loop or otherwise unusable edge."""


class InvalidPartitionError(DomenumError):
    """Clique/independent partition that does not certify a split graph."""


class DegenerateInputError(DomenumError):
    """Input too degenerate for the requested construction."""


class NoTransversalError(DomenumError):
    """Hypergraph with an empty hyperedge has no transversal."""


class NoTotalDominatingSetError(DomenumError):
    """Graph with an isolated vertex has no total dominating set."""


class NoConnectedDominatingSetError(DomenumError):
    """Disconnected graph has no connected dominating set."""


class PreconditionError(DomenumError):
    """Input outside the class an algorithm is defined for."""


class OracleCapExceededError(DomenumError):
    """Brute-force oracle refused an input above the configured cap."""


class ContractViolationError(DomenumError):
    """An upstream stage produced output violating its contract."""


class CheckMismatchError(DomenumError):
    """Algorithm and oracle families differ."""

    exit_code = EXIT_CHECK_MISMATCH
