"""Ordered emission of vertex sets with counted-operation delay instrumentation.

Enumerators are generator functions that yield VertexSets and charge their
basic operations (adjacency reads, mark updates, member writes) to a shared
OperationCounter. A VertexSetStream pulls from such a generator lazily, so
stopping at ``limit`` never performs the work of later emissions, and it
records the operations charged between consecutive emissions.
"""

import logging
from collections.abc import Callable, Iterable, Iterator

from domenum.config import get_settings
from domenum.errors import ContractViolationError
from domenum.models import DelayStats, Graph, VertexSet

logger = logging.getLogger(__name__)

Sink = Callable[[VertexSet], None]


class OperationCounter:
    """Running count of basic operations."""

    __slots__ = ("total",)

    def __init__(self) -> None:
        self.total = 0

    def charge(self, amount: int = 1) -> None:
        self.total += amount


class VertexSetStream:
    """Consumes an enumeration and forwards each set to a sink.

    With no ``limit`` the stream stops at ``DOMENUM_DEFAULT_LIMIT`` unless
    ``use_default_limit`` is false, in which case it runs to exhaustion.
    """

    def __init__(
        self,
        counter: OperationCounter | None = None,
        limit: int | None = None,
        check_unique: bool | None = None,
        use_default_limit: bool = True,
    ) -> None:
        settings = get_settings()
        self.counter = counter or OperationCounter()
        if limit is None and use_default_limit:
            limit = settings.DEFAULT_LIMIT
        self.limit = limit
        self.check_unique = (
            settings.CHECK_UNIQUE_EMISSIONS if check_unique is None else check_unique
        )
        self._stats = DelayStats()

    @property
    def stats(self) -> DelayStats:
        return self._stats

    def drain(self, sets: Iterable[VertexSet], sink: Sink | None = None) -> DelayStats:
        """Pull sets until exhausted or the limit is reached.

        The delay of an emission is the number of operations charged since
        the previous emission (or since the stream started); work done after
        the last emission until exhaustion counts as a final gap.
        """
        seen: set[tuple[int, ...]] = set()
        count = 0
        max_delay = 0
        gaps_total = 0
        gaps = 0
        start = self.counter.total
        last = start
        exhausted = False

        iterator: Iterator[VertexSet] = iter(sets)
        try:
            while self.limit is None or count < self.limit:
                try:
                    current = next(iterator)
                except StopIteration:
                    exhausted = True
                    break
                delay = self.counter.total - last
                last = self.counter.total
                max_delay = max(max_delay, delay)
                gaps_total += delay
                gaps += 1
                if self.check_unique:
                    if current.members in seen:
                        raise ContractViolationError(
                            f"set {current.external()} emitted twice",
                            witness=list(current.members),
                        )
                    seen.add(current.members)
                if sink is not None:
                    sink(current)
                count += 1
        finally:
            close = getattr(iterator, "close", None)
            if close is not None:
                close()

        if exhausted:
            tail = self.counter.total - last
            if tail > max_delay:
                max_delay = tail

        self._stats = DelayStats(
            count=count,
            max_delay=max_delay,
            mean_delay=gaps_total / gaps if gaps else 0.0,
            total_operations=self.counter.total - start,
        )
        logger.debug(
            "Stream drained: %d sets, max delay %d ops", count, self._stats.max_delay
        )
        return self._stats

    def collect(self, sets: Iterable[VertexSet]) -> list[VertexSet]:
        """Drain into a list, preserving emission order."""
        out: list[VertexSet] = []
        self.drain(sets, out.append)
        return out


def delay_ratio(stats: DelayStats, g: Graph) -> float:
    """Largest counted delay per unit of input size n + m."""
    return stats.max_delay / max(1, g.n + g.m)
