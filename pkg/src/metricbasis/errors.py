"""Exception hierarchy shared by every module."""


class MetricBasisError(Exception):
    """Base class for all errors raised by this package."""


class InvalidGraph(MetricBasisError, ValueError):
    """Malformed graph input (out-of-range endpoint, self-loop, bad file)."""


class DisconnectedGraph(MetricBasisError, ValueError):
    """A distance-dependent operation was handed a disconnected graph."""


class TrivialGraph(MetricBasisError, ValueError):
    """The single-vertex graph has no agreed-upon metric dimension."""


class GraphTooLarge(MetricBasisError, ValueError):
    """Exact search is limited to 64 vertices (one machine word per vertex set)."""


class EmptyBasisList(MetricBasisError, ValueError):
    pass


class NotABasisMember(MetricBasisError, ValueError):
    pass


class SearchBudgetExceeded(MetricBasisError, RuntimeError):
    """The exact search ran out of nodes or wall-clock time.

    ``lower`` and ``upper`` bracket the metric dimension as far as the
    search got; no partial basis list is ever returned.
    """

    def __init__(self, lower: int, upper: int, nodes: int, seconds: float):
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        self.seconds = seconds
        super().__init__(
            f"search budget exceeded after {nodes} nodes / {seconds:.1f}s; "
            f"dim in [{lower}, {upper}]"
        )


class PropertyViolated(MetricBasisError, AssertionError):
    """A structural property that is proved to hold was observed to fail."""

    def __init__(self, message: str, witness=None):
        self.witness = witness
        super().__init__(f"{message} (witness: {witness!r})")


class NotAClique(PropertyViolated):
    pass


class BuilderError(MetricBasisError, ValueError):
    """A graph construction received invalid parameters."""


class PartIsPath(BuilderError):
    pass


class PartDisconnected(BuilderError):
    pass


class AnchorIsVoid(BuilderError):
    pass


class ResultDisconnected(BuilderError):
    pass


class NotUnicyclic(BuilderError):
    pass


class MalformedClause(BuilderError):
    pass


class UnknownName(BuilderError, KeyError):
    def __str__(self):
        return Exception.__str__(self)
