"""Shared exception types."""


class GraphFormatError(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message: str, offset: int = 0):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class IsolatedVertexError(ValueError):
    """Raised when a domination invariant is requested on a graph with an isolated vertex."""


class MalformedSequenceError(ValueError):
    """Vertex sequence with repeats or out-of-range entries."""


class UnsupportedOrderError(ValueError):
    """Design order outside the supported prime-power set."""


class HypergraphError(ValueError):
    """Invalid hypergraph (empty edge, uncovered point, bad format)."""


class ExtractionError(ValueError):
    """Orthogonal-array extraction failed; names the violated structural claim."""

    def __init__(self, claim: str, message: str):
        super().__init__(f"[{claim}] {message}")
        self.claim = claim


class SearchSpecError(ValueError):
    """Inconsistent or out-of-range search specification."""
