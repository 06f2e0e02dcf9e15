"""Exception types shared across the package."""


class Error(Exception):
    """Base class for all ripplegnn errors."""


class OutOfRange(Error):
    """Vertex id outside [0, n)."""


class DuplicateEdge(Error):
    """Edge insertion for a pair that is already present."""


class MissingEdge(Error):
    """Edge removal or lookup for a pair that is not present."""


class ParseError(Error):
    """Malformed text input; message carries the line number."""


class DimMismatch(Error):
    """Vector/matrix shapes incompatible with the requested operation."""


class EmptyVector(Error):
    """Operation requires at least one element."""


class FormatError(Error):
    """Malformed binary file (bad magic, version, or shape)."""


class InvalidBatch(Error):
    """An update batch failed validation before any state was mutated."""

    def __init__(self, index, reason):
        super().__init__(f"record {index}: {reason}")
        self.index = index
        self.reason = reason


class InsufficientEdges(Error):
    """Stream generation asked for more edges than the graph has."""


class CoverageError(Error):
    """Partition map does not assign every vertex exactly once."""


class ConfigError(Error):
    """Bad cluster configuration."""


class PeerDisconnected(Error):
    """A remote worker closed its connection mid-run."""
