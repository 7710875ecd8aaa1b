"""Exception types shared across the package."""


class GraphError(Exception):
    """Base class for graph and simulation data errors."""


class EdgeListParseError(GraphError):
    """A line of an edge-list stream could not be parsed."""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class EmptyInputError(GraphError):
    """An edge-list stream produced a graph with no edges."""


class UnknownNodeError(GraphError):
    """A node label or index is not present in the graph."""


class NotAnEdgeError(GraphError):
    """An operation that requires a connected node pair got a non-edge."""


class InactiveNodeError(GraphError):
    """An activation step was requested for a node that is not active."""


class MissingDatasetError(GraphError):
    """One or more registered datasets are absent from a data directory."""

    def __init__(self, names: list[str]):
        super().__init__("missing datasets: " + ", ".join(names))
        self.names = list(names)


class MissingSeedError(GraphError):
    """Datasets were requested without a configured seed node."""

    def __init__(self, names: list[str]):
        super().__init__(
            "no seed node configured for datasets: " + ", ".join(names)
        )
        self.names = list(names)


class ConfigError(Exception):
    """Invalid experiment configuration (a usage error, not a data error)."""
