"""Exception taxonomy shared by all graphpolylab modules."""


class GraphPolyLabError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(GraphPolyLabError, ValueError):
    """Invalid argument: vertex out of range, contracting a loop, bad root, ..."""


class NoSuchEdgeError(DomainError):
    """An edge with multiplicity >= 1 was required but is absent."""


class Graph6ParseError(GraphPolyLabError, ValueError):
    """Malformed graph6/sparse6 input. Carries the byte offset of the defect."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class UnsupportedFormatError(GraphPolyLabError, ValueError):
    """The requested encoding cannot represent this graph (loops/parallel edges)."""


class StaleOccurrenceError(GraphPolyLabError, ValueError):
    """A pendant occurrence failed revalidation against its host graph."""


class ResourceBudgetError(GraphPolyLabError, RuntimeError):
    """A configured enumeration/expansion budget was exceeded."""


class NotSupportedError(GraphPolyLabError, ValueError):
    """The requested operation has no implementation for these arguments."""
