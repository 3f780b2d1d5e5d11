"""Exact-arithmetic laboratory for graph polynomials and their mates."""

from .errors import (
    DomainError,
    Graph6ParseError,
    GraphPolyLabError,
    NoSuchEdgeError,
    NotSupportedError,
    ResourceBudgetError,
    StaleOccurrenceError,
    UnsupportedFormatError,
)
from .graphs import LabeledMultigraph
from .polynomial import SparsePolynomial

__all__ = [
    "DomainError",
    "Graph6ParseError",
    "GraphPolyLabError",
    "LabeledMultigraph",
    "NoSuchEdgeError",
    "NotSupportedError",
    "ResourceBudgetError",
    "SparsePolynomial",
    "StaleOccurrenceError",
    "UnsupportedFormatError",
]

__version__ = "0.1.0"
