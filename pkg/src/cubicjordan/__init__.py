"""Exact computational algebra for a 9-dimensional cubic-form Jordan
algebra with eight coordinatization parameters, the 13-dimensional variety
cut out by its sharp map, related subvarieties, and their graded-ring
invariants."""

from .exactcore import (EquationSet, Poly, PolyMatrix, Ring, SpanResult,
                        directional_derivative, span_compare)
from .coord8 import Hypermatrix
from .jordan import JordanPresentation

__version__ = "0.1.0"

__all__ = [
    "EquationSet", "Poly", "PolyMatrix", "Ring", "SpanResult",
    "directional_derivative", "span_compare", "Hypermatrix",
    "JordanPresentation", "__version__",
]
