"""Normalized Alexander polynomials of braid closures.

``alexander`` uses the reduced Burau representation; ``alexander_oracle``
reaches the same answer through Fox calculus on the knot group.
"""
from .burau import alexander, bareiss_det, burau_matrix
from .fox import alexander_oracle
from .normal import AlexanderPolynomial, normalize
from .slice import FoxMilnorResult, forced_degree, fox_milnor_check

__all__ = [
    "AlexanderPolynomial",
    "FoxMilnorResult",
    "alexander",
    "alexander_oracle",
    "bareiss_det",
    "burau_matrix",
    "forced_degree",
    "fox_milnor_check",
    "normalize",
]
