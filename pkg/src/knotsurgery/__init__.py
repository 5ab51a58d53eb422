"""Alexander polynomials of braid closures and Fintushel-Stern knot surgery on SW data."""
from .alexander import AlexanderPolynomial, alexander, alexander_oracle, fox_milnor_check
from .braid import Braid, closure_components, connected_sum, minus, mirror, parse_braid, reverse
from .laurent import LaurentPoly
from .swcalc import (
    Concordance,
    SWInvariant,
    TorusClass,
    concordance_surgery,
    knot_surgery,
    surgery_composition_check,
    sw_equal,
    twisted_surgery_changes,
)

__version__ = "0.1.0"
