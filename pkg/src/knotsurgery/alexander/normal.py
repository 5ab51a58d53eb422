from __future__ import annotations

from dataclasses import dataclass

from ..errors import InternalConsistencyError
from ..laurent import LaurentPoly, evaluate, is_symmetric


@dataclass(frozen=True)
class AlexanderPolynomial:
    """A symmetric Laurent polynomial with value 1 at ``t = 1``."""

    poly: LaurentPoly

    def __post_init__(self):
        if not isinstance(self.poly, LaurentPoly):
            raise TypeError("poly must be a LaurentPoly")
        if not is_symmetric(self.poly) or evaluate(self.poly, 1) != 1:
            raise ValueError(f"{self.poly} is not a normalized Alexander polynomial")

    @classmethod
    def parse(cls, text: str) -> AlexanderPolynomial:
        return cls(LaurentPoly.parse(text))

    def __mul__(self, other: AlexanderPolynomial) -> AlexanderPolynomial:
        return AlexanderPolynomial(self.poly * other.poly)

    def __str__(self):
        return str(self.poly)


def normalize(p: LaurentPoly) -> AlexanderPolynomial:
    """Multiply ``p`` by the unit ``±t^k`` that makes it symmetric with value 1 at 1.

    Raises ``InternalConsistencyError`` if no such unit exists, which for a
    knot means an upstream computation went wrong.
    """
    if p.is_zero():
        raise InternalConsistencyError("Alexander polynomial of a knot cannot vanish")
    lo, hi = p.min_exp, p.max_exp
    if (lo + hi) % 2:
        raise InternalConsistencyError(f"{p} has odd span and cannot be symmetrized")
    q = p.shift(-(lo + hi) // 2)
    value = evaluate(q, 1)
    if value not in (1, -1):
        raise InternalConsistencyError(f"{p} evaluates to {value} at t = 1, expected a unit")
    if value == -1:
        q = -q
    if not is_symmetric(q):
        raise InternalConsistencyError(f"{p} is not symmetric up to units")
    return AlexanderPolynomial(q)
