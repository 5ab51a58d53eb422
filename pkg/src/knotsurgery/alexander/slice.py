"""Fox-Milnor condition: does Delta factor as f(t) f(t^-1) up to units?"""
from __future__ import annotations

import math
from dataclasses import dataclass

from ..laurent import LaurentPoly
from .normal import AlexanderPolynomial


@dataclass(frozen=True)
class FoxMilnorResult:
    """Outcome of the bounded factor search.

    ``holds`` is the boolean answer.  ``factor`` is a witness ``f`` when one
    was found.  ``exhaustive`` is True when the degree bound covered every
    possible factor, in which case a negative answer is conclusive (Delta
    fails Fox-Milnor, so the knot is not slice); otherwise it is
    inconclusive.
    """

    holds: bool
    factor: LaurentPoly | None
    exhaustive: bool

    def __bool__(self):
        return self.holds

    @property
    def conclusive(self) -> bool:
        return self.holds or self.exhaustive


def forced_degree(delta: AlexanderPolynomial | LaurentPoly) -> int:
    """Degree any Fox-Milnor factor must have: half the span of Delta."""
    p = delta.poly if isinstance(delta, AlexanderPolynomial) else delta
    return p.span() // 2


def _search(target: LaurentPoly, deg: int) -> LaurentPoly | None:
    """Find integers ``c_0..c_deg`` with ``c_0 > 0``, ``c_deg != 0`` and
    ``sum_i c_i c_{i+k} == target[k]`` for every ``k >= 0``."""
    budget = target.coeff(0)
    if budget <= 0:
        return None
    lead = target.coeff(deg)
    coeffs = [0] * (deg + 1)

    def matches() -> bool:
        return all(
            sum(coeffs[i] * coeffs[i + k] for i in range(deg + 1 - k)) == target.coeff(k)
            for k in range(1, deg + 1)
        )

    def rec(pos: int, remaining: int) -> bool:
        if pos > deg:
            return remaining == 0 and matches()
        lim = math.isqrt(remaining)
        for c in range(-lim, lim + 1):
            if pos == 0 and (c <= 0 or lead % c):
                continue
            if pos == deg and c * (coeffs[0] if deg else c) != lead:
                continue
            coeffs[pos] = c
            if rec(pos + 1, remaining - c * c):
                return True
        coeffs[pos] = 0
        return False

    return LaurentPoly.from_coeffs(coeffs) if rec(0, budget) else None


def fox_milnor_check(delta: AlexanderPolynomial | LaurentPoly,
                     degree_bound: int) -> FoxMilnorResult:
    """Search for ``f`` of degree ``<= degree_bound`` with ``Delta ≐ f(t) f(t^-1)``.

    Since ``f(t) f(t^-1)`` has span ``2 deg f``, only ``deg f`` equal to half
    the span of Delta can work; a bound at or above that is exhaustive.
    """
    if degree_bound < 0:
        raise ValueError("degree_bound must be nonnegative")
    p = delta.poly if isinstance(delta, AlexanderPolynomial) else delta
    if p.is_zero():
        return FoxMilnorResult(True, LaurentPoly(), True)
    if p.span() % 2:
        return FoxMilnorResult(False, None, True)
    deg = p.span() // 2
    exhaustive = degree_bound >= deg
    if not exhaustive:
        return FoxMilnorResult(False, None, False)
    centred = p.shift(-(p.min_exp + p.max_exp) // 2)
    for target in (centred, -centred):
        f = _search(target, deg)
        if f is not None:
            return FoxMilnorResult(True, f, True)
    return FoxMilnorResult(False, None, True)
