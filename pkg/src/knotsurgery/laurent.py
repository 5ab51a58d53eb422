"""Integer Laurent polynomials in one variable ``t``.

Values are immutable and always canonical (no zero coefficients stored), so
equality is a plain comparison of term maps.

    >>> p = LaurentPoly.parse("t^1 - 1 + t^-1")
    >>> str(p * p)
    't^2 - 2*t^1 + 3 - 2*t^-1 + t^-2'
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import InexactDivisionError

__all__ = [
    "LaurentPoly",
    "add",
    "mul",
    "exact_div",
    "evaluate",
    "is_symmetric",
]


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for exp, coeff in items:
            if not isinstance(exp, int) or not isinstance(coeff, int):
                raise TypeError("exponents and coefficients must be int")
            acc[exp] = acc.get(exp, 0) + coeff
        self._terms = {e: c for e, c in sorted(acc.items()) if c != 0}
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> LaurentPoly:
        """Coefficients listed from exponent ``low`` upwards."""
        return cls((low + i, c) for i, c in enumerate(coeffs))

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; also accepts ``t``, ``2t^3`` and ``2*t^3``."""
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial text")
        if s == "0":
            return cls()
        if s[0] not in "+-":
            s = "+" + s
        term_re = re.compile(r"([+-])(\d*)(\*?t(?:\^(-?\d+))?)?")
        acc: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = term_re.match(s, pos)
            if m is None or m.end() == pos or (not m.group(2) and not m.group(3)):
                raise ValueError(f"cannot parse Laurent polynomial {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = int(m.group(2)) if m.group(2) else 1
            if m.group(3):
                if m.group(3).startswith("*") and not m.group(2):
                    raise ValueError(f"cannot parse Laurent polynomial {text!r}")
                exp = int(m.group(4)) if m.group(4) is not None else 1
            else:
                exp = 0
            acc[exp] = acc.get(exp, 0) + sign * coeff
            pos = m.end()
        return cls(acc)

    # -- access -----------------------------------------------------------

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(iter(self._terms))

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return next(reversed(self._terms))

    def span(self) -> int:
        return self.max_exp - self.min_exp

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        return LaurentPoly({e + k: c for e, c in self._terms.items()})

    def conjugate(self) -> LaurentPoly:
        """Substitute ``t -> t^-1``."""
        return LaurentPoly({-e: c for e, c in self._terms.items()})

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are only defined for units")
        result = LaurentPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            c = self._terms[exp]
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            elif mag == 1:
                body = f"t^{exp}"
            else:
                body = f"{mag}*t^{exp}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.constant(x)
    return NotImplemented


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * d == p``.

    Raises ``InexactDivisionError`` when ``d`` does not divide ``p`` in
    Z[t, t^-1] and ``ZeroDivisionError`` when ``d`` is zero.
    """
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return LaurentPoly()
    # Shift both to ordinary polynomials with nonzero constant term; the
    # quotient's lowest exponent is then forced to p.min - d.min.
    num = [p.coeff(e) for e in range(p.min_exp, p.max_exp + 1)]
    den = [d.coeff(e) for e in range(d.min_exp, d.max_exp + 1)]
    if len(den) > len(num):
        raise InexactDivisionError(f"({p}) is not divisible by ({d})")
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for i in range(len(quot) - 1, -1, -1):
        top = num[i + len(den) - 1]
        q, r = divmod(top, lead)
        if r:
            raise InexactDivisionError(f"({p}) is not divisible by ({d})")
        quot[i] = q
        if q:
            for j, dc in enumerate(den):
                num[i + j] -= q * dc
    if any(num):
        raise InexactDivisionError(f"({p}) is not divisible by ({d})")
    return LaurentPoly.from_coeffs(quot, low=p.min_exp - d.min_exp)


def evaluate(p: LaurentPoly, x: int | Fraction) -> Fraction:
    """Exact value of ``p`` at a nonzero rational point."""
    if x == 0:
        raise ZeroDivisionError("Laurent polynomials are undefined at t = 0")
    x = Fraction(x)
    return sum((c * x**e for e, c in p.items()), Fraction(0))


def is_symmetric(p: LaurentPoly) -> bool:
    return all(p.coeff(-e) == c for e, c in p.items())
