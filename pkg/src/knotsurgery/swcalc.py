"""Seiberg-Witten data as finitely supported functions on Z^b, and knot surgery on it.

An invariant ``sum_j SW(a_j) exp(a_j)`` is stored as a map from class vectors
to nonzero integer coefficients.  Knot surgery along a torus ``T`` multiplies
by ``Delta_K(exp(2T))``, i.e. every term ``a_k t^k`` of Delta contributes the
input translated by ``2k T`` and scaled by ``a_k``.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .alexander import AlexanderPolynomial, alexander
from .braid import Braid, connected_sum, minus, require_knot
from .errors import DimensionMismatchError, InputError
from .laurent import LaurentPoly

__all__ = [
    "SWInvariant",
    "TorusClass",
    "Concordance",
    "SWSymmetryWarning",
    "knot_surgery",
    "surgery_composition_check",
    "concordance_surgery",
    "sw_equal",
    "twisted_surgery_changes",
]

Vector = tuple[int, ...]


class SWSymmetryWarning(UserWarning):
    """Support of the SW data is not symmetric under negation."""


def _vec(v: Iterable[int]) -> Vector:
    out = tuple(v)
    if not all(isinstance(x, int) for x in out):
        raise TypeError("lattice vectors must have int entries")
    return out


@dataclass(frozen=True)
class SWInvariant:
    rank: int
    terms: Mapping[Vector, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank < 0:
            raise InputError("rank must be nonnegative")
        acc: dict[Vector, int] = {}
        for cls, coeff in dict(self.terms).items():
            v = _vec(cls)
            if len(v) != self.rank:
                raise DimensionMismatchError(
                    f"class {v} has length {len(v)}, expected rank {self.rank}")
            acc[v] = acc.get(v, 0) + coeff
        object.__setattr__(self, "terms", {v: c for v, c in sorted(acc.items()) if c != 0})

    @classmethod
    def zero(cls, rank: int) -> SWInvariant:
        return cls(rank, {})

    @classmethod
    def point(cls, rank: int, coeff: int = 1) -> SWInvariant:
        """A single basic class at the origin."""
        return cls(rank, {(0,) * rank: coeff})

    @property
    def support(self) -> list[Vector]:
        return list(self.terms)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SWInvariant):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, tuple(self.terms.items())))

    def __add__(self, other: SWInvariant) -> SWInvariant:
        _check_rank(self, other)
        acc = dict(self.terms)
        for v, c in other.terms.items():
            acc[v] = acc.get(v, 0) + c
        return SWInvariant(self.rank, acc)

    def scale(self, k: int) -> SWInvariant:
        return SWInvariant(self.rank, {v: k * c for v, c in self.terms.items()})

    def translate(self, shift: Vector) -> SWInvariant:
        if len(shift) != self.rank:
            raise DimensionMismatchError(f"shift {shift} does not have rank {self.rank}")
        return SWInvariant(self.rank, {
            tuple(a + b for a, b in zip(v, shift)): c for v, c in self.terms.items()})

    def total(self) -> int:
        return sum(self.terms.values())

    def symmetry_defects(self) -> list[Vector]:
        """Classes ``a`` whose negation is missing or carries a different |coefficient|."""
        bad = []
        for v, c in self.terms.items():
            neg = tuple(-x for x in v)
            if abs(self.terms.get(neg, 0)) != abs(c):
                bad.append(v)
        return bad

    def validate(self) -> bool:
        """Warn (never raise) if the support is not symmetric under negation."""
        bad = self.symmetry_defects()
        if bad:
            warnings.warn(
                f"SW support is not symmetric under negation at {len(bad)} class(es), "
                f"e.g. {bad[0]}", SWSymmetryWarning, stacklevel=2)
        return not bad


@dataclass(frozen=True)
class TorusClass:
    """Homology class [T] of the surgery torus, with optional intersection form.

    When the form ``Q`` is given it must be symmetric and ``T.Q.T == 0``.
    """

    vector: Vector
    intersection_form: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        vec = _vec(self.vector)
        object.__setattr__(self, "vector", vec)
        if self.intersection_form is None:
            return
        q = tuple(_vec(row) for row in self.intersection_form)
        object.__setattr__(self, "intersection_form", q)
        b = len(vec)
        if len(q) != b or any(len(row) != b for row in q):
            raise DimensionMismatchError(f"intersection form must be {b}x{b}")
        if any(q[i][j] != q[j][i] for i in range(b) for j in range(b)):
            raise InputError("intersection form must be symmetric")
        square = sum(vec[i] * q[i][j] * vec[j] for i in range(b) for j in range(b))
        if square != 0:
            raise InputError(f"torus class has self-intersection {square}, expected 0")

    @classmethod
    def basis(cls, rank: int, index: int = 0) -> TorusClass:
        return cls(tuple(1 if i == index else 0 for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.vector)


class Concordance(enum.Enum):
    PRODUCT = "product"
    SLICE_SUM = "slicesum"


def _check_rank(a: SWInvariant, b: SWInvariant) -> None:
    if a.rank != b.rank:
        raise DimensionMismatchError(f"rank mismatch: {a.rank} vs {b.rank}")


def _check_torus(sw: SWInvariant, torus: TorusClass) -> None:
    if torus.rank != sw.rank:
        raise DimensionMismatchError(
            f"torus class has dimension {torus.rank}, SW data has rank {sw.rank}")


def _poly(delta: AlexanderPolynomial | LaurentPoly) -> LaurentPoly:
    return delta.poly if isinstance(delta, AlexanderPolynomial) else delta


def knot_surgery(sw: SWInvariant, torus: TorusClass,
                 delta: AlexanderPolynomial | LaurentPoly) -> SWInvariant:
    """Multiply ``sw`` by ``delta(exp(2[T]))`` in the group ring of Z^b."""
    _check_torus(sw, torus)
    acc: dict[Vector, int] = {}
    for k, a in _poly(delta).items():
        shift = tuple(2 * k * x for x in torus.vector)
        for v, c in sw.terms.items():
            w = tuple(p + q for p, q in zip(v, shift))
            acc[w] = acc.get(w, 0) + a * c
    return SWInvariant(sw.rank, acc)


def surgery_composition_check(sw: SWInvariant, torus: TorusClass,
                              d1: AlexanderPolynomial | LaurentPoly,
                              d2: AlexanderPolynomial | LaurentPoly) -> bool:
    """Surgery by d1 then d2 agrees with a single surgery by d1*d2."""
    twice = knot_surgery(knot_surgery(sw, torus, d1), torus, d2)
    once = knot_surgery(sw, torus, _poly(d1) * _poly(d2))
    return sw_equal(twice, once)


def concordance_surgery(sw: SWInvariant, torus: TorusClass, k: Braid,
                        c: Concordance) -> SWInvariant:
    """Surgery along the self-concordance ``c`` of ``K # -K``.

    The product concordance acts as ordinary knot surgery by ``K # -K``; the
    slice-disc sum concordance gives back the original manifold, so the
    invariant is unchanged.
    """
    require_knot(k)
    _check_torus(sw, torus)
    if c is Concordance.SLICE_SUM:
        return sw
    if c is Concordance.PRODUCT:
        return knot_surgery(sw, torus, alexander(connected_sum(k, minus(k))))
    raise ValueError(f"unknown concordance kind {c!r}")


def sw_equal(a: SWInvariant, b: SWInvariant) -> bool:
    _check_rank(a, b)
    return a.terms == b.terms


def twisted_surgery_changes(sw_cover: SWInvariant, torus: TorusClass,
                            delta: AlexanderPolynomial | LaurentPoly) -> bool:
    """True iff the lifted knot surgery changes the double cover's SW data.

    A True answer certifies that the Klein-bottle surgery changed the smooth
    structure downstairs; False is no conclusion.
    """
    return not sw_equal(knot_surgery(sw_cover, torus, delta), sw_cover)
