"""Braid words: parsing, closure component count, mirror/reverse, connected sum.

Text grammar: ``B<n>:`` followed by whitespace-separated letters ``s<i>`` or
``s<i>^-1`` with ``1 <= i < n``, e.g. ``B3: s1 s2^-1 s1 s2^-1``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import BraidSyntaxError, ComponentError, GeneratorIndexError

__all__ = [
    "Braid",
    "parse_braid",
    "format_braid",
    "closure_components",
    "mirror",
    "reverse",
    "minus",
    "connected_sum",
    "stabilize",
]

_HEADER_RE = re.compile(r"^\s*B(\d+)\s*:(.*)$", re.DOTALL)
_LETTER_RE = re.compile(r"^s(\d+)(\^-1)?$")

Letter = tuple[int, int]


@dataclass(frozen=True)
class Braid:
    """A braid word on ``strands`` strands.

    ``word`` is a tuple of ``(index, sign)`` pairs, ``sign`` in ``{+1, -1}``.
    """

    strands: int
    word: tuple[Letter, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise GeneratorIndexError(f"strand count must be a positive integer, got {self.strands!r}")
        word = tuple((int(i), int(s)) for i, s in self.word)
        object.__setattr__(self, "word", word)
        for i, s in word:
            if s not in (1, -1):
                raise BraidSyntaxError(f"generator sign must be +1 or -1, got {s}")
            if not 1 <= i < self.strands:
                raise GeneratorIndexError(f"generator s{i} is out of range for {self.strands} strands")

    def __len__(self):
        return len(self.word)

    def __str__(self):
        return format_braid(self)


def parse_braid(text: str) -> Braid:
    m = _HEADER_RE.match(text)
    if m is None:
        raise BraidSyntaxError(f"braid must start with 'B<n>:', got {text!r}")
    strands = int(m.group(1))
    if strands < 1:
        raise GeneratorIndexError("a braid needs at least one strand")
    word = []
    for token in m.group(2).split():
        lm = _LETTER_RE.match(token)
        if lm is None:
            raise BraidSyntaxError(f"malformed braid letter {token!r}")
        index = int(lm.group(1))
        if not 1 <= index < strands:
            raise GeneratorIndexError(f"generator s{index} is out of range for {strands} strands")
        word.append((index, -1 if lm.group(2) else 1))
    return Braid(strands, tuple(word))


def format_braid(b: Braid) -> str:
    letters = [f"s{i}" if s > 0 else f"s{i}^-1" for i, s in b.word]
    return " ".join([f"B{b.strands}:"] + letters)


def closure_permutation(b: Braid) -> list[int]:
    perm = list(range(b.strands))
    for i, _ in b.word:
        perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return perm


def closure_components(b: Braid) -> int:
    """Number of components of the closure (cycles of the strand permutation)."""
    perm = closure_permutation(b)
    seen = [False] * b.strands
    cycles = 0
    for start in range(b.strands):
        if seen[start]:
            continue
        cycles += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
    return cycles


def require_knot(b: Braid) -> None:
    n = closure_components(b)
    if n != 1:
        raise ComponentError(f"closure of {format_braid(b)} is a {n}-component link, not a knot")


def mirror(b: Braid) -> Braid:
    return Braid(b.strands, tuple((i, -s) for i, s in b.word))


def reverse(b: Braid) -> Braid:
    return Braid(b.strands, b.word[::-1])


def minus(b: Braid) -> Braid:
    """The reversed mirror image, used as ``-K`` so that ``K # -K`` is slice."""
    return mirror(reverse(b))


def connected_sum(a: Braid, b: Braid) -> Braid:
    require_knot(a)
    require_knot(b)
    offset = a.strands - 1
    return Braid(a.strands + b.strands - 1,
                 a.word + tuple((i + offset, s) for i, s in b.word))


def stabilize(b: Braid, sign: int = 1) -> Braid:
    """Positive (or negative) Markov stabilization: add a strand and ``s_n^sign``."""
    return Braid(b.strands + 1, b.word + ((b.strands, sign),))
