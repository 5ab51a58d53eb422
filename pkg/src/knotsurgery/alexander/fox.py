"""Independent Alexander polynomial via Fox free differential calculus.

The closure of a braid ``b`` has knot group
``< x_1..x_n | b(x_j) = x_j >`` where ``b`` acts on the free group by the
Artin action.  Fox derivatives of the relators, abelianized by ``x_j -> t``,
give the Alexander matrix; deleting one row and one column leaves a square
minor whose determinant is Delta up to a unit.

Nothing here touches the Burau matrices or the Bareiss determinant, so this
path can cross-check them.
"""
from __future__ import annotations

from ..braid import Braid, require_knot
from ..laurent import LaurentPoly
from .normal import AlexanderPolynomial, normalize

# A free-group word is a tuple of (generator, ±1), generators 0-based.
Word = tuple[tuple[int, int], ...]


def _reduce(word) -> Word:
    out: list[tuple[int, int]] = []
    for g, e in word:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def _inv(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def artin_images(b: Braid) -> list[Word]:
    """Images of the generators ``x_1..x_n`` under the braid's Artin action."""
    images: list[Word] = [((j, 1),) for j in range(b.strands)]
    for i, s in b.word:
        a, c = images[i - 1], images[i]
        if s > 0:
            # (a, c) -> (a c a^-1, a)
            images[i - 1] = _reduce(a + c + _inv(a))
            images[i] = a
        else:
            # (a, c) -> (c, c^-1 a c)
            images[i - 1] = c
            images[i] = _reduce(_inv(c) + a + c)
    return images


def fox_derivative(word: Word, gen: int) -> LaurentPoly:
    """d(word)/d(x_gen), pushed to Z[t, t^-1] by sending every generator to t."""
    terms: dict[int, int] = {}
    prefix = 0
    for g, e in word:
        if e > 0:
            if g == gen:
                terms[prefix] = terms.get(prefix, 0) + 1
            prefix += 1
        else:
            prefix -= 1
            if g == gen:
                terms[prefix] = terms.get(prefix, 0) - 1
    return LaurentPoly(terms)


def alexander_matrix(b: Braid) -> list[list[LaurentPoly]]:
    """Rows are relators ``b(x_j) x_j^-1``; columns are generators."""
    n = b.strands
    rows = []
    for j, image in enumerate(artin_images(b)):
        relator = _reduce(image + ((j, -1),))
        rows.append([fox_derivative(relator, k) for k in range(n)])
    return rows


def cofactor_det(m: list[list[LaurentPoly]]) -> LaurentPoly:
    """Determinant by Laplace expansion along the first row."""
    n = len(m)
    if n == 0:
        return LaurentPoly.constant(1)
    if n == 1:
        return m[0][0]
    total = LaurentPoly()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def alexander_minor(b: Braid, row: int = -1, col: int = -1) -> LaurentPoly:
    """Unnormalized determinant of the Alexander matrix with one row and column deleted."""
    m = alexander_matrix(b)
    n = len(m)
    row %= n
    col %= n
    minor = [r[:col] + r[col + 1:] for i, r in enumerate(m) if i != row]
    return cofactor_det(minor)


def alexander_oracle(b: Braid) -> AlexanderPolynomial:
    require_knot(b)
    return normalize(alexander_minor(b))
