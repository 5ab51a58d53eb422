"""Alexander polynomial from the reduced Burau representation.

For a knot braid ``b`` on ``n`` strands,

    Delta(t) ≐ det(B(b) - I) * (t - 1) / (t^n - 1)

where ``B`` is the (n-1)-dimensional reduced Burau representation.  The
division is exact for knots; a nonzero remainder is reported as an internal
consistency failure.
"""
from __future__ import annotations

from ..braid import Braid, require_knot
from ..errors import InexactDivisionError, InternalConsistencyError
from ..laurent import LaurentPoly, exact_div
from .normal import AlexanderPolynomial, normalize

Matrix = list[list[LaurentPoly]]

_ZERO = LaurentPoly()
_ONE = LaurentPoly.constant(1)
_T = LaurentPoly.monomial(1)


def identity(n: int) -> Matrix:
    return [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]


def generator_matrix(n: int, i: int, sign: int = 1) -> Matrix:
    """Reduced Burau matrix of ``s_i^sign`` in B_n (size n-1, ``i`` 1-based).

    ``s_i`` differs from the identity only in column ``i``:
    ``t`` above the diagonal, ``-t`` on it, ``1`` below.  Its inverse has
    ``1``, ``-t^-1``, ``t^-1`` in the same places.
    """
    m = identity(n - 1)
    c = i - 1
    if sign > 0:
        above, diag, below = _T, -_T, _ONE
    else:
        above, diag, below = _ONE, -LaurentPoly.monomial(-1), LaurentPoly.monomial(-1)
    m[c][c] = diag
    if c - 1 >= 0:
        m[c - 1][c] = above
    if c + 1 < n - 1:
        m[c + 1][c] = below
    return m


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, p = len(a), len(b), len(b[0]) if b else 0
    out = []
    for r in range(n):
        row = []
        for c in range(p):
            acc = _ZERO
            for j in range(k):
                if a[r][j] and b[j][c]:
                    acc = acc + a[r][j] * b[j][c]
            row.append(acc)
        out.append(row)
    return out


def burau_matrix(b: Braid) -> Matrix:
    m = identity(b.strands - 1)
    for i, s in b.word:
        m = matmul(m, generator_matrix(b.strands, i, s))
    return m


def bareiss_det(m: Matrix) -> LaurentPoly:
    """Fraction-free determinant over Z[t, t^-1] with row pivoting."""
    n = len(m)
    if n == 0:
        return _ONE
    a = [list(row) for row in m]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if swap is None:
                return _ZERO
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for r in range(k + 1, n):
            for c in range(k + 1, n):
                num = a[r][c] * pivot - a[r][k] * a[k][c]
                a[r][c] = exact_div(num, prev)
            a[r][k] = _ZERO
        prev = pivot
    return a[n - 1][n - 1] if sign > 0 else -a[n - 1][n - 1]


def burau_det(b: Braid) -> LaurentPoly:
    """``det(B(b) - I)`` before the unit correction."""
    m = burau_matrix(b)
    for i in range(len(m)):
        m[i][i] = m[i][i] - _ONE
    return bareiss_det(m)


def alexander(b: Braid) -> AlexanderPolynomial:
    require_knot(b)
    if b.strands == 1:
        return AlexanderPolynomial(_ONE)
    try:
        raw = exact_div(burau_det(b) * (_T - 1), LaurentPoly.monomial(b.strands) - 1)
    except InexactDivisionError as exc:
        raise InternalConsistencyError(f"Burau pipeline failed for {b}: {exc}") from exc
    return normalize(raw)
