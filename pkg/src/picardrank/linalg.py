"""Exact linear algebra over Q: fraction-free rank and small solves."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list  # list[list[Fraction]]


def _to_integer_rows(rows: Sequence[Sequence]) -> list:
    # clear denominators row by row; rank is unchanged by nonzero row scaling
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _gcd(x: int, y: int) -> int:
    while y:
        x, y = y, x % y
    return abs(x)


def bareiss_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination; exact for rational input."""
    m = _to_integer_rows(rows)
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                m[r][c] = (p * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def solve_2x2(m00, m01, m10, m11, b0, b1) -> tuple:
    """Solve [[m00, m01], [m10, m11]] x = (b0, b1); raises on a singular matrix."""
    det = Fraction(m00) * m11 - Fraction(m01) * m10
    if not det:
        raise ZeroDivisionError("singular 2x2 system")
    return ((Fraction(b0) * m11 - Fraction(m01) * b1) / det, (Fraction(m00) * b1 - Fraction(m10) * b0) / det)


def in_span(target: Sequence, u: Sequence, v: Sequence) -> bool:
    """Whether the vector ``target`` lies in the span of ``u`` and ``v``."""
    return bareiss_rank([u, v, target]) == bareiss_rank([u, v])


def det(rows: Sequence[Sequence]) -> Fraction:
    """Determinant by Gaussian elimination over Fraction."""
    m = [[Fraction(x) for x in row] for row in rows]
    size = len(m)
    sign = 1
    result = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        p = m[col][col]
        result *= p
        for r in range(col + 1, size):
            f = m[r][col] / p
            if f:
                for c in range(col, size):
                    m[r][c] -= f * m[col][c]
    return sign * result


def solve_combination(basis: Sequence[Sequence], target: Sequence):
    """Coefficients c with sum c_k basis[k] == target, or None.

    Free coefficients (dependent basis rows) are set to zero.
    """
    k = len(basis)
    width = len(target)
    # augmented system: unknowns are the k coefficients, one equation per entry
    rows = [[Fraction(basis[j][e]) for j in range(k)] + [Fraction(target[e])] for e in range(width)]
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, width) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][col]
        rows[r] = [x / p for x in rows[r]]
        for i in range(width):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
    if any(rows[i][k] for i in range(r, width)):
        return None
    coeffs = [Fraction(0)] * k
    for i, col in enumerate(pivots):
        coeffs[col] = rows[i][k]
    return tuple(coeffs)
