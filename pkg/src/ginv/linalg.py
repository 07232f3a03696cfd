"""Exact row reduction over any field whose elements support ``+ - * /``.

Used with :class:`fractions.Fraction` (Toeplitz coefficients) and
:class:`ginv.gaussian.GaussianRational` (matrix entries).  Pivoting takes
the first nonzero entry in each column, so results are deterministic.
"""
from __future__ import annotations

from typing import Sequence, TypeVar

F = TypeVar("F")


def rref(rows: Sequence[Sequence[F]], zero: F, one: F) -> tuple[list[list[F]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    n_rows, n_cols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for col in range(n_cols):
        if r == n_rows:
            break
        piv = next((i for i in range(r, n_rows) if m[i][col] != zero), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        if p != one:
            m[r] = [v / p for v in m[r]]
        for i in range(n_rows):
            if i != r and m[i][col] != zero:
                f = m[i][col]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m, pivots


def rank(rows: Sequence[Sequence[F]], zero: F, one: F) -> int:
    return len(rref(rows, zero, one)[1])


def solve(a: Sequence[Sequence[F]], b: Sequence[F], zero: F, one: F) -> list[F] | None:
    """One solution of ``a x = b`` (free variables set to zero), or None."""
    n_cols = len(a[0]) if a else 0
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    red, pivots = rref(aug, zero, one)
    if n_cols in pivots:
        return None
    x = [zero] * n_cols
    for row, col in zip(red, pivots):
        x[col] = row[n_cols]
    return x


def inverse(a: Sequence[Sequence[F]], zero: F, one: F) -> list[list[F]] | None:
    n = len(a)
    aug = [list(row) + [one if i == j else zero for j in range(n)]
           for i, row in enumerate(a)]
    red, pivots = rref(aug, zero, one)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in red]
