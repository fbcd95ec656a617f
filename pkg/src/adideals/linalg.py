"""Exact linear algebra over the integers and rationals.

Everything here works on plain nested lists (or anything indexable the same
way) holding ``int`` or :class:`fractions.Fraction` entries, so results never
depend on floating-point tolerances.
"""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Number = int | Fraction


def _integer_rows(rows: Sequence[Sequence[Number]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def rank(rows: Sequence[Sequence[Number]]) -> int:
    """Rank of a matrix by fraction-free (Bareiss) elimination.

    Rational rows are first cleared of denominators, which does not change
    the rank.  All intermediate values stay integral.
    """
    m = _integer_rows(rows)
    if not m or not m[0]:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    prev = 1
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        for i in range(r + 1, n_rows):
            f = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, n_cols):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
        if r == n_rows:
            break
    return r


def solve(a: Sequence[Sequence[Number]], b: Sequence[Number]) -> list[Fraction] | None:
    """Solve ``a @ x = b`` over the rationals.

    Returns one solution (free variables set to zero) or ``None`` when the
    system is inconsistent.
    """
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    m = [[Fraction(x) for x in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    if any(m[i][n_cols] != 0 for i in range(r, n_rows)):
        return None
    x = [Fraction(0)] * n_cols
    for i, c in enumerate(pivots):
        x[c] = m[i][n_cols]
    return x
