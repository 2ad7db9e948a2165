"""Exact phase-one simplex over the rationals.

Decides whether ``A x = b, x >= 0`` has a solution and returns one.  All
arithmetic is in :class:`fractions.Fraction`; Bland's smallest-index rule
prevents cycling on degenerate problems.
"""

from __future__ import annotations

from collections.abc import Sequence
from fractions import Fraction


def _pivot(tab: list[list[Fraction]], obj: list[Fraction], r: int, c: int) -> None:
    row = tab[r]
    p = row[c]
    if p != 1:
        row[:] = [v / p for v in row]
    for i, other in enumerate(tab):
        if i != r and other[c] != 0:
            f = other[c]
            other[:] = [u - f * v for u, v in zip(other, row)]
    if obj[c] != 0:
        f = obj[c]
        obj[:] = [u - f * v for u, v in zip(obj, row)]


def feasible_point(
    A: Sequence[Sequence[Fraction | int]], b: Sequence[Fraction | int], max_pivots: int = 100_000
) -> list[Fraction] | None:
    """Return a nonnegative rational ``x`` with ``A x = b``, or None if none exists."""
    m = len(A)
    n = len(A[0]) if m else 0
    tab: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        tab.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = list(range(n, n + m))

    # reduced costs of "minimize sum of artificials", last entry = -objective
    obj = [Fraction(0)] * (n + m + 1)
    for row in tab:
        for j in range(n):
            obj[j] -= row[j]
        obj[-1] -= row[-1]

    for _ in range(max_pivots):
        enter = next((j for j in range(n) if obj[j] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for i, row in enumerate(tab):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded direction; cannot happen for a bounded-below phase-one objective
            break
        _pivot(tab, obj, leave, enter)
        basis[leave] = enter
    else:
        raise RuntimeError("simplex pivot limit exceeded")

    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = tab[i][-1]
    return x
