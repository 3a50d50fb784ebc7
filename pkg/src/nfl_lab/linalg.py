"""Exact Gauss-Jordan elimination over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class AffineSolution:
    """Solution set ``particular + span(nullspace)`` of a consistent system."""

    particular: Vector
    nullspace: tuple[Vector, ...]
    rank: int


@dataclass(frozen=True)
class Inconsistency:
    """Multipliers y with y.A = 0 and y.b = residual != 0.

    Summing the original equations with these weights derives ``0 = residual``.
    """

    multipliers: Vector
    residual: Fraction


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Fraction], ncols: int | None = None,
          track: bool = True) -> AffineSolution | Inconsistency:
    """Solve ``a x = b`` exactly.

    Returns the full affine solution set, or a certificate of inconsistency
    expressed as a combination of the input rows. ``track=False`` skips the
    bookkeeping for that certificate (the multipliers come back empty).
    """
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    # row layout: n coefficients | rhs | m combination weights
    rows = [
        [Fraction(x) for x in a[i]] + [Fraction(b[i])] + ([Fraction(int(i == k)) for k in range(m)] if track else [])
        for i in range(m)
    ]
    pivots: list[int] = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                k = rows[i][c]
                rows[i] = [x - k * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if rows[i][n] != 0:
            return Inconsistency(tuple(rows[i][n + 1:]), rows[i][n])

    particular = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        particular[c] = rows[i][n]
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -rows[i][fcol]
        basis.append(tuple(v))
    return AffineSolution(tuple(particular), tuple(basis), len(pivots))


def gram_schmidt(vectors: Sequence[Vector]) -> list[Vector]:
    """Orthogonal (not normalized) basis of the span, exact."""
    out: list[Vector] = []
    for v in vectors:
        w = list(v)
        for u in out:
            k = dot(w, u) / dot(u, u)
            w = [x - k * y for x, y in zip(w, u)]
        if any(x != 0 for x in w):
            out.append(tuple(w))
    return out
