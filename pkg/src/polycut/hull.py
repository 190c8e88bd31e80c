"""Exact facet enumeration for small point sets in general position.

Desk-scale oracle for the cyclic-polytope constructor: every ``d``-subset of
the points is tested as a facet candidate by the sign of integer orientation
determinants, so no floating point is involved.
"""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .errors import InvalidInputError


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise InvalidInputError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def moment_curve_points(d: int, n: int) -> list[tuple[int, ...]]:
    """Points (t, t^2, ..., t^d) for t = 1..n."""
    return [tuple(t**k for k in range(1, d + 1)) for t in range(1, n + 1)]


def exact_hull_facets(points: Sequence[Sequence[int]]) -> set[tuple[int, ...]]:
    """Facets of conv(points) as sorted 1-based index tuples.

    Requires the points to be in general position (no ``d + 1`` on a common
    hyperplane), which holds on the moment curve.
    """
    pts = [tuple(map(int, p)) for p in points]
    if not pts:
        raise InvalidInputError("no points")
    d = len(pts[0])
    n = len(pts)
    if n <= d:
        raise InvalidInputError("need more than d points for a full-dimensional hull")
    facets = set()
    for subset in combinations(range(n), d):
        rows = [(1, *pts[i]) for i in subset]
        signs = set()
        for q in range(n):
            if q in subset:
                continue
            s = bareiss_det(rows + [(1, *pts[q])])
            if s == 0:
                raise InvalidInputError(f"points not in general position at subset {subset}")
            signs.add(s > 0)
            if len(signs) > 1:
                break
        if len(signs) == 1:
            facets.add(tuple(i + 1 for i in subset))
    return facets
