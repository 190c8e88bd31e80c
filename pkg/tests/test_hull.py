import random
from fractions import Fraction

import numpy as np
import pytest

from polycut.errors import InvalidInputError
from polycut.hull import bareiss_det, exact_hull_facets, moment_curve_points


def fraction_det(rows):
    a = [[Fraction(x) for x in r] for r in rows]
    n, det = len(a), Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if a[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            for j in range(k, n):
                a[i][j] -= f * a[k][j]
    return det


@pytest.mark.parametrize("seed", range(30))
def test_bareiss_matches_fraction_elimination(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 6)
    m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
    assert bareiss_det(m) == fraction_det(m)


def test_bareiss_large_moment_matrix():
    rows = [(1, *p) for p in moment_curve_points(4, 5)]
    # Vandermonde in t = 1..5: product of differences
    expected = 1
    for i in range(1, 6):
        for j in range(i + 1, 6):
            expected *= j - i
    assert bareiss_det(rows) == expected
    assert abs(np.linalg.det(np.array(rows, dtype=float)) - expected) < 1e-6


def test_square_tetrahedron_hull():
    pts = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
    assert exact_hull_facets(pts) == {(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 5)}


def test_degenerate_points_rejected():
    with pytest.raises(InvalidInputError):
        exact_hull_facets([(0, 0), (1, 0), (2, 0), (0, 1)])
    with pytest.raises(InvalidInputError):
        exact_hull_facets([(0, 0), (1, 0)])
