"""Small fixtures shared by the test modules."""

import random
from itertools import combinations

from polycut.complex import Graph, SimplicialComplex

OCTAHEDRON = SimplicialComplex(3, [(a, b, c) for a in (1, 2) for b in (3, 4) for c in (5, 6)])


def complete_graph(n, start=1):
    vs = range(start, start + n)
    return Graph(vs, combinations(vs, 2))


def path_graph(n):
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def random_connected_graph(rng: random.Random, n_min=2, n_max=10):
    """Random spanning tree plus each remaining pair with a random density."""
    n = rng.randint(n_min, n_max)
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    p = rng.random()
    edges |= {e for e in combinations(range(n), 2) if rng.random() < p}
    return Graph(range(n), edges)

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []
