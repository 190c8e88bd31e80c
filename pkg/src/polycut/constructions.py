"""Constructors for simplicial spheres: simplices, cyclic polytopes, connected sums,
stacked chains, the large nontrivial-cut polytope, and random plane triangulations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping

from .complex import Edge, Facet, SimplicialComplex, make_edge, make_facet, require_valid, skeleton_graph
from .errors import FlipIllegalError, InvalidInputError, NotFoundError


@dataclass(frozen=True)
class LabeledConstruction:
    complex: SimplicialComplex
    labels: dict[str, int]
    f0: Facet
    f1: Facet
    designated_cut: frozenset[Edge] = field(default_factory=frozenset)
    provenance: dict = field(default_factory=dict)

    @property
    def d(self) -> int:
        return self.complex.dim_d

    def side_x(self) -> frozenset[int]:
        """Vertices on the ``f0`` side once the designated cut is deleted."""
        g = skeleton_graph(self.complex).without_edges(self.designated_cut)
        for comp in g.components():
            if self.f0[0] in comp:
                return frozenset(comp)
        raise AssertionError("f0 vertex missing from skeleton")

    def to_sidecar(self) -> dict:
        return {
            "labels": dict(sorted(self.labels.items(), key=lambda kv: int(kv[0].split("_")[1]))),
            "f0": list(self.f0),
            "f1": list(self.f1),
            "designated_cut": [list(e) for e in sorted(self.designated_cut)],
            "provenance": self.provenance,
        }


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the d-simplex on vertices 1..d+1."""
    if d < 2:
        raise InvalidInputError(f"simplex dimension must be at least 2, got {d}")
    return SimplicialComplex(d, combinations(range(1, d + 2), d))


def gale_evenness_facets(d: int, n: int) -> list[Facet]:
    """All d-subsets of 1..n satisfying Gale's evenness condition.

    A set qualifies iff each maximal run of consecutive members touching
    neither 1 nor n has even length; runs are built position by position.
    """
    out: list[Facet] = []
    chosen: list[int] = []

    def extend(i: int, run: int, leading: bool) -> None:
        if len(chosen) == d:
            if i <= n and run % 2 and not leading:
                return
            out.append(tuple(chosen))
            return
        if d - len(chosen) > n - i + 1:
            return
        chosen.append(i)
        extend(i + 1, run + 1, leading)
        chosen.pop()
        if run % 2 == 0 or leading:
            extend(i + 1, 0, False)

    extend(1, 0, True)
    return out


def cyclic_boundary(d: int, n: int) -> SimplicialComplex:
    """Boundary complex of the cyclic d-polytope with vertices 1..n."""
    if d < 2:
        raise InvalidInputError(f"dimension must be at least 2, got {d}")
    if n <= d:
        raise InvalidInputError(f"cyclic polytope needs n > d vertices, got n={n}, d={d}")
    return SimplicialComplex(d, gale_evenness_facets(d, n))


def glue(
    a: SimplicialComplex,
    fa,
    b: SimplicialComplex,
    fb,
    identify: Mapping[int, int] | None = None,
) -> tuple[SimplicialComplex, dict[int, int]]:
    """Connected sum plus the renaming applied to ``b``'s vertices.

    ``identify`` maps each vertex of ``fa`` to its partner in ``fb``; by default
    the sorted vertices are paired in order.  Vertices of ``b`` outside ``fb``
    receive fresh ids above ``max(a)``, assigned in increasing order.
    """
    fa, fb = make_facet(fa), make_facet(fb)
    if a.dim_d != b.dim_d:
        raise InvalidInputError(f"dimension mismatch: {a.dim_d} vs {b.dim_d}")
    if fa not in a.facet_set:
        raise NotFoundError(f"{fa} is not a facet of the first complex")
    if fb not in b.facet_set:
        raise NotFoundError(f"{fb} is not a facet of the second complex")
    require_valid(a)
    require_valid(b)
    if identify is None:
        identify = dict(zip(fa, fb))
    if set(identify) != set(fa) or set(identify.values()) != set(fb):
        raise InvalidInputError("identification must be a bijection from fa onto fb")

    rename = {w: v for v, w in identify.items()}
    fresh = max(a.vertex_set) + 1
    for w in sorted(b.vertex_set - set(fb)):
        rename[w] = fresh
        fresh += 1

    kept_a = [f for f in a.facets if f != fa]
    kept_b = [make_facet(rename[w] for w in f) for f in b.facets if f != fb]
    clash = set(kept_a) & set(kept_b)
    if clash:
        raise InvalidInputError(f"identification makes facets coincide, e.g. {min(clash)}")
    return SimplicialComplex(a.dim_d, kept_a + kept_b), rename


def connected_sum(a, fa, b, fb, identify=None) -> SimplicialComplex:
    return glue(a, fa, b, fb, identify)[0]


def stacked_chain(d: int) -> LabeledConstruction:
    """The stacked polytope P_{2d} with vertices labelled x_1..x_{2d} by id 1..2d.

    Each step glues a fresh d-simplex onto the facet spanned by the last d
    labelled vertices, so x_i and x_j are adjacent iff |i - j| <= d.
    """
    if d < 3:
        raise InvalidInputError(f"stacked chain needs d >= 3, got {d}")
    simplex = boundary_simplex(d)
    base = tuple(range(1, d + 1))
    chain = simplex
    for j in range(d + 1, 2 * d):
        chain, rename = glue(chain, range(j + 1 - d, j + 1), simplex, base)
        assert rename[d + 1] == j + 1
    f0 = tuple(range(1, d + 1))
    f1 = tuple(range(d + 1, 2 * d + 1))
    cut = frozenset(make_edge(u, v) for u in f0 for v in f1 if v - u <= d)
    return LabeledConstruction(
        complex=chain,
        labels={f"x_{i}": i for i in range(1, 2 * d + 1)},
        f0=f0,
        f1=f1,
        designated_cut=cut,
        provenance={"kind": "stacked-chain", "d": d},
    )


def cyclic_factor_size(d: int) -> int:
    """Vertex count of the cyclic factors: smallest complete skeleton with degree (d^2+d)/2."""
    return (d * d + d) // 2 + 1


def nontrivial_cut_polytope(d: int) -> LabeledConstruction:
    """C # P_{2d} # C with cyclic d-polytopes C glued onto both end facets of the chain.

    The designated cut (all chain edges between the end facets) survives the
    gluing unchanged, since every new vertex lies on one side only.
    """
    if d < 4:
        raise InvalidInputError(f"the nontrivial-cut construction needs d >= 4, got {d}")
    chain = stacked_chain(d)
    cyclic = cyclic_boundary(d, cyclic_factor_size(d))
    glue_facet = cyclic.facets[0]
    result, _ = glue(chain.complex, chain.f0, cyclic, glue_facet)
    result, _ = glue(result, chain.f1, cyclic, glue_facet)
    return LabeledConstruction(
        complex=result,
        labels=dict(chain.labels),
        f0=chain.f0,
        f1=chain.f1,
        designated_cut=chain.designated_cut,
        provenance={"kind": "nontrivial", "d": d, "cyclic_n": cyclic_factor_size(d)},
    )


def random_connected_sum_sphere(
    d: int,
    n_parts: int,
    seed: int,
    max_cyclic_extra: int = 6,
    simplex_prob: float = 0.4,
) -> SimplicialComplex:
    """Random chain of connected sums of simplex and cyclic-polytope boundaries.

    Each new part is glued along a uniformly random facet of the accumulated
    complex and a random facet of the part, with a random vertex pairing.
    """
    if d < 2 or n_parts < 1:
        raise InvalidInputError("need d >= 2 and at least one part")
    rng = random.Random(seed)

    def part():
        if rng.random() < simplex_prob:
            return boundary_simplex(d)
        return cyclic_boundary(d, rng.randint(d + 2, d + 2 + max_cyclic_extra))

    result = part()
    for _ in range(n_parts - 1):
        nxt = part()
        fa = rng.choice(result.facets)
        fb = list(rng.choice(nxt.facets))
        rng.shuffle(fb)
        result = connected_sum(result, fa, nxt, sorted(fb), identify=dict(zip(fa, fb)))
    return result


# --- plane triangulations -----------------------------------------------------


def _edge_triangles(triangles) -> dict[Edge, list[int]]:
    """Map each edge to the opposite vertices of the triangles containing it."""
    opp: dict[Edge, list[int]] = {}
    for t in triangles:
        a, b, c = t
        opp.setdefault((a, b), []).append(c)
        opp.setdefault((a, c), []).append(b)
        opp.setdefault((b, c), []).append(a)
    return opp


def _flip_problem(opp, degree, edge) -> str | None:
    u, v = edge
    across = opp.get(edge)
    if across is None:
        return f"{edge} is not an edge"
    if len(across) != 2:
        return f"{edge} lies in {len(across)} triangles"
    w, x = across
    if make_edge(w, x) in opp:
        return f"opposite vertices {w} and {x} are already adjacent"
    if degree[u] < 4 or degree[v] < 4:
        return f"an endpoint of {edge} has degree 3"
    return None


def _degrees(opp) -> dict[int, int]:
    deg: dict[int, int] = {}
    for u, v in opp:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return deg


def _apply_flip(triangles: set, u: int, v: int, w: int, x: int) -> None:
    triangles.discard(make_facet((u, v, w)))
    triangles.discard(make_facet((u, v, x)))
    triangles.add(make_facet((u, w, x)))
    triangles.add(make_facet((v, w, x)))


def edge_flip(complex: SimplicialComplex, edge) -> SimplicialComplex:
    """Replace triangles uvw, uvx by uwx, vwx."""
    if complex.dim_d != 3:
        raise FlipIllegalError("edge flips are defined on 2-spheres (d = 3)")
    require_valid(complex)
    e = make_edge(*edge)
    opp = _edge_triangles(complex.facets)
    problem = _flip_problem(opp, _degrees(opp), e)
    if problem:
        raise FlipIllegalError(problem)
    triangles = set(complex.facets)
    _apply_flip(triangles, *e, *opp[e])
    return SimplicialComplex(3, triangles)


def random_plane_triangulation(n: int, flip_count: int, seed: int, bias: float = 0.0) -> SimplicialComplex:
    """Stacked 2-sphere on n vertices followed by ``flip_count`` random legal flips.

    Stacking inserts vertex k+1 into a uniformly random triangle.  Each flip is
    drawn uniformly from the currently legal edges; with none legal (only for
    n = 4) flipping stops early.  Uniform flips almost never remove every
    degree-3 vertex, so with probability ``bias`` a flip is instead drawn from
    the legal edges opposite a vertex of minimum degree, which raises it.
    """
    if n < 4:
        raise InvalidInputError(f"a plane triangulation needs n >= 4, got {n}")
    if flip_count < 0:
        raise InvalidInputError("flip_count must be non-negative")
    if not 0.0 <= bias <= 1.0:
        raise InvalidInputError("bias must lie in [0, 1]")
    rng = random.Random(seed)
    triangles = set(boundary_simplex(3).facets)
    for k in range(4, n):
        a, b, c = rng.choice(sorted(triangles))
        triangles.remove((a, b, c))
        triangles.update(((a, b, k + 1), (a, c, k + 1), (b, c, k + 1)))
    for _ in range(flip_count):
        opp = _edge_triangles(triangles)
        degree = _degrees(opp)
        legal = [e for e in sorted(opp) if _flip_problem(opp, degree, e) is None]
        if not legal:
            break
        if bias and rng.random() < bias:
            low = min(degree.values())
            raising = [e for e in legal if min(degree[w] for w in opp[e]) == low]
            legal = raising or legal
        u, v = rng.choice(legal)
        _apply_flip(triangles, u, v, *opp[(u, v)])
    return SimplicialComplex(3, triangles)
