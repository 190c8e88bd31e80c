"""Edge cuts of simple graphs.

Three independent routes to minimum cuts live here: Stoer-Wagner for the
global value, Dinic max-flow between contracted vertex sets, and exhaustive
bipartition enumeration as an oracle for small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

import numpy as np

from .complex import Edge, Graph, make_edge
from .errors import InvalidInputError, OracleScaleExceeded
from .flow import UnitFlowNetwork

ORACLE_MAX_N = 22


@dataclass(frozen=True)
class EdgeCut:
    """The cut E(X, X-bar) given by one side ``side_x`` of a bipartition."""

    side_x: frozenset[int]
    side_xbar: frozenset[int]
    edges: frozenset[Edge]

    @classmethod
    def from_side(cls, g: Graph, side_x: Iterable[int]) -> EdgeCut:
        x = frozenset(side_x)
        xbar = frozenset(g.adj) - x
        if not x or not xbar:
            raise InvalidInputError("cut side must be a nonempty proper subset of the vertices")
        if not x <= g.adj.keys():
            raise InvalidInputError("cut side contains vertices outside the graph")
        edges = frozenset(make_edge(u, v) for u in x for v in g.adj[u] if v in xbar)
        return cls(x, xbar, edges)

    @property
    def cardinality(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    @property
    def smaller_side(self) -> frozenset[int]:
        if len(self.side_x) != len(self.side_xbar):
            return min(self.side_x, self.side_xbar, key=len)
        return self.side_x if min(self.side_x) < min(self.side_xbar) else self.side_xbar

    def to_dict(self) -> dict:
        return {
            "side_x": sorted(self.side_x),
            "edges": [list(e) for e in sorted(self.edges)],
            "cardinality": self.cardinality,
        }


@dataclass(frozen=True)
class CutClassification:
    trivial: bool
    star_vertex: int | None
    n_x: int
    n_xbar: int

    def to_dict(self) -> dict:
        return {"trivial": self.trivial, "star_vertex": self.star_vertex, "n_x": self.n_x, "n_xbar": self.n_xbar}


class ClassifiedCut(NamedTuple):
    cut: EdgeCut
    classification: CutClassification


def classify(g: Graph, cut: EdgeCut) -> CutClassification:
    """Triviality and the boundary counts |X ∩ V(D)|, |X-bar ∩ V(D)| of a cut."""
    if cut.side_x | cut.side_xbar != g.adj.keys() or cut.side_x & cut.side_xbar:
        raise InvalidInputError("cut sides do not partition the graph's vertices")
    if EdgeCut.from_side(g, cut.side_x).edges != cut.edges:
        raise InvalidInputError("cut edges do not match E(X, X-bar) in this graph")
    touched = {v for e in cut.edges for v in e}
    star = None
    if len(cut.side_x) == 1:
        (star,) = cut.side_x
    elif len(cut.side_xbar) == 1:
        (star,) = cut.side_xbar
    if star is not None:
        assert cut.edges == {make_edge(star, w) for w in g.adj[star]}
    return CutClassification(
        trivial=star is not None,
        star_vertex=star,
        n_x=len(touched & cut.side_x),
        n_xbar=len(touched & cut.side_xbar),
    )


def _check_nontrivial_size(g: Graph) -> None:
    if g.n < 2:
        raise InvalidInputError("cuts need a graph with at least two vertices")


def global_min_cut(g: Graph) -> EdgeCut:
    """Minimum edge cut by Stoer-Wagner on the sorted vertex order.

    Ties are broken towards the lowest index, so the result is deterministic.
    A disconnected graph yields the zero cut around the component of the
    smallest vertex.
    """
    _check_nontrivial_size(g)
    comps = g.components()
    if len(comps) > 1:
        return EdgeCut.from_side(g, comps[0])

    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    w = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        w[index[u], index[v]] = w[index[v], index[u]] = 1
    alive = np.ones(n, dtype=bool)
    groups = [[i] for i in range(n)]
    best_value, best_group = None, None

    for _ in range(n - 1):
        order = np.flatnonzero(alive)
        start = order[0]
        in_a = ~alive.copy()
        in_a[start] = True
        key = w[start].copy()
        prev, last, last_key = start, start, 0
        for _ in range(len(order) - 1):
            masked = np.where(in_a, -1, key)
            nxt = int(np.argmax(masked))
            prev, last, last_key = last, nxt, int(key[nxt])
            in_a[nxt] = True
            key += w[nxt]
        if best_value is None or last_key < best_value:
            best_value, best_group = last_key, list(groups[last])
        w[prev] += w[last]
        w[:, prev] += w[:, last]
        w[prev, prev] = 0
        w[last] = 0
        w[:, last] = 0
        alive[last] = False
        groups[prev].extend(groups[last])

    return EdgeCut.from_side(g, (verts[i] for i in best_group))


def edge_connectivity(g: Graph) -> int:
    return global_min_cut(g).cardinality


class _EdgeFlow:
    """Cached unit network of an undirected graph, indexed by sorted vertex order."""

    def __init__(self, g: Graph):
        self.graph = g
        self.verts = g.vertices
        self.index = {v: i for i, v in enumerate(self.verts)}
        self.net = UnitFlowNetwork(len(self.verts))
        for u, v in g.edges:
            self.net.add_arc(self.index[u], self.index[v], undirected=True)

    def cut(self, s_set, t_set, cutoff=None) -> tuple[int, frozenset[int] | None]:
        s_idx = [self.index[v] for v in s_set]
        value = self.net.max_flow(s_idx, (self.index[v] for v in t_set), cutoff)
        if cutoff is not None and value > cutoff:
            return value, None
        side = self.net.residual_reachable(s_idx)
        return value, frozenset(self.verts[i] for i in side)


def _edge_flow(g: Graph) -> _EdgeFlow:
    flow = g.__dict__.get("_edge_flow")
    if flow is None:
        flow = g.__dict__["_edge_flow"] = _EdgeFlow(g)
    return flow


def min_cut_between(g: Graph, s_set: Iterable[int], t_set: Iterable[int]) -> EdgeCut:
    """Minimum cut separating two vertex sets, each contracted to a terminal.

    Its cardinality is the maximum number of edge-disjoint paths from
    ``s_set`` to ``t_set``.  ``side_x`` is the smallest optimal source side
    (residual reachability), hence the sink side is as large as possible.
    """
    s_set, t_set = set(s_set), set(t_set)
    if not s_set or not t_set:
        raise InvalidInputError("terminal sets must be nonempty")
    if s_set & t_set:
        raise InvalidInputError("terminal sets overlap")
    missing = (s_set | t_set) - g.adj.keys()
    if missing:
        raise InvalidInputError(f"terminals not in graph: {sorted(missing)}")
    value, side = _edge_flow(g).cut(s_set, t_set)
    cut = EdgeCut.from_side(g, side)
    assert cut.cardinality == value
    return cut


def brute_force_min_cuts(g: Graph, max_n: int = ORACLE_MAX_N) -> list[ClassifiedCut]:
    """Every minimum cut, found by enumerating all 2^(n-1) - 1 bipartitions.

    The largest vertex is pinned to X-bar, so each cut appears once.
    """
    n = g.n
    if n > max_n:
        raise OracleScaleExceeded(f"exhaustive enumeration refused for n={n} > {max_n}")
    _check_nontrivial_size(g)
    if not g.is_connected():
        raise InvalidInputError("exhaustive oracle expects a connected graph")
    verts = g.vertices
    index = {v: i for i, v in enumerate(verts)}
    masks = np.arange(1, 1 << (n - 1), dtype=np.uint32)
    bits = [((masks >> i) & 1).astype(np.uint8) for i in range(n - 1)]
    bits.append(np.zeros(len(masks), dtype=np.uint8))
    counts = np.zeros(len(masks), dtype=np.uint16)
    for u, v in g.edges:
        counts += bits[index[u]] ^ bits[index[v]]
    best = counts.min()
    out = []
    for mask in masks[counts == best]:
        side = [verts[i] for i in range(n - 1) if (int(mask) >> i) & 1]
        cut = EdgeCut.from_side(g, side)
        out.append(ClassifiedCut(cut, classify(g, cut)))
    return out


def find_nontrivial_min_cut(g: Graph, lam: int) -> EdgeCut | None:
    """A minimum cut with at least two vertices on each side, or None.

    Both sides of a minimum cut of a connected graph induce connected
    subgraphs, so some nontrivial minimum cut (if any) puts a fixed vertex
    ``v0`` and one of its neighbours ``b`` on the same side and some ``c`` on
    the other.  For each (b, c) the flow from {v0, b} to c either exceeds
    ``lam`` or yields the optimal cut with the largest sink side, which is
    nontrivial iff a nontrivial optimal cut exists for that pair.
    """
    _check_nontrivial_size(g)
    true_lam = edge_connectivity(g)
    if lam != true_lam:
        raise InvalidInputError(f"lambda={lam} does not match the edge connectivity {true_lam}")
    if lam == 0:
        comps = sorted(g.components(), key=len)
        side: list[int] = []
        for comp in comps[:-1]:
            side += comp
            if len(side) >= 2:
                break
        if len(side) < 2 or g.n - len(side) < 2:
            return None
        return EdgeCut.from_side(g, side)
    if g.n < 4:
        return None
    flow = _edge_flow(g)
    v0 = min(g.vertices, key=lambda v: (g.degree(v), v))
    for b in g.neighbors(v0):
        for c in g.vertices:
            if c == v0 or c == b:
                continue
            value, side = flow.cut((v0, b), (c,), cutoff=lam)
            if side is not None and g.n - len(side) >= 2:
                assert value == lam
                return EdgeCut.from_side(g, side)
    return None


# --- vertex connectivity ------------------------------------------------------


class _SplitFlow:
    """Vertex-split network: node v becomes in=2i and out=2i+1 joined by a unit arc."""

    def __init__(self, g: Graph):
        self.index = {v: i for i, v in enumerate(g.vertices)}
        n = len(self.index)
        self.net = UnitFlowNetwork(2 * n)
        for i in range(n):
            self.net.add_arc(2 * i, 2 * i + 1)
        for u, v in g.edges:
            iu, iv = self.index[u], self.index[v]
            self.net.add_arc(2 * iu + 1, 2 * iv)
            self.net.add_arc(2 * iv + 1, 2 * iu)

    def local(self, s: int, t: int, cutoff: int | None = None) -> int:
        """Maximum number of internally disjoint s-t paths (s, t nonadjacent)."""
        return self.net.max_flow([2 * self.index[s] + 1], [2 * self.index[t]], cutoff)


def _split_flow(g: Graph) -> _SplitFlow:
    flow = g.__dict__.get("_split_flow")
    if flow is None:
        flow = g.__dict__["_split_flow"] = _SplitFlow(g)
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    if g.has_edge(s, t) or s == t:
        raise InvalidInputError("local vertex connectivity needs two distinct nonadjacent vertices")
    return _split_flow(g).local(s, t)


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff removing fewer than k vertices never disconnects g (and n > k)."""
    if k < 1:
        raise InvalidInputError("k must be at least 1")
    if g.n <= k:
        raise InvalidInputError(f"k-connectivity needs more than k={k} vertices, graph has {g.n}")
    if not g.is_connected():
        return False
    flow = _split_flow(g)
    for s, t in combinations(g.vertices, 2):
        if not g.has_edge(s, t) and flow.local(s, t, cutoff=k - 1) < k:
            return False
    return True


def vertex_connectivity(g: Graph) -> int:
    if g.n < 2:
        raise InvalidInputError("vertex connectivity needs at least two vertices")
    if not g.is_connected():
        return 0
    flow = _split_flow(g)
    best = g.n - 1
    for s, t in combinations(g.vertices, 2):
        if not g.has_edge(s, t):
            best = min(best, flow.local(s, t, cutoff=best))
    return best
