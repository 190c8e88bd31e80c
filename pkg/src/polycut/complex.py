"""Pure simplicial complexes stored as facet lists, their 1-skeletons and links.

A complex of polytope dimension ``d`` has facets with exactly ``d`` vertices.
Only necessary conditions for being a polytope boundary are checked here:
purity, the pseudomanifold property, dual connectivity, and Euler's relation
when ``d == 3``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Iterator

from .errors import FacetListFormatError, InvalidComplexError, InvalidInputError, NotFoundError

Facet = tuple[int, ...]
Edge = tuple[int, int]


def make_facet(vertices: Iterable[int]) -> Facet:
    facet = tuple(sorted(int(v) for v in vertices))
    if len(set(facet)) != len(facet):
        raise InvalidInputError(f"facet {facet} has repeated vertices")
    if facet and facet[0] < 0:
        raise InvalidInputError(f"facet {facet} has a negative vertex id")
    return facet


def make_edge(u: int, v: int) -> Edge:
    if u == v:
        raise InvalidInputError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class SimplicialComplex:
    """Immutable facet list of a candidate boundary complex of a simplicial ``dim_d``-polytope.

    Facets are canonicalised (sorted vertex tuples, sorted facet list).  Repeated
    facets are collapsed but counted, so that :func:`validate` can report them.
    """

    def __init__(self, dim_d: int, facets: Iterable[Iterable[int]]):
        if int(dim_d) < 2:
            raise InvalidInputError(f"dimension must be at least 2, got {dim_d}")
        canon = [make_facet(f) for f in facets]
        unique = sorted(set(canon))
        self.dim_d = int(dim_d)
        self.facets: tuple[Facet, ...] = tuple(unique)
        self.duplicate_facets = len(canon) - len(unique)

    @cached_property
    def facet_set(self) -> frozenset[Facet]:
        return frozenset(self.facets)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for f in self.facets for v in f)

    @property
    def vertices(self) -> list[int]:
        return sorted(self.vertex_set)

    @property
    def n_vertices(self) -> int:
        return len(self.vertex_set)

    def __len__(self) -> int:
        return len(self.facets)

    def __contains__(self, facet) -> bool:
        return tuple(sorted(facet)) in self.facet_set

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.dim_d == other.dim_d and self.facets == other.facets

    def __hash__(self) -> int:
        return hash((self.dim_d, self.facets))

    def __repr__(self) -> str:
        return f"SimplicialComplex(dim_d={self.dim_d}, n_vertices={self.n_vertices}, n_facets={len(self.facets)})"

    def relabel(self, mapping: dict[int, int]) -> SimplicialComplex:
        return SimplicialComplex(self.dim_d, ([mapping.get(v, v) for v in f] for f in self.facets))

    @cached_property
    def report(self) -> ValidationReport:
        return validate(self)


@dataclass(frozen=True)
class ValidationReport:
    dim_d: int
    n_vertices: int
    n_facets: int
    pure: bool
    duplicate_facets: int
    pseudomanifold: bool
    dual_connected: bool
    euler_characteristic: int | None = None
    problems: tuple[str, ...] = field(default=())

    @property
    def euler_ok(self) -> bool | None:
        if self.euler_characteristic is None:
            return None
        return self.euler_characteristic == 2

    @property
    def valid(self) -> bool:
        return (
            self.pure
            and self.duplicate_facets == 0
            and self.pseudomanifold
            and self.dual_connected
            and self.euler_ok is not False
        )

    def to_dict(self) -> dict:
        return {
            "dim_d": self.dim_d,
            "n_vertices": self.n_vertices,
            "n_facets": self.n_facets,
            "pure": self.pure,
            "duplicate_facets": self.duplicate_facets,
            "pseudomanifold": self.pseudomanifold,
            "dual_connected": self.dual_connected,
            "euler_characteristic": self.euler_characteristic,
            "euler_ok": self.euler_ok,
            "valid": self.valid,
            "problems": list(self.problems),
        }


def validate(complex: SimplicialComplex) -> ValidationReport:
    """Check the necessary conditions for ``complex`` to be a polytope boundary."""
    facets = complex.facets
    if not facets:
        raise InvalidInputError("complex has no facets")
    d = complex.dim_d
    problems = []

    impure = [f for f in facets if len(f) != d]
    pure = not impure
    if impure:
        problems.append(f"{len(impure)} facet(s) do not have {d} vertices, e.g. {impure[0]}")
    if complex.duplicate_facets:
        problems.append(f"{complex.duplicate_facets} duplicate facet(s)")

    ridges: dict[Facet, list[int]] = {}
    for i, f in enumerate(facets):
        for r in combinations(f, len(f) - 1):
            ridges.setdefault(r, []).append(i)
    bad = [r for r, owners in ridges.items() if len(owners) != 2]
    pseudomanifold = pure and not bad
    if bad:
        r = min(bad)
        problems.append(f"{len(bad)} ridge(s) not in exactly two facets, e.g. {r} in {len(ridges[r])}")

    # union-find over the facet-ridge adjacency
    parent = list(range(len(facets)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for owners in ridges.values():
        root = find(owners[0])
        for other in owners[1:]:
            parent[find(other)] = root
    n_classes = len({find(i) for i in range(len(facets))})
    dual_connected = n_classes == 1
    if not dual_connected:
        problems.append(f"dual graph has {n_classes} components")

    euler = None
    if d == 3 and pure:
        n = len(complex.vertex_set)
        e = len({make_edge(a, b) for f in facets for a, b in combinations(f, 2)})
        euler = n - e + len(facets)
        if euler != 2:
            problems.append(f"Euler characteristic n - e + f = {euler}, expected 2")

    return ValidationReport(
        dim_d=d,
        n_vertices=len(complex.vertex_set),
        n_facets=len(facets),
        pure=pure,
        duplicate_facets=complex.duplicate_facets,
        pseudomanifold=pseudomanifold,
        dual_connected=dual_connected,
        euler_characteristic=euler,
        problems=tuple(problems),
    )


def require_valid(complex: SimplicialComplex) -> None:
    report = complex.report
    if not report.valid:
        raise InvalidComplexError("invalid complex: " + "; ".join(report.problems), report)


class Graph:
    """Undirected simple graph with a sorted adjacency map."""


    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = make_edge(int(u), int(v))
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        self.adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in sorted(adj)}

    @cached_property
    def vertices(self) -> list[int]:
        return list(self.adj)

    @cached_property
    def edges(self) -> list[Edge]:
        return sorted((u, v) for u, nbrs in self.adj.items() for v in nbrs if u < v)

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    def subgraph(self, vertices: Iterable[int]) -> Graph:
        keep = set(vertices)
        return Graph(keep, ((u, v) for u, v in self.edges if u in keep and v in keep))

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> Graph:
        drop = {make_edge(u, v) for u, v in edges}
        return Graph(self.vertices, (e for e in self.edges if e not in drop))

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        comps = []
        for s in self.adj:
            if s in seen:
                continue
            seen.add(s)
            comp = [s]
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adj[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.append(w)
                        queue.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def skeleton_graph(complex: SimplicialComplex) -> Graph:
    """1-skeleton: two vertices are adjacent iff they share a facet."""
    require_valid(complex)
    edges = set()
    for f in complex.facets:
        edges.update(combinations(f, 2))
    return Graph(complex.vertex_set, edges)


def link(complex: SimplicialComplex, v: int) -> SimplicialComplex:
    """Facets containing ``v`` with ``v`` removed, one dimension lower."""
    if v not in complex.vertex_set:
        raise NotFoundError(f"vertex {v} is not in the complex")
    if complex.dim_d <= 2:
        raise InvalidInputError("links are only taken in complexes of dimension d >= 3")
    return SimplicialComplex(complex.dim_d - 1, (tuple(u for u in f if u != v) for f in complex.facets if v in f))


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InvalidInputError("empty graph has no minimum degree")
    return min(len(nbrs) for nbrs in g.adj.values())


# --- facet-list text format -------------------------------------------------


def format_facet_list(complex: SimplicialComplex, header: Iterable[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines.append(f"dim {complex.dim_d}")
    lines.extend(" ".join(map(str, f)) for f in complex.facets)
    return "\n".join(lines) + "\n"


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def iter_facet_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if line:
            yield lineno, line


def parse_facet_list(text: str) -> SimplicialComplex:
    lines = iter_facet_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise FacetListFormatError("empty facet list: missing 'dim <d>' header") from None
    parts = first.split()
    if len(parts) != 2 or parts[0] != "dim":
        raise FacetListFormatError(f"line {lineno}: expected 'dim <d>', got {first!r}")
    try:
        d = int(parts[1])
    except ValueError:
        raise FacetListFormatError(f"line {lineno}: bad dimension {parts[1]!r}") from None
    facets = []
    for lineno, line in lines:
        try:
            facets.append([int(tok) for tok in line.split()])
        except ValueError:
            raise FacetListFormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
    if not facets:
        raise FacetListFormatError("facet list has no facets")
    try:
        return SimplicialComplex(d, facets)
    except InvalidInputError as exc:
        raise FacetListFormatError(str(exc)) from None


def read_facet_list(path) -> SimplicialComplex:
    return parse_facet_list(Path(path).read_text())


def write_facet_list(complex: SimplicialComplex, path, header: Iterable[str] = ()) -> None:
    Path(path).write_text(format_facet_list(complex, header))
