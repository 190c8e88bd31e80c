import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polycut.complex import (
    Graph,
    SimplicialComplex,
    format_facet_list,
    link,
    min_degree,
    parse_facet_list,
    read_facet_list,
    skeleton_graph,
    validate,
    write_facet_list,
)
from polycut.constructions import (
    boundary_simplex,
    cyclic_boundary,
    random_connected_sum_sphere,
    random_plane_triangulation,
)
from polycut.cuts import vertex_connectivity_at_least
from polycut.errors import FacetListFormatError, InvalidComplexError, InvalidInputError, NotFoundError

from helpers import complete_graph

TETRA = SimplicialComplex(3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])


def test_tetrahedron_passes_all_checks():
    rep = validate(TETRA)
    assert rep.valid and rep.pure and rep.pseudomanifold and rep.dual_connected
    assert rep.euler_characteristic == 4 - 6 + 4 == 2


def test_missing_facets_fail_pseudomanifold():
    rep = validate(SimplicialComplex(3, [(1, 2, 3), (1, 2, 4)]))
    assert rep.pure
    assert not rep.pseudomanifold
    assert not rep.valid


def test_empty_facet_list_rejected():
    with pytest.raises(InvalidInputError):
        validate(SimplicialComplex(3, []))


def test_impure_and_duplicate_facets_reported():
    rep = validate(SimplicialComplex(3, [(1, 2, 3), (1, 2), (2, 1, 3)]))
    assert not rep.pure
    assert rep.duplicate_facets == 1
    assert not rep.valid


def test_disconnected_dual_graph():
    two = SimplicialComplex(3, list(TETRA.facets) + [tuple(v + 10 for v in f) for f in TETRA.facets])
    rep = validate(two)
    assert rep.pseudomanifold and not rep.dual_connected


def test_two_tetrahedra_sharing_vertex_break_euler():
    pinched = SimplicialComplex(3, list(TETRA.facets) + [tuple(v + 3 for v in f) for f in TETRA.facets])
    rep = validate(pinched)
    assert rep.euler_characteristic == 7 - 12 + 8
    assert not rep.valid


def test_repeated_vertex_in_facet_rejected():
    with pytest.raises(InvalidInputError):
        SimplicialComplex(3, [(1, 1, 2)])


def test_invalid_complex_has_no_skeleton():
    with pytest.raises(InvalidComplexError) as exc:
        skeleton_graph(SimplicialComplex(3, [(1, 2, 3), (1, 2, 4)]))
    assert exc.value.report is not None


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_simplex_skeleton_is_complete(d):
    assert skeleton_graph(boundary_simplex(d)) == complete_graph(d + 1)


def test_octahedron_skeleton(octahedron):
    g = skeleton_graph(octahedron)
    assert g.m == 12
    assert {g.degree(v) for v in g.vertices} == {4}


def test_cyclic_4_11_is_neighborly():
    assert skeleton_graph(cyclic_boundary(4, 11)) == complete_graph(11)


def test_link_in_tetrahedron():
    assert link(TETRA, 4) == SimplicialComplex(2, [(1, 2), (1, 3), (2, 3)])


def test_link_of_apex_in_stacked_3sphere():
    # two 4-simplices glued along 1234; apexes 5 and 6
    stacked = SimplicialComplex(4, [f + (5,) for f in TETRA.facets] + [f + (6,) for f in TETRA.facets])
    assert validate(stacked).valid
    assert link(stacked, 5) == TETRA


def test_link_of_apex_in_five_vertex_stacked_2sphere():
    stacked = SimplicialComplex(3, [(1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5)])
    assert link(stacked, 4) == SimplicialComplex(2, [(1, 2), (1, 3), (2, 3)])


def test_links_of_cyclic_4_7():
    cx = cyclic_boundary(4, 7)
    for v in cx.vertices:
        lk = link(cx, v)
        assert validate(lk).valid
        assert vertex_connectivity_at_least(skeleton_graph(lk), 3)


def test_link_of_missing_vertex():
    with pytest.raises(NotFoundError):
        link(TETRA, 9)


def test_min_degree_examples(octahedron):
    assert min_degree(complete_graph(5)) == 4
    assert min_degree(skeleton_graph(octahedron)) == 4
    with pytest.raises(InvalidInputError):
        min_degree(Graph())


def test_graph_rejects_loops():
    with pytest.raises(InvalidInputError):
        Graph([1], [(1, 1)])


# --- properties ----------------------------------------------------------------

spheres = st.one_of(
    st.builds(random_plane_triangulation, st.integers(4, 25), st.integers(0, 80), st.integers(0, 10**6)),
    st.builds(random_connected_sum_sphere, st.integers(3, 5), st.integers(1, 4), st.integers(0, 10**6)),
)


@settings(max_examples=40, deadline=None)
@given(spheres, st.data())
def test_links_are_pure_pseudomanifolds(cx, data):
    v = data.draw(st.sampled_from(cx.vertices))
    lk = link(cx, v)
    rep = validate(lk)
    assert rep.pure and rep.pseudomanifold
    assert lk.dim_d == cx.dim_d - 1


@settings(max_examples=40, deadline=None)
@given(spheres, st.data())
def test_link_skeleton_is_the_edges_of_facets_through_the_vertex(cx, data):
    v = data.draw(st.sampled_from(cx.vertices))
    g = skeleton_graph(cx)
    lg = skeleton_graph(link(cx, v))
    expected = {tuple(sorted(p)) for f in cx.facets if v in f for p in combinations(set(f) - {v}, 2)}
    assert set(lg.edges) == expected
    assert set(lg.edges) <= set(g.subgraph(g.adj[v]).edges)


def test_link_skeleton_can_miss_an_empty_triangle():
    # the glued facet 1 2 3 of a stacked sphere is an empty triangle through 1
    stacked = SimplicialComplex(3, [(1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (1, 3, 5), (2, 3, 5)])
    g = skeleton_graph(stacked)
    assert set(skeleton_graph(link(stacked, 1)).edges) == {(2, 4), (3, 4), (2, 5), (3, 5)}
    assert (2, 3) in g.subgraph(g.adj[1]).edges


@settings(max_examples=30, deadline=None)
@given(st.integers(4, 40), st.integers(0, 200), st.integers(0, 10**6))
def test_triangulation_edge_count(n, flips, seed):
    g = skeleton_graph(random_plane_triangulation(n, flips, seed))
    assert g.m == 3 * g.n - 6


def test_skeleton_is_deterministic():
    cx = random_connected_sum_sphere(4, 3, 11)
    shuffled = list(cx.facets)
    random.Random(0).shuffle(shuffled)
    assert skeleton_graph(SimplicialComplex(4, shuffled)).edges == skeleton_graph(cx).edges


# --- facet-list format ----------------------------------------------------------


def test_parse_with_comments_and_blank_lines():
    text = "# a tetrahedron\n\ndim 3\n2 3 4  # last\n1 2 3\n1 2 4\n1 3 4\n"
    assert parse_facet_list(text) == TETRA


def test_canonical_serialization_sorts_facets():
    text = format_facet_list(SimplicialComplex(3, [(4, 3, 2), (1, 2, 3), (1, 4, 2), (4, 1, 3)]))
    assert text == "dim 3\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n"


@pytest.mark.parametrize(
    "text",
    ["", "1 2 3\n", "dim x\n1 2 3\n", "dim 3\n1 2 a\n", "dim 3\n", "dim 3 4\n1 2 3\n", "dim 3\n1 1 2\n"],
)
def test_malformed_facet_lists(text):
    with pytest.raises(FacetListFormatError):
        parse_facet_list(text)


def test_file_round_trip(tmp_path):
    cx = cyclic_boundary(4, 8)
    path = tmp_path / "c.fl"
    write_facet_list(cx, path, header=["cyclic"])
    assert read_facet_list(path) == cx
    assert format_facet_list(read_facet_list(path), header=["cyclic"]) == path.read_text()
