import json

import numpy as np
import pytest
from hypothesis import given

from conftest import connected_graphs, graphs
from oracles import cut_vertices_by_removal, floyd_warshall
from metricbasis import kernels
from metricbasis.errors import DisconnectedGraph, InvalidGraph
from metricbasis.graph import (
    TwinKind,
    all_pairs_distances,
    canonical_form,
    complement,
    complete_graph,
    connected_components,
    cut_vertices,
    cycle_graph,
    disjoint_union,
    from_edge_list,
    from_json,
    from_labelled_edges,
    induced_subgraph,
    is_path,
    is_tree,
    is_unicyclic,
    load_graph,
    parse_edge_list,
    path_graph,
    pendants,
    remove_vertex,
    star_graph,
    to_dot,
    to_edge_list,
    to_json,
    twin_classes,
    universal_vertices,
)


def test_rejects_self_loop_and_bad_ids():
    with pytest.raises(InvalidGraph):
        from_edge_list(3, [(0, 0)])
    with pytest.raises(InvalidGraph):
        from_edge_list(3, [(0, 3)])


def test_basic_families():
    assert path_graph(5).num_edges == 4
    assert cycle_graph(6).num_edges == 6
    assert complete_graph(5).num_edges == 10
    s = star_graph(4)
    assert s.degree(0) == 4 and pendants(s) == {1, 2, 3, 4}
    assert universal_vertices(s) == {0}


def test_labels_and_lookup():
    g = from_labelled_edges([("a", "b"), ("b", "c")])
    assert g.vertex("b") == 1 and g.label(2) == "c"
    assert g.vertex(0) == 0


def test_distances_raise_on_disconnected():
    g = from_edge_list(4, [(0, 1), (2, 3)])
    assert not g.is_connected()
    with pytest.raises(DisconnectedGraph):
        g.distances()
    d = all_pairs_distances(g)
    assert d[0, 2] == -1 and d[0, 1] == 1


@given(graphs(max_n=10))
def test_bfs_matches_floyd_warshall(g):
    want = np.array(floyd_warshall(g.n, g.edges))
    for backend in kernels.BACKENDS:
        if backend == "numba" and not kernels.numba_available():
            continue
        assert np.array_equal(all_pairs_distances(g, backend), want)


@given(connected_graphs(max_n=10))
def test_cut_vertices_match_removal_oracle(g):
    assert cut_vertices(g) == cut_vertices_by_removal(g.n, g.edges)


@given(graphs(max_n=9))
def test_components_partition_vertices(g):
    comps = connected_components(g)
    assert sorted(v for c in comps for v in c) == list(range(g.n))


@given(graphs(min_n=2, max_n=9))
def test_twins_are_twins(g):
    tc = twin_classes(g)
    for cls, kind in tc.nontrivial():
        for u in cls:
            for v in cls:
                if kind is TwinKind.TRUE:
                    assert g.closed_nbhd(u) == g.closed_nbhd(v)
                else:
                    assert g.adj[u] == g.adj[v]
    # maximality: no two singletons are twins
    singles = [c[0] for c, k in zip(tc.classes, tc.kinds) if k is TwinKind.SINGLETON]
    for i, u in enumerate(singles):
        for v in singles[i + 1:]:
            assert g.adj[u] != g.adj[v] and g.closed_nbhd(u) != g.closed_nbhd(v)


@given(graphs(max_n=8))
def test_complement_is_involution(g):
    c = complement(g)
    assert c.num_edges + g.num_edges == g.n * (g.n - 1) // 2
    assert complement(c) == g


def test_shape_predicates():
    assert is_path(path_graph(4)) and not is_path(star_graph(3))
    assert is_tree(star_graph(3)) and not is_tree(cycle_graph(4))
    assert is_unicyclic(cycle_graph(5)) and not is_unicyclic(complete_graph(4))


def test_induced_and_remove():
    g = cycle_graph(5)
    h, m = remove_vertex(g, 0)
    assert is_path(h) and m == {1: 0, 2: 1, 3: 2, 4: 3}
    h, _ = induced_subgraph(g, [0, 1, 2])
    assert h.num_edges == 2


def test_disjoint_union_offsets():
    g, offs = disjoint_union([path_graph(2), cycle_graph(3)])
    assert offs == [0, 2] and g.n == 5 and g.num_edges == 4


def test_canonical_form_detects_isomorphism():
    a = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
    b = from_edge_list(4, [(2, 0), (0, 3), (3, 1)])
    assert canonical_form(a) == canonical_form(b)
    assert canonical_form(a) != canonical_form(star_graph(3))


@given(graphs(max_n=8))
def test_edge_list_and_json_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g
    assert from_json(to_json(g)) == g


def test_json_keeps_labels():
    g = from_labelled_edges([("x", "y")])
    back = from_json(to_json(g))
    assert back.labels == ("x", "y")
    assert json.loads(to_json(g))["labels"] == {"0": "x", "1": "y"}


def test_parse_errors():
    with pytest.raises(InvalidGraph):
        parse_edge_list("")
    with pytest.raises(InvalidGraph):
        parse_edge_list("3 2\n0 1\n")
    with pytest.raises(InvalidGraph):
        parse_edge_list("3 1\n0 1 2\n")
    with pytest.raises(InvalidGraph):
        from_json("{not json")


def test_comments_are_ignored():
    g = parse_edge_list("# path\n3 2\n0 1  # first\n1 2\n")
    assert is_path(g)


def test_load_graph(tmp_path):
    p = tmp_path / "g.edges"
    p.write_text(to_edge_list(cycle_graph(4)))
    assert load_graph(str(p)) == cycle_graph(4)
    q = tmp_path / "g.json"
    q.write_text(to_json(star_graph(2)))
    assert load_graph(str(q)) == star_graph(2)


def test_dot_output():
    out = to_dot(path_graph(2), highlight={0: "black"})
    assert out.startswith('graph "G" {') and "0 -- 1;" in out and "fillcolor" in out
